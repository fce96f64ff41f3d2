#include "artmod/backend/tokenizer.hpp"

#include <cctype>
#include <fstream>
#include <limits>

#include "artmod/backend/errors.hpp"

namespace artmod::backend {

namespace {

std::string utf8(unsigned cp) {
    std::string s;
    if (cp < 0x80) {
        s.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        s.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        s.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        s.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return s;
}

// GPT-2 style reversible byte -> printable code point table, in the same
// order the reference implementation builds its vocabulary.
std::vector<std::pair<int, unsigned>> bytes_to_unicode() {
    std::vector<std::pair<int, unsigned>> table;
    std::vector<bool> printable(256, false);
    auto add_range = [&](int lo, int hi) {
        for (int b = lo; b <= hi; ++b) {
            printable[b] = true;
            table.emplace_back(b, static_cast<unsigned>(b));
        }
    };
    add_range('!', '~');
    add_range(0xA1, 0xAC);
    add_range(0xAE, 0xFF);
    unsigned n = 0;
    for (int b = 0; b < 256; ++b) {
        if (!printable[b]) table.emplace_back(b, 256 + n++);
    }
    return table;
}

bool is_letter(unsigned char c) { return std::isalpha(c) || c >= 0x80; }

// CLIP pre-tokenization: contractions, letter runs, single digits, and runs
// of everything else; whitespace separates.
std::vector<std::string> split_words(const std::string& text) {
    static const char* const kContractions[] = {"'s", "'t", "'re", "'ve", "'m", "'ll", "'d"};
    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        bool matched = false;
        for (const char* con : kContractions) {
            const std::string_view cv(con);
            if (text.compare(i, cv.size(), cv) == 0) {
                words.emplace_back(cv);
                i += cv.size();
                matched = true;
                break;
            }
        }
        if (matched) continue;
        std::size_t j = i + 1;
        if (is_letter(c)) {
            while (j < text.size() && is_letter(static_cast<unsigned char>(text[j]))) ++j;
        } else if (!std::isdigit(c)) {
            while (j < text.size()) {
                const auto d = static_cast<unsigned char>(text[j]);
                if (std::isspace(d) || is_letter(d) || std::isdigit(d)) break;
                ++j;
            }
        }
        words.push_back(text.substr(i, j - i));
        i = j;
    }
    return words;
}

std::string normalize(std::string_view text) {
    std::string out;
    bool pending_space = false;
    for (char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        if (std::isspace(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(static_cast<char>(std::tolower(c)));
    }
    return out;
}

}  // namespace

ClipTokenizer::ClipTokenizer(std::vector<Merge> merges) {
    byte_symbol_.resize(256);
    std::vector<std::string> vocab_list;
    const auto table = bytes_to_unicode();
    for (const auto& [b, cp] : table) {
        byte_symbol_[b] = utf8(cp);
        vocab_list.push_back(byte_symbol_[b]);
    }
    for (std::size_t i = 0; i < 256; ++i) vocab_list.push_back(vocab_list[i] + "</w>");
    for (std::size_t r = 0; r < merges.size(); ++r) {
        const auto& [a, b] = merges[r];
        ranks_.emplace(a + " " + b, static_cast<int>(r));
        vocab_list.push_back(a + b);
    }
    vocab_list.emplace_back("<|startoftext|>");
    vocab_list.emplace_back("<|endoftext|>");
    for (std::size_t i = 0; i < vocab_list.size(); ++i) vocab_.emplace(vocab_list[i], static_cast<int>(i));
    sot_ = static_cast<int>(vocab_list.size() - 2);
    eot_ = static_cast<int>(vocab_list.size() - 1);
}

ClipTokenizer ClipTokenizer::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw BackendError(BackendError::Kind::missing_file, "tokenizer merges file not found: '" + path.string() + "'");
    std::vector<Merge> merges;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first && line.starts_with('#')) {
            first = false;
            continue;
        }
        first = false;
        if (line.empty()) continue;
        const auto sp = line.find(' ');
        if (sp == std::string::npos || sp == 0 || sp + 1 == line.size()) {
            throw BackendError(BackendError::Kind::invalid_spec, "malformed merge rule '" + line + "'");
        }
        merges.emplace_back(line.substr(0, sp), line.substr(sp + 1));
    }
    return ClipTokenizer(std::move(merges));
}

std::vector<std::string> ClipTokenizer::bpe(const std::string& word) const {
    std::vector<std::string> symbols;
    for (char ch : word) symbols.push_back(byte_symbol_[static_cast<unsigned char>(ch)]);
    symbols.back() += "</w>";

    while (symbols.size() > 1) {
        int best_rank = std::numeric_limits<int>::max();
        std::string best_pair;
        for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
            const auto key = symbols[i] + " " + symbols[i + 1];
            if (auto it = ranks_.find(key); it != ranks_.end() && it->second < best_rank) {
                best_rank = it->second;
                best_pair = key;
            }
        }
        if (best_pair.empty()) break;
        const auto sp = best_pair.find(' ');
        const std::string left = best_pair.substr(0, sp);
        const std::string right = best_pair.substr(sp + 1);
        std::vector<std::string> merged;
        for (std::size_t i = 0; i < symbols.size();) {
            if (i + 1 < symbols.size() && symbols[i] == left && symbols[i + 1] == right) {
                merged.push_back(left + right);
                i += 2;
            } else {
                merged.push_back(symbols[i]);
                ++i;
            }
        }
        symbols = std::move(merged);
    }
    return symbols;
}

std::vector<int> ClipTokenizer::encode(std::string_view text) const {
    std::vector<int> ids;
    for (const auto& word : split_words(normalize(text))) {
        for (const auto& sym : bpe(word)) {
            auto it = vocab_.find(sym);
            if (it == vocab_.end()) throw DecodeError("token '" + sym + "' missing from vocabulary");
            ids.push_back(it->second);
        }
    }
    return ids;
}

std::vector<int> ClipTokenizer::tokenize(std::string_view text, std::size_t context_length) const {
    std::vector<int> out;
    out.reserve(context_length);
    out.push_back(sot_);
    for (int id : encode(text)) out.push_back(id);
    out.push_back(eot_);
    if (out.size() > context_length) {
        out.resize(context_length);
        out.back() = eot_;
    }
    out.resize(context_length, 0);
    return out;
}

}  // namespace artmod::backend
