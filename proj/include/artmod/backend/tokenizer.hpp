#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace artmod::backend {

/// Byte-level BPE tokenizer compatible with CLIP's text tower.
///
/// Vocabulary layout: 256 byte symbols, the same 256 with an end-of-word
/// marker "</w>", one entry per merge rule in file order, then
/// <|startoftext|> and <|endoftext|>.
///
/// Text normalization is whitespace collapsing plus ASCII lowercasing; the
/// upstream ftfy/HTML cleanup is not reproduced. Non-ASCII bytes are treated
/// as letters when pre-splitting words.
class ClipTokenizer {
public:
    using Merge = std::pair<std::string, std::string>;

    explicit ClipTokenizer(std::vector<Merge> merges);

    /// Merges file: one "left right" pair per line; a first line starting
    /// with '#' is a version header and is skipped.
    static ClipTokenizer from_file(const std::filesystem::path& path);

    /// BPE token ids without start/end markers.
    std::vector<int> encode(std::string_view text) const;

    /// <sot> ids <eot>, zero-padded (or truncated, keeping <eot>) to context_length.
    std::vector<int> tokenize(std::string_view text, std::size_t context_length) const;

    int start_token() const noexcept { return sot_; }
    int end_token() const noexcept { return eot_; }
    std::size_t vocab_size() const noexcept { return vocab_.size(); }

private:
    std::vector<std::string> bpe(const std::string& word) const;

    std::unordered_map<std::string, int> vocab_;
    std::unordered_map<std::string, int> ranks_;  // "left right" -> merge priority
    std::vector<std::string> byte_symbol_;        // byte value -> UTF-8 symbol
    int sot_ = 0;
    int eot_ = 0;
};

}  // namespace artmod::backend
