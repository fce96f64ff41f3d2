#include "artmod/zeroshot/termset.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "artmod/error.hpp"

namespace artmod::zeroshot {

namespace {

std::vector<std::size_t> bits(std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i);
    return out;
}

}  // namespace

TermSet::TermSet(std::vector<std::string> porn_terms, std::vector<std::string> art_terms)
    : porn_(std::move(porn_terms)), art_(std::move(art_terms)) {
    if (porn_.empty() || art_.empty()) throw InvalidArgument("term lists must be nonempty");
    if (porn_.size() != art_.size()) {
        throw InvalidArgument("term lists must have equal size (porn " + std::to_string(porn_.size()) + ", art " +
                              std::to_string(art_.size()) + ")");
    }
    if (porn_.size() > kMaxTerms) {
        throw InvalidArgument("at most " + std::to_string(kMaxTerms) + " terms per class are supported");
    }
    std::unordered_set<std::string> seen;
    for (const auto* list : {&porn_, &art_}) {
        for (const auto& t : *list) {
            if (t.empty()) throw InvalidArgument("empty term");
            if (!seen.insert(t).second) throw InvalidArgument("term '" + t + "' appears more than once");
        }
    }
}

TermSet TermSet::defaults() {
    return TermSet({"Porn", "Sexually Explicit Nudity", "Obscene Nudity", "Adult Material", "NSFW"},
                   {"Artistic Nudity", "Nude Art", "Fine Art Nudity", "Nude Portraiture", "Human Form in Art"});
}

std::vector<std::string> TermSet::all_terms() const {
    std::vector<std::string> out(porn_);
    out.insert(out.end(), art_.begin(), art_.end());
    return out;
}

TermSet parse_termset(const std::string& json_text) {
    try {
        const auto j = nlohmann::json::parse(json_text);
        return TermSet(j.at("porn_terms").get<std::vector<std::string>>(),
                       j.at("art_terms").get<std::vector<std::string>>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("terms file: ") + e.what());
    }
}

TermSet load_termset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open terms file '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_termset(ss.str());
    } catch (const Error& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

std::size_t TermCombination::size() const noexcept { return static_cast<std::size_t>(std::popcount(porn_mask)); }

std::vector<std::size_t> TermCombination::porn_indices() const { return bits(porn_mask); }
std::vector<std::size_t> TermCombination::art_indices() const { return bits(art_mask); }

std::vector<TermCombination> enumerate_combinations(const TermSet& terms) {
    const std::size_t n = terms.n();
    const std::uint32_t limit = 1u << n;
    std::vector<std::vector<std::uint32_t>> by_size(n + 1);
    for (std::uint32_t m = 1; m < limit; ++m) by_size[std::popcount(m)].push_back(m);

    std::vector<TermCombination> out;
    for (std::size_t i = 1; i <= n; ++i) {
        for (auto p : by_size[i])
            for (auto a : by_size[i]) out.push_back({p, a});
    }
    return out;
}

}  // namespace artmod::zeroshot
