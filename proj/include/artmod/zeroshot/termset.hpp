#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace artmod::zeroshot {

enum class TermClass { porn, art };

/// Two equally sized, disjoint lists of textual descriptions: one for
/// pornographic content, one for artistic nudity.
class TermSet {
public:
    /// At most this many terms per class (combination count grows as C(2n, n)).
    static constexpr std::size_t kMaxTerms = 12;

    /// Throws InvalidArgument unless both lists are nonempty, equally sized,
    /// duplicate-free and disjoint.
    TermSet(std::vector<std::string> porn_terms, std::vector<std::string> art_terms);

    /// The default five-term lists.
    static TermSet defaults();

    const std::vector<std::string>& porn_terms() const noexcept { return porn_; }
    const std::vector<std::string>& art_terms() const noexcept { return art_; }
    std::size_t n() const noexcept { return porn_.size(); }

    /// porn terms followed by art terms.
    std::vector<std::string> all_terms() const;

private:
    std::vector<std::string> porn_;
    std::vector<std::string> art_;
};

/// JSON: {"porn_terms": [...], "art_terms": [...]}
TermSet load_termset(const std::filesystem::path& path);
TermSet parse_termset(const std::string& json_text);

/// One reference set: a subset of porn terms and an equally sized subset of
/// art terms, encoded as bitmasks over term indices.
struct TermCombination {
    std::uint32_t porn_mask = 0;
    std::uint32_t art_mask = 0;

    std::size_t size() const noexcept;  // |P| = |A| = i
    std::size_t k() const noexcept { return 2 * size(); }

    std::vector<std::size_t> porn_indices() const;
    std::vector<std::size_t> art_indices() const;

    friend bool operator==(const TermCombination&, const TermCombination&) = default;
};

/// Every (P, A) with |P| = |A| = i for i = 1..n, each once, ordered by
/// (i, porn_mask, art_mask) ascending. Count is sum_i C(n, i)^2.
std::vector<TermCombination> enumerate_combinations(const TermSet& terms);

}  // namespace artmod::zeroshot
