#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "artmod/dataset/manifest.hpp"
#include "artmod/label.hpp"

namespace artmod::audit {

using VerdictMap = std::unordered_map<std::string, Label>;

/// Exact ratio; value() is numerator / denominator (0 when empty).
struct Fraction {
    std::size_t numerator = 0;
    std::size_t denominator = 0;

    double value() const noexcept {
        return denominator == 0 ? 0.0 : static_cast<double>(numerator) / static_cast<double>(denominator);
    }
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// One classifier on one dataset.
///
/// unsafe_rate is the share of images classified unsafe (for art datasets,
/// the false-positive rate). recall is the share classified as the dataset's
/// ground truth: safe for art, unsafe for nsfw. On art datasets the two sum
/// to exactly one.
struct MetricRow {
    std::string classifier;
    std::string dataset;
    dataset::ManifestRole role = dataset::ManifestRole::art_censored;
    Fraction unsafe_rate;
    Fraction recall;
};

/// Throws if any manifest id lacks a verdict (listing them) or the manifest
/// has no role.
MetricRow compute_metrics(const VerdictMap& verdicts, const dataset::Manifest& manifest,
                          std::string classifier = {}, std::string dataset_name = {});

enum class GroupKey { gender, period, artist, platform, year };

std::string_view to_string(GroupKey k) noexcept;
/// Throws InvalidArgument on an unknown key name.
GroupKey parse_group_key(std::string_view s);

struct GroupRow {
    std::string group;
    std::size_t total = 0;
    std::size_t flagged = 0;  // classified unsafe
    double rate = 0.0;        // flagged / total
    double share = 0.0;       // flagged / all flagged images in the dataset
};

/// Per-group slice. Records with no value for the key fall under "unknown".
/// For gender an image tagged female+male counts in both groups.
struct GroupBreakdown {
    GroupKey key = GroupKey::gender;
    std::size_t total_flagged = 0;
    std::vector<GroupRow> groups;
};

GroupBreakdown group_breakdown(const VerdictMap& verdicts, const dataset::Manifest& manifest, GroupKey key);

/// 1 where the verdict disagrees with ground truth, 0 otherwise; manifest order.
std::vector<double> misclassification_indicators(const VerdictMap& verdicts, const dataset::Manifest& manifest);

struct AgreementResult {
    std::vector<std::string> classifiers;
    std::vector<std::string> ids;
    std::vector<std::vector<Label>> matrix;  // [id][classifier]
    std::vector<std::string> unanimous_unsafe;
    std::vector<std::string> unanimous_safe;
};

/// Requires at least two classifiers, each with a verdict for every id.
AgreementResult agreement(const std::vector<std::pair<std::string, VerdictMap>>& classifiers,
                          const std::vector<std::string>& ids);

/// unsafe for unanimously-unsafe ids, safe for every other id.
VerdictMap unanimous_unsafe_verdicts(const AgreementResult& result);

}  // namespace artmod::audit
