#include "artmod/audit/metrics.hpp"

#include <algorithm>
#include <map>

#include "artmod/error.hpp"

namespace artmod::audit {

namespace {

std::string join(const std::vector<std::string>& v, std::size_t limit = 20) {
    std::string s;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) s += (i ? ", " : "") + v[i];
    if (v.size() > limit) s += ", ... (" + std::to_string(v.size()) + " total)";
    return s;
}

void require_verdicts(const VerdictMap& verdicts, const dataset::Manifest& manifest) {
    std::vector<std::string> missing;
    for (const auto& r : manifest.records())
        if (!verdicts.contains(r.id)) missing.push_back(r.id);
    if (!missing.empty()) throw Error("missing verdicts for ids: " + join(missing));
}

std::vector<std::string> group_values(const dataset::ImageRecord& r, GroupKey key) {
    switch (key) {
        case GroupKey::gender: {
            std::vector<std::string> g;
            if (r.genders.female) g.emplace_back("female");
            if (r.genders.male) g.emplace_back("male");
            if (g.empty()) g.emplace_back("unknown");
            return g;
        }
        case GroupKey::period: return {std::string(dataset::to_string(r.period))};
        case GroupKey::artist: return {r.artist.value_or("unknown")};
        case GroupKey::platform: return {r.platform.value_or("unknown")};
        case GroupKey::year: return {r.year ? std::to_string(*r.year) : "unknown"};
    }
    return {"unknown"};
}

// Sort position of a group label: fixed order for enumerations, numeric for
// years, lexicographic otherwise; "unknown" always last.
std::pair<int, std::string> order_key(const std::string& group, GroupKey key) {
    if (group == "unknown") return {1000, ""};
    if (key == GroupKey::gender) return {group == "female" ? 0 : 1, ""};
    if (key == GroupKey::period) {
        auto p = dataset::parse_period(group);
        return {p ? static_cast<int>(*p) : 999, ""};
    }
    if (key == GroupKey::year) {
        std::string padded = group;
        const bool neg = !padded.empty() && padded[0] == '-';
        if (neg) padded.erase(0, 1);
        padded.insert(0, 12 - std::min<std::size_t>(12, padded.size()), '0');
        return {neg ? 0 : 1, padded};
    }
    return {0, group};
}

}  // namespace

MetricRow compute_metrics(const VerdictMap& verdicts, const dataset::Manifest& manifest, std::string classifier,
                          std::string dataset_name) {
    if (!manifest.role()) throw InvalidArgument("metrics need a manifest role");
    require_verdicts(verdicts, manifest);
    MetricRow row;
    row.classifier = std::move(classifier);
    row.dataset = std::move(dataset_name);
    row.role = *manifest.role();
    const Label expected = dataset::expected_label(row.role);
    for (const auto& r : manifest.records()) {
        const Label v = verdicts.at(r.id);
        if (v == Label::unsafe) ++row.unsafe_rate.numerator;
        if (v == expected) ++row.recall.numerator;
    }
    row.unsafe_rate.denominator = manifest.size();
    row.recall.denominator = manifest.size();
    return row;
}

std::string_view to_string(GroupKey k) noexcept {
    switch (k) {
        case GroupKey::gender: return "gender";
        case GroupKey::period: return "period";
        case GroupKey::artist: return "artist";
        case GroupKey::platform: return "platform";
        case GroupKey::year: return "year";
    }
    return "gender";
}

GroupKey parse_group_key(std::string_view s) {
    for (auto k : {GroupKey::gender, GroupKey::period, GroupKey::artist, GroupKey::platform, GroupKey::year}) {
        if (to_string(k) == s) return k;
    }
    throw InvalidArgument("unknown grouping key '" + std::string(s) +
                          "' (expected gender, period, artist, platform or year)");
}

GroupBreakdown group_breakdown(const VerdictMap& verdicts, const dataset::Manifest& manifest, GroupKey key) {
    require_verdicts(verdicts, manifest);
    GroupBreakdown out;
    out.key = key;
    std::map<std::string, GroupRow> rows;
    for (const auto& r : manifest.records()) {
        const bool flagged = verdicts.at(r.id) == Label::unsafe;
        if (flagged) ++out.total_flagged;
        for (auto& g : group_values(r, key)) {
            auto& row = rows[g];
            row.group = g;
            ++row.total;
            if (flagged) ++row.flagged;
        }
    }
    for (auto& [_, row] : rows) {
        row.rate = static_cast<double>(row.flagged) / static_cast<double>(row.total);
        row.share = out.total_flagged == 0 ? 0.0
                                           : static_cast<double>(row.flagged) / static_cast<double>(out.total_flagged);
        out.groups.push_back(row);
    }
    std::stable_sort(out.groups.begin(), out.groups.end(), [key](const GroupRow& a, const GroupRow& b) {
        return order_key(a.group, key) < order_key(b.group, key);
    });
    return out;
}

std::vector<double> misclassification_indicators(const VerdictMap& verdicts, const dataset::Manifest& manifest) {
    require_verdicts(verdicts, manifest);
    std::vector<double> out;
    out.reserve(manifest.size());
    for (const auto& r : manifest.records()) out.push_back(verdicts.at(r.id) == r.label ? 0.0 : 1.0);
    return out;
}

AgreementResult agreement(const std::vector<std::pair<std::string, VerdictMap>>& classifiers,
                          const std::vector<std::string>& ids) {
    if (classifiers.size() < 2) throw InvalidArgument("agreement needs at least two classifiers");
    std::vector<std::string> ragged;
    for (const auto& [name, verdicts] : classifiers) {
        for (const auto& id : ids)
            if (!verdicts.contains(id)) ragged.push_back(name + ":" + id);
    }
    if (!ragged.empty()) throw Error("ragged verdict coverage: " + join(ragged));

    AgreementResult out;
    out.ids = ids;
    for (const auto& [name, _] : classifiers) out.classifiers.push_back(name);
    out.matrix.reserve(ids.size());
    for (const auto& id : ids) {
        std::vector<Label> row;
        for (const auto& [_, verdicts] : classifiers) row.push_back(verdicts.at(id));
        const bool all_unsafe = std::all_of(row.begin(), row.end(), [](Label l) { return l == Label::unsafe; });
        const bool all_safe = std::all_of(row.begin(), row.end(), [](Label l) { return l == Label::safe; });
        if (all_unsafe) out.unanimous_unsafe.push_back(id);
        if (all_safe) out.unanimous_safe.push_back(id);
        out.matrix.push_back(std::move(row));
    }
    return out;
}

VerdictMap unanimous_unsafe_verdicts(const AgreementResult& result) {
    VerdictMap out;
    for (const auto& id : result.ids) out.emplace(id, Label::safe);
    for (const auto& id : result.unanimous_unsafe) out[id] = Label::unsafe;
    return out;
}

}  // namespace artmod::audit
