#include "artmod/audit/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "artmod/dataset/csv.hpp"
#include "artmod/error.hpp"

namespace artmod::audit {

using nlohmann::json;

namespace {

constexpr const char* kUnanimous = "unanimous";

std::vector<double> indicators_for(const VerdictMap& v, const dataset::Manifest& m, bool female) {
    std::vector<double> out;
    for (const auto& r : m.records()) {
        if (female ? r.genders.female : r.genders.male) out.push_back(v.at(r.id) == r.label ? 0.0 : 1.0);
    }
    return out;
}

}  // namespace

AuditReport build_audit(const std::vector<AuditDataset>& datasets, const std::vector<ClassifierRun>& runs,
                        const std::vector<GroupKey>& keys) {
    std::map<std::string, const AuditDataset*> by_name;
    for (const auto& d : datasets) {
        if (!d.manifest.role()) throw InvalidArgument("dataset '" + d.name + "' has no role");
        if (!by_name.emplace(d.name, &d).second) throw InvalidArgument("duplicate dataset name '" + d.name + "'");
    }
    // classifier -> dataset -> verdicts, in first-seen classifier order
    std::vector<std::string> classifier_order;
    std::map<std::string, std::map<std::string, const VerdictMap*>> table;
    for (const auto& run : runs) {
        if (!by_name.contains(run.dataset)) {
            throw InvalidArgument("verdicts for unknown dataset '" + run.dataset + "'");
        }
        if (!table.contains(run.classifier)) classifier_order.push_back(run.classifier);
        if (!table[run.classifier].emplace(run.dataset, &run.verdicts).second) {
            throw InvalidArgument("duplicate verdicts for " + run.classifier + " on " + run.dataset);
        }
    }

    AuditReport report;
    for (const auto& cls : classifier_order) {
        for (const auto& d : datasets) {
            auto it = table[cls].find(d.name);
            if (it == table[cls].end()) continue;
            const auto& verdicts = *it->second;
            report.metrics.push_back(compute_metrics(verdicts, d.manifest, cls, d.name));
            if (!dataset::is_art(*d.manifest.role())) continue;
            for (auto key : keys) report.breakdowns.push_back({cls, d.name, group_breakdown(verdicts, d.manifest, key)});

            const auto female = indicators_for(verdicts, d.manifest, true);
            const auto male = indicators_for(verdicts, d.manifest, false);
            if (!female.empty() && !male.empty()) {
                report.tests.push_back({cls, "misclassification female vs male on " + d.name,
                                        mann_whitney_u(female, male)});
            }
        }
        for (std::size_t i = 0; i < datasets.size(); ++i) {
            for (std::size_t j = i + 1; j < datasets.size(); ++j) {
                const auto& a = datasets[i];
                const auto& b = datasets[j];
                if (!dataset::is_art(*a.manifest.role()) || !dataset::is_art(*b.manifest.role())) continue;
                auto ia = table[cls].find(a.name);
                auto ib = table[cls].find(b.name);
                if (ia == table[cls].end() || ib == table[cls].end()) continue;
                if (a.manifest.empty() || b.manifest.empty()) continue;
                report.tests.push_back({cls, "misclassification " + a.name + " vs " + b.name,
                                        mann_whitney_u(misclassification_indicators(*ia->second, a.manifest),
                                                       misclassification_indicators(*ib->second, b.manifest))});
            }
        }
    }

    for (const auto& d : datasets) {
        std::vector<std::pair<std::string, VerdictMap>> sets;
        for (const auto& cls : classifier_order) {
            if (auto it = table[cls].find(d.name); it != table[cls].end()) sets.emplace_back(cls, *it->second);
        }
        if (sets.size() < 2) continue;
        std::vector<std::string> ids;
        for (const auto& r : d.manifest.records()) ids.push_back(r.id);
        auto result = agreement(sets, ids);
        if (dataset::is_art(*d.manifest.role())) {
            const auto unanimous = unanimous_unsafe_verdicts(result);
            for (auto key : keys) report.breakdowns.push_back({kUnanimous, d.name, group_breakdown(unanimous, d.manifest, key)});
            if (std::find(keys.begin(), keys.end(), GroupKey::artist) == keys.end()) {
                report.breakdowns.push_back({kUnanimous, d.name, group_breakdown(unanimous, d.manifest, GroupKey::artist)});
            }
        }
        report.agreements.push_back({d.name, std::move(result)});
    }
    return report;
}

json to_json(const UTestResult& r) {
    return {{"u_statistic", r.u_statistic},
            {"p_value", r.p_value},
            {"method", to_string(r.method)},
            {"n1", r.n1},
            {"n2", r.n2}};
}

json to_json(const AuditReport& report) {
    json j;
    json metrics = json::array();
    for (const auto& m : report.metrics) {
        metrics.push_back({{"classifier", m.classifier},
                           {"dataset", m.dataset},
                           {"role", dataset::to_string(m.role)},
                           {"unsafe", {{"count", m.unsafe_rate.numerator}, {"total", m.unsafe_rate.denominator}, {"rate", m.unsafe_rate.value()}}},
                           {"recall", {{"count", m.recall.numerator}, {"total", m.recall.denominator}, {"rate", m.recall.value()}}}});
    }
    j["metrics"] = std::move(metrics);

    json breakdowns = json::array();
    for (const auto& b : report.breakdowns) {
        json groups = json::array();
        for (const auto& g : b.breakdown.groups) {
            groups.push_back({{"group", g.group}, {"total", g.total}, {"flagged", g.flagged}, {"rate", g.rate}, {"share", g.share}});
        }
        breakdowns.push_back({{"classifier", b.classifier},
                              {"dataset", b.dataset},
                              {"key", to_string(b.breakdown.key)},
                              {"total_flagged", b.breakdown.total_flagged},
                              {"groups", std::move(groups)}});
    }
    j["breakdowns"] = std::move(breakdowns);

    json agreements = json::array();
    for (const auto& a : report.agreements) {
        json matrix = json::object();
        for (std::size_t i = 0; i < a.result.ids.size(); ++i) {
            json row = json::array();
            for (Label l : a.result.matrix[i]) row.push_back(to_string(l));
            matrix[a.result.ids[i]] = std::move(row);
        }
        agreements.push_back({{"dataset", a.dataset},
                              {"classifiers", a.result.classifiers},
                              {"unanimous_unsafe", a.result.unanimous_unsafe},
                              {"unanimous_safe", a.result.unanimous_safe},
                              {"verdicts", std::move(matrix)}});
    }
    j["agreement"] = std::move(agreements);

    json tests = json::array();
    for (const auto& t : report.tests) {
        auto entry = to_json(t.result);
        entry["classifier"] = t.classifier;
        entry["comparison"] = t.comparison;
        tests.push_back(std::move(entry));
    }
    j["tests"] = std::move(tests);
    return j;
}

std::string metrics_csv(const AuditReport& report) {
    std::ostringstream out;
    out << "classifier,dataset,role,unsafe,total,unsafe_rate,recall_hits,recall\n";
    for (const auto& m : report.metrics) {
        out << dataset::csv_escape(m.classifier) << ',' << dataset::csv_escape(m.dataset) << ','
            << dataset::to_string(m.role) << ',' << m.unsafe_rate.numerator << ',' << m.unsafe_rate.denominator << ','
            << dataset::csv_number(m.unsafe_rate.value()) << ',' << m.recall.numerator << ',' << dataset::csv_number(m.recall.value()) << '\n';
    }
    return out.str();
}

std::string breakdowns_csv(const AuditReport& report) {
    std::ostringstream out;
    out << "classifier,dataset,key,group,total,flagged,rate,share\n";
    for (const auto& b : report.breakdowns) {
        for (const auto& g : b.breakdown.groups) {
            out << dataset::csv_escape(b.classifier) << ',' << dataset::csv_escape(b.dataset) << ','
                << to_string(b.breakdown.key) << ',' << dataset::csv_escape(g.group) << ',' << g.total << ','
                << g.flagged << ',' << dataset::csv_number(g.rate) << ',' << dataset::csv_number(g.share) << '\n';
        }
    }
    return out.str();
}

}  // namespace artmod::audit
