#include "artmod/zeroshot/report_json.hpp"

#include <sstream>

#include "artmod/dataset/csv.hpp"

namespace artmod::zeroshot {

using nlohmann::json;

json to_json(const ZeroShotReport& report, const TermSet& terms) {
    json j;
    j["terms"] = {{"porn_terms", terms.porn_terms()}, {"art_terms", terms.art_terms()}};
    j["images"] = report.per_combination.empty() ? 0 : report.per_combination.front().total;
    json combos = json::array();
    for (const auto& r : report.per_combination) {
        combos.push_back({{"k", r.combination.k()},
                          {"porn_terms", r.porn_terms},
                          {"art_terms", r.art_terms},
                          {"correct", r.correct},
                          {"total", r.total},
                          {"accuracy", r.accuracy}});
    }
    j["combinations"] = std::move(combos);
    json per_k = json::array();
    for (const auto& s : report.per_k) {
        per_k.push_back({{"k", s.k},
                         {"combinations", s.combinations},
                         {"mean_accuracy", s.mean_accuracy},
                         {"std_accuracy", s.std_accuracy}});
    }
    j["per_k"] = std::move(per_k);
    json preds = json::array();
    for (const auto& [id, label] : report.predictions) preds.push_back({{"id", id}, {"label", to_string(label)}});
    j["predictions"] = std::move(preds);
    return j;
}

json to_json(const TermSeparation& s) {
    json terms = json::array();
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
        terms.push_back({{"term", s.terms[i]},
                         {"class", s.classes[i] == TermClass::porn ? "porn" : "art"},
                         {"projection", s.projection[i]},
                         {"cluster", s.clusters[i]}});
    }
    return {{"terms", std::move(terms)}, {"explained_variance", s.explained_variance}, {"kmeans_purity", s.purity}};
}

std::string per_k_csv(const ZeroShotReport& report) {
    std::ostringstream out;
    out << "k,combinations,mean_accuracy,std_accuracy\n";
    for (const auto& s : report.per_k) {
        out << s.k << ',' << s.combinations << ',' << dataset::csv_number(s.mean_accuracy) << ',' << dataset::csv_number(s.std_accuracy) << '\n';
    }
    return out.str();
}

std::string predictions_csv(const ZeroShotReport& report) {
    std::ostringstream out;
    out << "id,score,label,threshold\n";
    for (const auto& [id, label] : report.predictions) {
        out << dataset::csv_escape(id) << ',' << (label == Label::unsafe ? 1 : 0) << ',' << to_string(label)
            << ",0.5\n";
    }
    return out.str();
}

}  // namespace artmod::zeroshot
