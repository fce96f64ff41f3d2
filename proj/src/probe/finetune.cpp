#include "artmod/probe/finetune.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "artmod/dataset/csv.hpp"
#include "artmod/dataset/split.hpp"
#include "artmod/error.hpp"

namespace artmod::probe {

namespace {

using FeatureMap = std::unordered_map<std::string, numkit::EmbeddingVector>;

const numkit::EmbeddingVector& feature(const FeatureMap& features, const std::string& id) {
    auto it = features.find(id);
    if (it == features.end()) throw Error("missing feature vector for '" + id + "'");
    return it->second;
}

void require_features(const FeatureMap& features, const dataset::Manifest& m, std::vector<std::string>& missing) {
    for (const auto& r : m.records())
        if (!features.contains(r.id)) missing.push_back(r.id);
}

std::string join(const std::vector<std::string>& v, std::size_t limit = 20) {
    std::string s;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) s += (i ? ", " : "") + v[i];
    if (v.size() > limit) s += ", ... (" + std::to_string(v.size()) + " total)";
    return s;
}

TrainingSet build(const FeatureMap& features, const std::vector<std::string>& art_ids,
                  const std::vector<std::string>& nsfw_ids) {
    std::vector<numkit::EmbeddingVector> x;
    std::vector<Label> y;
    x.reserve(art_ids.size() + nsfw_ids.size());
    for (const auto& id : art_ids) {
        x.push_back(feature(features, id));
        y.push_back(Label::safe);
    }
    for (const auto& id : nsfw_ids) {
        x.push_back(feature(features, id));
        y.push_back(Label::unsafe);
    }
    return TrainingSet(x, y);
}

}  // namespace

GainSummary summarize_gain(double baseline, const std::vector<double>& fold_recalls) {
    GainSummary g;
    if (fold_recalls.empty()) return g;
    for (double r : fold_recalls) g.per_fold_pp.push_back((r - baseline) * 100.0);
    double sum = 0.0;
    for (double x : g.per_fold_pp) sum += x;
    g.mean_pp = sum / static_cast<double>(g.per_fold_pp.size());
    double var = 0.0;
    for (double x : g.per_fold_pp) var += (x - g.mean_pp) * (x - g.mean_pp);
    g.std_pp = std::sqrt(var / static_cast<double>(g.per_fold_pp.size()));
    return g;
}

double recall(const ProbeModel& model, const dataset::Manifest& test, const FeatureMap& features, double threshold) {
    if (!test.role()) throw InvalidArgument("test set needs a role to define recall");
    if (test.empty()) throw InvalidArgument("empty test set");
    const Label expected = dataset::expected_label(*test.role());
    std::size_t hits = 0;
    for (const auto& r : test.records()) {
        if (model.predict(feature(features, r.id).values(), threshold) == expected) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(test.size());
}

FineTuneOutcome finetune_protocol(const FineTuneInputs& in, const ProbeConfig& config) {
    config.validate();
    if (in.train_art.role() && !dataset::is_art(*in.train_art.role())) {
        throw InvalidArgument("art training manifest has role nsfw");
    }
    if (in.train_nsfw.role() && *in.train_nsfw.role() != dataset::ManifestRole::nsfw) {
        throw InvalidArgument("nsfw training manifest has an art role");
    }
    for (const auto& r : in.train_art.records())
        if (r.label != Label::safe) throw InvalidArgument("art training record '" + r.id + "' is not labeled safe");
    for (const auto& r : in.train_nsfw.records())
        if (r.label != Label::unsafe) throw InvalidArgument("nsfw training record '" + r.id + "' is not labeled unsafe");

    std::vector<std::string> offenders;
    std::set<std::string> names;
    for (const auto& t : in.test_sets) {
        if (!names.insert(t.name).second) throw InvalidArgument("duplicate test set name '" + t.name + "'");
        if (!t.manifest.role()) throw InvalidArgument("test set '" + t.name + "' has no role");
        for (const auto& r : t.manifest.records()) {
            if (in.train_art.contains(r.id) || in.train_nsfw.contains(r.id)) offenders.push_back(t.name + ":" + r.id);
        }
    }
    if (!offenders.empty()) throw Error("test ids overlap the training pool: " + join(offenders));
    for (const auto& [name, _] : in.baseline) {
        if (!names.contains(name)) throw InvalidArgument("baseline given for unknown test set '" + name + "'");
    }

    std::vector<std::string> missing;
    require_features(in.features, in.train_art, missing);
    require_features(in.features, in.train_nsfw, missing);
    for (const auto& t : in.test_sets) require_features(in.features, t.manifest, missing);
    if (!missing.empty()) throw Error("missing feature vectors: " + join(missing));

    const auto art_split = dataset::kfold_split(in.train_art, in.folds, config.seed);
    const auto nsfw_split = dataset::kfold_split(in.train_nsfw, in.folds, config.seed);

    FineTuneOutcome out;
    out.folds = in.folds;
    out.baseline = in.baseline;
    for (std::size_t f = 0; f < in.folds; ++f) {
        const auto art = art_split.pair(f);
        const auto nsfw = nsfw_split.pair(f);
        const auto train = build(in.features, art.train_ids, nsfw.train_ids);
        const auto validation = build(in.features, art.validation_ids, nsfw.validation_ids);
        const auto model = train_probe(train, config);

        FoldOutcome fo;
        fo.fold = f;
        fo.train_size = train.rows();
        fo.validation_size = validation.rows();
        fo.validation_accuracy = accuracy(model, validation, in.threshold);
        for (const auto& t : in.test_sets) fo.recall[t.name] = recall(model, t.manifest, in.features, in.threshold);
        out.per_fold.push_back(std::move(fo));
    }
    for (const auto& [name, base] : in.baseline) {
        std::vector<double> recalls;
        for (const auto& fo : out.per_fold) recalls.push_back(fo.recall.at(name));
        out.gain[name] = summarize_gain(base, recalls);
    }
    return out;
}

nlohmann::json to_json(const FineTuneOutcome& o, const ProbeConfig& config) {
    using nlohmann::json;
    json j;
    j["method"] = "linear_probe";
    j["config"] = {{"learning_rate", config.learning_rate},
                   {"epochs", config.epochs},
                   {"l2", config.l2},
                   {"seed", config.seed}};
    j["folds"] = o.folds;
    json folds = json::array();
    for (const auto& f : o.per_fold) {
        folds.push_back({{"fold", f.fold},
                         {"train_size", f.train_size},
                         {"validation_size", f.validation_size},
                         {"validation_accuracy", f.validation_accuracy},
                         {"recall", f.recall}});
    }
    j["per_fold"] = std::move(folds);
    j["baseline"] = o.baseline;
    json gains = json::object();
    for (const auto& [name, g] : o.gain) {
        gains[name] = {{"per_fold_pp", g.per_fold_pp}, {"mean_pp", g.mean_pp}, {"std_pp", g.std_pp}};
    }
    j["gain"] = std::move(gains);
    return j;
}

std::string gains_csv(const FineTuneOutcome& o) {
    std::ostringstream out;
    out << "test_set,fold,recall,baseline,gain_pp\n";
    for (const auto& f : o.per_fold) {
        for (const auto& [name, r] : f.recall) {
            out << name << ',' << f.fold << ',' << dataset::csv_number(r) << ',';
            if (auto it = o.baseline.find(name); it != o.baseline.end()) {
                out << dataset::csv_number(it->second) << ',' << dataset::csv_number((r - it->second) * 100.0);
            } else {
                out << ',';
            }
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace artmod::probe
