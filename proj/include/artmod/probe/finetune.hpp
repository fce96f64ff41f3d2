#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "artmod/dataset/manifest.hpp"
#include "artmod/probe/probe.hpp"

namespace artmod::probe {

struct NamedTestSet {
    std::string name;
    dataset::Manifest manifest;  // role required: decides which label counts as recall
};

struct FoldOutcome {
    std::size_t fold = 0;
    std::size_t train_size = 0;
    std::size_t validation_size = 0;
    double validation_accuracy = 0.0;      // reported only; never used for training decisions
    std::map<std::string, double> recall;  // test set -> recall in [0, 1]
};

struct GainSummary {
    std::vector<double> per_fold_pp;  // (fold recall - baseline) in percentage points
    double mean_pp = 0.0;
    double std_pp = 0.0;  // population standard deviation over folds
};

struct FineTuneOutcome {
    std::size_t folds = 0;
    std::vector<FoldOutcome> per_fold;
    std::map<std::string, double> baseline;  // test set -> recall before training
    std::map<std::string, GainSummary> gain;  // only test sets with a baseline
};

/// Pure arithmetic: recalls and baseline are fractions, output in points.
GainSummary summarize_gain(double baseline, const std::vector<double>& fold_recalls);

/// Fraction of the set's records predicted as its role's ground-truth label.
double recall(const ProbeModel& model, const dataset::Manifest& test,
              const std::unordered_map<std::string, numkit::EmbeddingVector>& features, double threshold = 0.5);

struct FineTuneInputs {
    dataset::Manifest train_art;   // ground-truth safe
    dataset::Manifest train_nsfw;  // ground-truth unsafe
    std::vector<NamedTestSet> test_sets;
    std::unordered_map<std::string, numkit::EmbeddingVector> features;
    std::map<std::string, double> baseline;
    std::size_t folds = 5;
    double threshold = 0.5;
};

/// Cross-validated last-layer retraining. Each training manifest is split
/// into `folds` folds with the same seed; fold f of both forms the
/// validation set and the other folds train a probe, which is then scored on
/// every test set. Throws when a test id also appears in the training pool
/// (listing offenders) or a feature vector is missing.
FineTuneOutcome finetune_protocol(const FineTuneInputs& inputs, const ProbeConfig& config);

nlohmann::json to_json(const FineTuneOutcome& outcome, const ProbeConfig& config);

/// Plot data for gain/loss boxplots: `test_set,fold,recall,baseline,gain_pp`.
std::string gains_csv(const FineTuneOutcome& outcome);

}  // namespace artmod::probe
