#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "artmod/label.hpp"
#include "artmod/numkit/vector.hpp"

namespace artmod::probe {

/// Linear head retrained on frozen features.
struct ProbeConfig {
    double learning_rate = 0.1;
    int epochs = 500;
    double l2 = 1e-4;
    std::uint64_t seed = 42;

    void validate() const;
};

/// Logistic model: P(unsafe | x) = sigmoid(w.x + b).
struct ProbeModel {
    std::vector<double> weights;
    double bias = 0.0;

    double logit(std::span<const float> x) const;
    double probability(std::span<const float> x) const;
    Label predict(std::span<const float> x, double threshold = 0.5) const;
};

/// Row-major features with 0/1 targets (1 = unsafe).
class TrainingSet {
public:
    TrainingSet(std::span<const numkit::EmbeddingVector> features, std::span<const Label> labels);

    std::size_t rows() const noexcept { return targets_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    const double* row(std::size_t i) const noexcept { return data_.data() + i * cols_; }
    double target(std::size_t i) const noexcept { return targets_[i]; }

private:
    std::size_t cols_ = 0;
    std::vector<double> data_;
    std::vector<double> targets_;
};

/// Mean binary cross-entropy plus (l2 / 2) * |w|^2 (bias unregularized).
double probe_loss(const ProbeModel& model, const TrainingSet& data, double l2);

/// Analytic gradient of probe_loss, shaped like the model.
ProbeModel probe_gradient(const ProbeModel& model, const TrainingSet& data, double l2);

/// Full-batch gradient descent from seeded uniform weights in [-0.01, 0.01]
/// and zero bias. Throws InvalidArgument on single-class data and
/// artmod::Error when the loss becomes non-finite. If `loss_history` is
/// given it receives the loss before each epoch plus the final loss.
ProbeModel train_probe(const TrainingSet& data, const ProbeConfig& config, std::vector<double>* loss_history = nullptr);

/// Keyed form: trains on every id in `labels` (in sorted id order) using its
/// feature vector. Throws if a feature is missing.
ProbeModel train_probe(const std::unordered_map<std::string, numkit::EmbeddingVector>& features,
                       const std::unordered_map<std::string, Label>& labels, const ProbeConfig& config);

double accuracy(const ProbeModel& model, const TrainingSet& data, double threshold = 0.5);

}  // namespace artmod::probe
