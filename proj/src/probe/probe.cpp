#include "artmod/probe/probe.hpp"

#include <algorithm>
#include <cmath>

#include "artmod/error.hpp"
#include "artmod/numkit/kernels.hpp"
#include "artmod/numkit/random.hpp"

namespace artmod::probe {

namespace {

double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// log(1 + e^z) without overflow.
double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double logit_row(const ProbeModel& m, const TrainingSet& data, std::size_t i) {
    return numkit::kernels().dot_f64(m.weights.data(), data.row(i), data.cols()) + m.bias;
}

void check_shape(const ProbeModel& m, const TrainingSet& data) {
    if (m.weights.size() != data.cols()) throw DimensionError(data.cols(), m.weights.size(), "probe weights");
}

}  // namespace

void ProbeConfig::validate() const {
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) throw InvalidArgument("learning_rate must be positive");
    if (epochs <= 0) throw InvalidArgument("epochs must be positive");
    if (!(l2 >= 0.0) || !std::isfinite(l2)) throw InvalidArgument("l2 must be nonnegative");
}

double ProbeModel::logit(std::span<const float> x) const {
    if (x.size() != weights.size()) throw DimensionError(weights.size(), x.size(), "probe input");
    const std::vector<double> row(x.begin(), x.end());
    return numkit::kernels().dot_f64(weights.data(), row.data(), row.size()) + bias;
}

double ProbeModel::probability(std::span<const float> x) const { return sigmoid(logit(x)); }

Label ProbeModel::predict(std::span<const float> x, double threshold) const {
    return probability(x) >= threshold ? Label::unsafe : Label::safe;
}

TrainingSet::TrainingSet(std::span<const numkit::EmbeddingVector> features, std::span<const Label> labels) {
    if (features.size() != labels.size()) throw InvalidArgument("features and labels differ in length");
    if (features.empty()) throw InvalidArgument("empty training set");
    cols_ = features.front().dim();
    data_.reserve(features.size() * cols_);
    for (const auto& f : features) {
        if (f.dim() != cols_) throw DimensionError(cols_, f.dim(), "probe feature");
        data_.insert(data_.end(), f.values().begin(), f.values().end());
    }
    targets_.reserve(labels.size());
    for (Label l : labels) targets_.push_back(l == Label::unsafe ? 1.0 : 0.0);
}

double probe_loss(const ProbeModel& model, const TrainingSet& data, double l2) {
    check_shape(model, data);
    double loss = 0.0;
    for (std::size_t i = 0; i < data.rows(); ++i) {
        const double z = logit_row(model, data, i);
        loss += softplus(z) - data.target(i) * z;
    }
    loss /= static_cast<double>(data.rows());
    const auto& k = numkit::kernels();
    return loss + 0.5 * l2 * k.dot_f64(model.weights.data(), model.weights.data(), model.weights.size());
}

ProbeModel probe_gradient(const ProbeModel& model, const TrainingSet& data, double l2) {
    check_shape(model, data);
    const auto& k = numkit::kernels();
    ProbeModel g;
    g.weights.assign(data.cols(), 0.0);
    const double inv_n = 1.0 / static_cast<double>(data.rows());
    for (std::size_t i = 0; i < data.rows(); ++i) {
        const double residual = (sigmoid(logit_row(model, data, i)) - data.target(i)) * inv_n;
        k.axpy_f64(residual, data.row(i), g.weights.data(), data.cols());
        g.bias += residual;
    }
    k.axpy_f64(l2, model.weights.data(), g.weights.data(), data.cols());
    return g;
}

ProbeModel train_probe(const TrainingSet& data, const ProbeConfig& config, std::vector<double>* loss_history) {
    config.validate();
    bool has_safe = false, has_unsafe = false;
    for (std::size_t i = 0; i < data.rows(); ++i) (data.target(i) > 0.5 ? has_unsafe : has_safe) = true;
    if (!has_safe || !has_unsafe) throw InvalidArgument("probe training needs examples of both classes");

    numkit::Rng rng(config.seed);
    ProbeModel model;
    model.weights.resize(data.cols());
    for (auto& w : model.weights) w = rng.uniform(-0.01, 0.01);

    const auto& k = numkit::kernels();
    auto record = [&] {
        const double loss = probe_loss(model, data, config.l2);
        if (!std::isfinite(loss)) {
            throw Error("probe loss became non-finite (learning rate " + std::to_string(config.learning_rate) +
                        " too large?)");
        }
        if (loss_history) loss_history->push_back(loss);
    };
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        record();
        const auto g = probe_gradient(model, data, config.l2);
        k.axpy_f64(-config.learning_rate, g.weights.data(), model.weights.data(), model.weights.size());
        model.bias -= config.learning_rate * g.bias;
    }
    record();
    return model;
}

ProbeModel train_probe(const std::unordered_map<std::string, numkit::EmbeddingVector>& features,
                       const std::unordered_map<std::string, Label>& labels, const ProbeConfig& config) {
    std::vector<std::string> ids;
    ids.reserve(labels.size());
    for (const auto& [id, _] : labels) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    std::vector<numkit::EmbeddingVector> x;
    std::vector<Label> y;
    for (const auto& id : ids) {
        auto it = features.find(id);
        if (it == features.end()) throw Error("missing feature vector for '" + id + "'");
        x.push_back(it->second);
        y.push_back(labels.at(id));
    }
    return train_probe(TrainingSet(x, y), config);
}

double accuracy(const ProbeModel& model, const TrainingSet& data, double threshold) {
    check_shape(model, data);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < data.rows(); ++i) {
        const bool unsafe = sigmoid(logit_row(model, data, i)) >= threshold;
        if (unsafe == (data.target(i) > 0.5)) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(data.rows());
}

}  // namespace artmod::probe
