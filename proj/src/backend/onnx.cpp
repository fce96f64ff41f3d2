// ONNX adapter. The only code in the toolkit that executes a network; it
// runs models through OpenCV's DNN module.

#include <cmath>
#include <mutex>
#include <optional>

#include <opencv2/core.hpp>
#include <opencv2/dnn.hpp>
#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "adapters.hpp"
#include "artmod/backend/tokenizer.hpp"

namespace artmod::backend::detail {

namespace {

cv::dnn::Net load_net(const std::filesystem::path& path) {
    try {
        auto net = cv::dnn::readNetFromONNX(path.string());
        if (net.empty()) throw BackendError(BackendError::Kind::invalid_spec, "empty network in '" + path.string() + "'");
        net.setPreferableBackend(cv::dnn::DNN_BACKEND_OPENCV);
        net.setPreferableTarget(cv::dnn::DNN_TARGET_CPU);
        return net;
    } catch (const cv::Exception& e) {
        throw BackendError(BackendError::Kind::invalid_spec, "cannot load ONNX model '" + path.string() + "': " + e.what());
    }
}

// Serialized forward pass: cv::dnn::Net holds per-call state.
class Network {
public:
    explicit Network(const std::filesystem::path& path) : net_(load_net(path)), path_(path) {}

    std::vector<float> run(const cv::Mat& input) const {
        std::lock_guard lock(mu_);
        try {
            net_.setInput(input);
            cv::Mat out = net_.forward().clone();
            if (out.type() != CV_32F) out.convertTo(out, CV_32F);
            return std::vector<float>(out.ptr<float>(), out.ptr<float>() + out.total());
        } catch (const cv::Exception& e) {
            throw BackendError(BackendError::Kind::inference, "inference failed for '" + path_.string() + "': " + e.what());
        }
    }

    const std::filesystem::path& path() const { return path_; }

private:
    mutable cv::dnn::Net net_;
    mutable std::mutex mu_;
    std::filesystem::path path_;
};

cv::Mat to_blob(const cv::Mat& bgr, const PreprocessConfig& cfg) {
    cv::Mat img;
    if (cfg.rgb) {
        cv::cvtColor(bgr, img, cv::COLOR_BGR2RGB);
    } else {
        img = bgr;
    }
    const double scale = static_cast<double>(cfg.resize) / std::min(img.cols, img.rows);
    const int w = std::max(cfg.resize, static_cast<int>(std::lround(img.cols * scale)));
    const int h = std::max(cfg.resize, static_cast<int>(std::lround(img.rows * scale)));
    cv::Mat resized;
    cv::resize(img, resized, cv::Size(w, h), 0, 0, cv::INTER_CUBIC);
    const cv::Rect roi((w - cfg.crop) / 2, (h - cfg.crop) / 2, cfg.crop, cfg.crop);
    cv::Mat cropped;
    resized(roi).convertTo(cropped, CV_32F, 1.0 / 255.0);

    const int sizes[] = {1, 3, cfg.crop, cfg.crop};
    cv::Mat blob(4, sizes, CV_32F);
    for (int c = 0; c < 3; ++c) {
        float* plane = blob.ptr<float>(0, c);
        for (int y = 0; y < cfg.crop; ++y) {
            const auto* row = cropped.ptr<cv::Vec3f>(y);
            for (int x = 0; x < cfg.crop; ++x) plane[y * cfg.crop + x] = (row[x][c] - cfg.mean[c]) / cfg.std[c];
        }
    }
    return blob;
}

cv::Mat zero_image_blob(const PreprocessConfig& cfg) {
    const int sizes[] = {1, 3, cfg.crop, cfg.crop};
    return cv::Mat(4, sizes, CV_32F, cv::Scalar(0));
}

cv::Mat token_blob(const std::vector<int>& tokens) {
    cv::Mat m(1, static_cast<int>(tokens.size()), CV_32F);
    for (std::size_t i = 0; i < tokens.size(); ++i) m.at<float>(0, static_cast<int>(i)) = static_cast<float>(tokens[i]);
    return m;
}

cv::Mat decode(const dataset::ImageRecord& record) {
    cv::Mat img;
    try {
        img = cv::imread(record.path.string(), cv::IMREAD_COLOR);
    } catch (const cv::Exception& e) {
        throw DecodeError("cannot decode '" + record.path.string() + "': " + e.what());
    }
    if (img.empty()) throw DecodeError("cannot decode image '" + record.path.string() + "' (record " + record.id + ")");
    return img;
}

void check_shape(const Network& net, std::size_t expected, std::size_t found) {
    if (expected != found) {
        throw BackendError(BackendError::Kind::shape_mismatch,
                           "model '" + net.path().string() + "' output shape mismatch: expected " +
                               std::to_string(expected) + " values, found " + std::to_string(found));
    }
}

class DualEncoder final : public Backend {
public:
    explicit DualEncoder(const BackendSpec& spec) : spec_(spec), image_(*spec.model_path) {
        check_shape(image_, spec.dim, image_.run(zero_image_blob(spec.preprocess)).size());
        if (spec.text_model_path) {
            if (!spec.tokenizer_path) {
                throw BackendError(BackendError::Kind::invalid_spec, "text_model_path requires tokenizer_path");
            }
            tokenizer_.emplace(ClipTokenizer::from_file(*spec.tokenizer_path));
            text_.emplace(*spec.text_model_path);
            const auto probe = text_->run(token_blob(tokenizer_->tokenize("", spec.context_length)));
            check_shape(*text_, spec.dim, probe.size());
        }
    }

    BackendKind kind() const noexcept override { return BackendKind::dual_encoder; }
    std::size_t dim() const noexcept override { return spec_.dim; }

    numkit::EmbeddingVector embed_image(const dataset::ImageRecord& record) const override {
        return finish(image_.run(to_blob(decode(record), spec_.preprocess)), record.id);
    }

    numkit::EmbeddingVector embed_text(std::string_view term) const override {
        if (!text_) {
            throw BackendError(BackendError::Kind::unsupported_kind, "dual_encoder spec has no text_model_path");
        }
        return finish(text_->run(token_blob(tokenizer_->tokenize(term, spec_.context_length))), std::string(term));
    }

private:
    numkit::EmbeddingVector finish(std::vector<float> out, const std::string& key) const {
        if (out.size() != spec_.dim) throw DimensionError(spec_.dim, out.size(), "embedding of '" + key + "'");
        try {
            return numkit::EmbeddingVector(std::move(out));
        } catch (const InvalidArgument& e) {
            throw DecodeError("model produced an invalid embedding for '" + key + "': " + e.what());
        }
    }

    BackendSpec spec_;
    Network image_;
    std::optional<Network> text_;
    std::optional<ClipTokenizer> tokenizer_;
};

class Scorer final : public Backend {
public:
    explicit Scorer(const BackendSpec& spec) : spec_(spec), net_(*spec.model_path) {
        const auto n = net_.run(zero_image_blob(spec.preprocess)).size();
        using Mode = ScoreConfig::Mode;
        if (spec.score.mode == Mode::probability || spec.score.mode == Mode::sigmoid) {
            check_shape(net_, 1, n);
        } else {
            for (auto idx : spec.score.unsafe_indices) {
                if (idx >= n) {
                    throw BackendError(BackendError::Kind::shape_mismatch,
                                       "unsafe index " + std::to_string(idx) + " out of range for " +
                                           std::to_string(n) + " model outputs");
                }
            }
        }
    }

    BackendKind kind() const noexcept override { return BackendKind::nsfw_scorer; }
    std::size_t dim() const noexcept override { return 1; }

    double score_image(const dataset::ImageRecord& record) const override {
        const auto out = net_.run(to_blob(decode(record), spec_.preprocess));
        using Mode = ScoreConfig::Mode;
        double score = 0.0;
        switch (spec_.score.mode) {
            case Mode::probability: score = out[0]; break;
            case Mode::sigmoid: score = 1.0 / (1.0 + std::exp(-static_cast<double>(out[0]))); break;
            case Mode::softmax: {
                double mx = out[0];
                for (float v : out) mx = std::max(mx, static_cast<double>(v));
                double total = 0.0;
                for (float v : out) total += std::exp(v - mx);
                for (auto idx : spec_.score.unsafe_indices) score += std::exp(out[idx] - mx) / total;
                break;
            }
            case Mode::probabilities:
                for (auto idx : spec_.score.unsafe_indices) score += out[idx];
                break;
        }
        // Softmax/probability sums may overshoot 1 by rounding.
        if (score > 1.0 && score < 1.0 + 1e-6) score = 1.0;
        if (!(score >= 0.0 && score <= 1.0)) {
            throw BackendError(BackendError::Kind::inference,
                               "scorer output " + std::to_string(score) + " outside [0, 1] for '" + record.id + "'");
        }
        return score;
    }

private:
    BackendSpec spec_;
    Network net_;
};

}  // namespace

std::unique_ptr<Backend> make_onnx_backend(const BackendSpec& spec) {
    if (spec.kind == BackendKind::dual_encoder) return std::make_unique<DualEncoder>(spec);
    return std::make_unique<Scorer>(spec);
}

}  // namespace artmod::backend::detail
