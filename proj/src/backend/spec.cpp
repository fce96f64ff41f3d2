#include "artmod/backend/spec.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "artmod/backend/errors.hpp"

namespace artmod::backend {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& what) {
    throw BackendError(BackendError::Kind::invalid_spec, "backend spec: " + what);
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    std::filesystem::path path(p);
    if (path.is_relative() && !base.empty()) return base / path;
    return path;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.contains(key)) invalid("unknown key '" + key + "' in " + where);
    }
}

ScoreConfig::Mode parse_mode(const std::string& s) {
    if (s == "probability") return ScoreConfig::Mode::probability;
    if (s == "sigmoid") return ScoreConfig::Mode::sigmoid;
    if (s == "softmax") return ScoreConfig::Mode::softmax;
    if (s == "probabilities") return ScoreConfig::Mode::probabilities;
    invalid("unknown score mode '" + s + "'");
}

}  // namespace

std::string_view to_string(BackendKind k) noexcept {
    switch (k) {
        case BackendKind::dual_encoder: return "dual_encoder";
        case BackendKind::nsfw_scorer: return "nsfw_scorer";
        case BackendKind::mock: return "mock";
    }
    return "mock";
}

BackendSpec parse_backend_spec(const std::string& json_text, const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        invalid(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) invalid("top level must be an object");
    check_keys(j,
               {"kind", "model_id", "model_path", "text_model_path", "tokenizer_path", "context_length", "dim",
                "preprocess", "score", "fixture_path"},
               "spec");

    BackendSpec spec;
    try {
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "dual_encoder") {
            spec.kind = BackendKind::dual_encoder;
        } else if (kind == "nsfw_scorer") {
            spec.kind = BackendKind::nsfw_scorer;
        } else if (kind == "mock") {
            spec.kind = BackendKind::mock;
        } else {
            throw BackendError(BackendError::Kind::unsupported_kind, "unsupported backend kind '" + kind + "'");
        }
        spec.model_id = j.value("model_id", "");
        if (j.contains("model_path")) spec.model_path = resolve(base_dir, j["model_path"].get<std::string>());
        if (j.contains("text_model_path"))
            spec.text_model_path = resolve(base_dir, j["text_model_path"].get<std::string>());
        if (j.contains("tokenizer_path"))
            spec.tokenizer_path = resolve(base_dir, j["tokenizer_path"].get<std::string>());
        if (j.contains("fixture_path")) spec.fixture_path = resolve(base_dir, j["fixture_path"].get<std::string>());
        spec.context_length = j.value("context_length", spec.context_length);
        spec.dim = j.value("dim", std::size_t{0});

        if (j.contains("preprocess")) {
            const auto& p = j["preprocess"];
            check_keys(p, {"resize", "crop", "mean", "std", "channel_order"}, "preprocess");
            spec.preprocess.resize = p.value("resize", spec.preprocess.resize);
            spec.preprocess.crop = p.value("crop", spec.preprocess.crop);
            if (p.contains("mean")) spec.preprocess.mean = p["mean"].get<std::array<float, 3>>();
            if (p.contains("std")) spec.preprocess.std = p["std"].get<std::array<float, 3>>();
            const auto order = p.value("channel_order", std::string("rgb"));
            if (order != "rgb" && order != "bgr") invalid("channel_order must be rgb or bgr");
            spec.preprocess.rgb = order == "rgb";
        }
        if (j.contains("score")) {
            const auto& s = j["score"];
            check_keys(s, {"mode", "unsafe_indices"}, "score");
            spec.score.mode = parse_mode(s.value("mode", std::string("probability")));
            spec.score.unsafe_indices = s.value("unsafe_indices", std::vector<std::size_t>{});
        }
    } catch (const json::exception& e) {
        invalid(e.what());
    }

    if (spec.preprocess.resize <= 0 || spec.preprocess.crop <= 0 || spec.preprocess.crop > spec.preprocess.resize) {
        invalid("preprocess requires 0 < crop <= resize");
    }
    for (float s : spec.preprocess.std)
        if (!(s > 0.0f)) invalid("preprocess std entries must be positive");
    if (spec.kind == BackendKind::dual_encoder && spec.dim == 0) invalid("dual_encoder requires dim > 0");
    if (spec.kind == BackendKind::mock && !spec.fixture_path) invalid("mock requires fixture_path");
    if (spec.kind != BackendKind::mock && !spec.model_path) invalid("model_path is required");
    if ((spec.score.mode == ScoreConfig::Mode::softmax || spec.score.mode == ScoreConfig::Mode::probabilities) &&
        spec.score.unsafe_indices.empty()) {
        invalid("score modes softmax/probabilities need unsafe_indices");
    }
    if (spec.context_length == 0) invalid("context_length must be positive");
    return spec;
}

BackendSpec load_backend_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw BackendError(BackendError::Kind::missing_file, "backend spec not found: '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_backend_spec(ss.str(), path.parent_path());
}

}  // namespace artmod::backend
