#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace artmod::backend {

enum class BackendKind { dual_encoder, nsfw_scorer, mock };

std::string_view to_string(BackendKind k) noexcept;

/// Image preprocessing. Defaults follow the OpenCLIP ConvNeXt pipeline:
/// bicubic resize of the short edge, center crop, CLIP channel statistics.
struct PreprocessConfig {
    int resize = 256;
    int crop = 256;
    std::array<float, 3> mean{0.48145466f, 0.4578275f, 0.40821073f};
    std::array<float, 3> std{0.26862954f, 0.26130258f, 0.27577711f};
    bool rgb = true;  // false feeds BGR channel order
};

/// How a scorer's raw output becomes an unsafeness score in [0, 1].
struct ScoreConfig {
    enum class Mode {
        probability,    // single output already in [0, 1]
        sigmoid,        // single logit
        softmax,        // logits; sum softmax mass over unsafe_indices
        probabilities,  // class probabilities; sum over unsafe_indices
    };
    Mode mode = Mode::probability;
    std::vector<std::size_t> unsafe_indices;
};

struct BackendSpec {
    BackendKind kind = BackendKind::mock;
    std::string model_id;  // free-form provenance (checkpoint name/revision)
    std::optional<std::filesystem::path> model_path;       // image encoder or scorer network (ONNX)
    std::optional<std::filesystem::path> text_model_path;  // dual_encoder text tower (ONNX)
    std::optional<std::filesystem::path> tokenizer_path;   // CLIP BPE merges file
    std::size_t context_length = 77;
    PreprocessConfig preprocess;
    ScoreConfig score;
    std::size_t dim = 0;  // required for dual_encoder; optional check for mock
    std::optional<std::filesystem::path> fixture_path;  // mock only
};

/// Read a backend spec from JSON. Relative paths resolve against the spec
/// file's directory. Throws BackendError(invalid_spec) on schema errors.
BackendSpec load_backend_spec(const std::filesystem::path& path);
BackendSpec parse_backend_spec(const std::string& json_text, const std::filesystem::path& base_dir = {});

}  // namespace artmod::backend
