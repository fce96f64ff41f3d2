#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artmod/audit/metrics.hpp"
#include "artmod/audit/stats.hpp"
#include "artmod/dataset/manifest.hpp"
#include "artmod/probe/probe.hpp"

namespace artmod::cli {

enum class Command { embed, zeroshot, classify, finetune, audit, stats_mwu };

/// NAME:ROLE:PATH
struct DatasetArg {
    std::string name;
    dataset::ManifestRole role;
    std::filesystem::path path;
};

/// CLASSIFIER:DATASET:PATH
struct VerdictArg {
    std::string classifier;
    std::string dataset;
    std::filesystem::path path;
};

struct RunConfig {
    Command command = Command::embed;
    std::uint64_t seed = 42;
    double threshold = 0.5;
    std::filesystem::path out;

    // embed, classify
    std::optional<std::filesystem::path> backend;
    std::optional<std::filesystem::path> manifest;
    std::optional<dataset::ManifestRole> role;

    // embed, zeroshot
    std::optional<std::filesystem::path> terms;
    bool default_terms = false;

    // zeroshot
    std::optional<std::filesystem::path> embeddings;
    std::optional<std::filesystem::path> text_embeddings;
    std::optional<std::filesystem::path> labels;

    // finetune
    std::optional<std::filesystem::path> features;
    std::optional<std::filesystem::path> art_pool;
    std::optional<std::filesystem::path> nsfw_pool;
    std::size_t sample_count = 145;
    std::string art_test_name = "T02";
    std::string nsfw_test_name = "T03";
    std::vector<DatasetArg> tests;
    std::map<std::string, double> baseline;
    std::size_t folds = 5;
    probe::ProbeConfig probe;

    // audit
    std::vector<DatasetArg> datasets;
    std::vector<VerdictArg> verdicts;
    std::vector<audit::GroupKey> group_keys{audit::GroupKey::gender, audit::GroupKey::period};

    // stats mwu
    std::optional<std::filesystem::path> sample_a;
    std::optional<std::filesystem::path> sample_b;
    audit::UTestRequest method = audit::UTestRequest::automatic;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct ParseResult {
    std::optional<RunConfig> config;  // set when parsing succeeded
    int exit_code = kExitOk;          // meaningful when config is empty (help or usage error)
    std::string message;
};

using EnvLookup = std::function<const char*(const char*)>;

/// argv[0] is the program name. ARTMOD_BACKEND (via `env`) supplies the
/// backend spec when --backend is absent.
ParseResult parse_args(const std::vector<std::string>& argv, const EnvLookup& env = {});

/// Runs the pipeline; every output is written via temp file + rename.
/// Progress lines go to `log`, errors to `err`.
int execute(const RunConfig& config, std::ostream& log, std::ostream& err);

/// parse_args + execute, as used by main().
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err, const EnvLookup& env = {});

/// Write `content` to `path` through a sibling temp file and rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// `report.json` + ".per_k.csv" -> `report.per_k.csv`
std::filesystem::path sibling(const std::filesystem::path& out, const std::string& suffix);

}  // namespace artmod::cli
