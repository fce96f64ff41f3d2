#include "artmod/cli/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "artmod/audit/report.hpp"
#include "artmod/backend/backend.hpp"
#include "artmod/backend/cache.hpp"
#include "artmod/backend/verdict_io.hpp"
#include "artmod/dataset/split.hpp"
#include "artmod/probe/finetune.hpp"
#include "artmod/zeroshot/classifier.hpp"
#include "artmod/zeroshot/report_json.hpp"

namespace artmod::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

dataset::ManifestRole role_or_usage(const std::string& s) {
    auto r = dataset::parse_role(s);
    if (!r) throw UsageError("unknown role '" + s + "' (expected art_censored, art_wikistyle or nsfw)");
    return *r;
}

// Split "a:b:rest" into three parts; the last part may itself contain ':'.
std::array<std::string, 3> split3(const std::string& s, const char* what) {
    const auto p1 = s.find(':');
    const auto p2 = p1 == std::string::npos ? std::string::npos : s.find(':', p1 + 1);
    if (p2 == std::string::npos) throw UsageError(std::string("expected ") + what + ", got '" + s + "'");
    std::array<std::string, 3> out{s.substr(0, p1), s.substr(p1 + 1, p2 - p1 - 1), s.substr(p2 + 1)};
    for (const auto& part : out)
        if (part.empty()) throw UsageError(std::string("expected ") + what + ", got '" + s + "'");
    return out;
}

void require_readable(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw UsageError("cannot read '" + p.string() + "'");
}

DatasetArg parse_dataset_arg(const std::string& s) {
    auto [name, role, path] = split3(s, "NAME:ROLE:PATH");
    require_readable(path);
    return {name, role_or_usage(role), path};
}

VerdictArg parse_verdict_arg(const std::string& s) {
    auto [cls, ds, path] = split3(s, "CLASSIFIER:DATASET:PATH");
    require_readable(path);
    return {cls, ds, path};
}

double parse_fraction(const std::string& s) {
    std::string v = s;
    double scale = 1.0;
    if (!v.empty() && v.back() == '%') {
        v.pop_back();
        scale = 0.01;
    }
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used) * scale;
        if (used != v.size() || !(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("range");
        return x;
    } catch (const std::logic_error&) {
        throw UsageError("baseline must be a fraction in [0, 1] or a percentage, got '" + s + "'");
    }
}

const CLI::Validator kOpenUnit(
    [](std::string& s) -> std::string {
        try {
            const double v = std::stod(s);
            if (v > 0.0 && v < 1.0) return {};
        } catch (const std::logic_error&) {
        }
        return "value " + s + " out of range (0, 1)";
    },
    "(0,1)", "OpenUnit");

std::string timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream s;
    s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return s.str();
}

std::string read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("cannot open '" + p.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> read_sample(const fs::path& p) {
    std::string text = read_text(p);
    for (auto& c : text)
        if (c == ',' || c == ';') c = ' ';
    std::istringstream in(text);
    std::vector<double> out;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw Error(p.string() + ": not a number '" + tok + "'");
        }
    }
    return out;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// Sidecar log: the only place a wall-clock timestamp is written.
std::string backend_note(const backend::BackendSpec& spec) {
    std::string s = "backend: " + std::string(backend::to_string(spec.kind));
    if (!spec.model_id.empty()) s += " " + spec.model_id;
    return s;
}

void write_sidecar(const RunConfig& cfg, const std::string& command, const std::vector<std::string>& notes) {
    std::ostringstream s;
    s << "command: " << command << "\n"
      << "finished: " << timestamp() << "\n"
      << "seed: " << cfg.seed << "\n";
    for (const auto& n : notes) s << n << "\n";
    write_atomic(sibling(cfg.out, ".log"), s.str());
}

zeroshot::TermSet termset_for(const RunConfig& cfg) {
    if (cfg.terms) return zeroshot::load_termset(*cfg.terms);
    return zeroshot::TermSet::defaults();
}

int cmd_embed(const RunConfig& cfg, std::ostream& log) {
    const auto spec = backend::load_backend_spec(*cfg.backend);
    const auto be = backend::open_backend(spec);
    backend::EmbeddingCache cache(static_cast<std::uint32_t>(be->dim()));
    std::vector<std::string> notes;

    if (cfg.manifest) {
        const auto m = dataset::load_manifest(*cfg.manifest, cfg.role);
        auto res = backend::embed_images(*be, m.records());
        for (auto& [id, v] : res.vectors) cache.insert(id, std::move(v));
        for (const auto& f : res.failures) notes.push_back("failed image " + f.key + ": " + f.message);
        log << "embedded " << res.vectors.size() << " of " << m.size() << " images\n";
    }
    if (cfg.terms || cfg.default_terms) {
        const auto terms = termset_for(cfg).all_terms();
        auto res = backend::embed_texts(*be, terms);
        for (auto& [t, v] : res.vectors) {
            if (cache.find(t)) throw Error("term '" + t + "' collides with an image id in the same cache");
            cache.insert(t, std::move(v));
        }
        for (const auto& f : res.failures) notes.push_back("failed term " + f.key + ": " + f.message);
        log << "embedded " << res.vectors.size() << " of " << terms.size() << " terms\n";
    }
    for (const auto& n : notes) log << n << "\n";

    std::ostringstream buf(std::ios::binary);
    backend::write_cache(buf, cache);
    write_atomic(cfg.out, buf.str());
    notes.insert(notes.begin(), backend_note(spec));
    notes.insert(notes.begin() + 1, "records: " + std::to_string(cache.size()));
    write_sidecar(cfg, "embed", notes);
    return kExitOk;
}

int cmd_zeroshot(const RunConfig& cfg, std::ostream& log) {
    const auto images = backend::cache_read(*cfg.embeddings).to_map();
    const auto texts = cfg.text_embeddings ? backend::cache_read(*cfg.text_embeddings).to_map() : images;
    const auto terms = termset_for(cfg);
    const auto manifest = dataset::load_manifest(*cfg.labels, cfg.role);
    zeroshot::GroundTruth truth;
    for (const auto& r : manifest.records()) truth.emplace_back(r.id, r.label);

    const auto report = zeroshot::evaluate(images, truth, terms, texts);
    auto j = zeroshot::to_json(report, terms);
    j["seed"] = cfg.seed;
    if (2 * terms.n() >= 3) j["term_separation"] = zeroshot::to_json(zeroshot::analyze_term_separation(terms, texts, cfg.seed));

    write_atomic(cfg.out, dump(j));
    write_atomic(sibling(cfg.out, ".per_k.csv"), zeroshot::per_k_csv(report));
    write_atomic(sibling(cfg.out, ".verdicts.csv"), zeroshot::predictions_csv(report));
    for (const auto& s : report.per_k) {
        log << "k=" << s.k << " combinations=" << s.combinations << " mean=" << s.mean_accuracy
            << " std=" << s.std_accuracy << "\n";
    }
    write_sidecar(cfg, "zeroshot", {"images: " + std::to_string(truth.size())});
    return kExitOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& log) {
    const auto spec = backend::load_backend_spec(*cfg.backend);
    const auto be = backend::open_backend(spec);
    const auto m = dataset::load_manifest(*cfg.manifest, cfg.role);
    backend::VerdictList verdicts;
    std::vector<std::string> notes{backend_note(spec)};
    for (const auto& r : m.records()) {
        try {
            verdicts.emplace_back(r.id, backend::nsfw_score(*be, r, cfg.threshold));
        } catch (const backend::DecodeError& e) {
            notes.push_back("failed image " + r.id + ": " + e.what());
            log << "failed image " << r.id << ": " << e.what() << "\n";
        }
    }
    std::ostringstream buf;
    backend::write_verdicts(buf, verdicts);
    write_atomic(cfg.out, buf.str());
    log << "scored " << verdicts.size() << " of " << m.size() << " images\n";
    write_sidecar(cfg, "classify", notes);
    return kExitOk;
}

int cmd_finetune(const RunConfig& cfg, std::ostream& log) {
    const auto features = backend::cache_read(*cfg.features).to_map();
    const auto art_pool = dataset::load_manifest(*cfg.art_pool, dataset::ManifestRole::art_wikistyle);
    const auto nsfw_pool = dataset::load_manifest(*cfg.nsfw_pool, dataset::ManifestRole::nsfw);
    auto [art_test, art_train] = dataset::sample_test_set(art_pool, std::min(cfg.sample_count, art_pool.size()), cfg.seed);
    auto [nsfw_test, nsfw_train] =
        dataset::sample_test_set(nsfw_pool, std::min(cfg.sample_count, nsfw_pool.size()), cfg.seed);

    probe::FineTuneInputs in{std::move(art_train), std::move(nsfw_train), {}, features, cfg.baseline, cfg.folds,
                             cfg.threshold};
    std::vector<std::pair<std::string, const dataset::Manifest*>> sampled;
    if (!art_test.empty()) in.test_sets.push_back({cfg.art_test_name, art_test});
    if (!nsfw_test.empty()) in.test_sets.push_back({cfg.nsfw_test_name, nsfw_test});
    for (const auto& t : cfg.tests) in.test_sets.push_back({t.name, dataset::load_manifest(t.path, t.role)});

    const auto outcome = probe::finetune_protocol(in, cfg.probe);
    auto j = probe::to_json(outcome, cfg.probe);
    j["sample_count"] = cfg.sample_count;
    j["threshold"] = cfg.threshold;
    {
        nlohmann::json sets = nlohmann::json::array();
        for (const auto& t : in.test_sets) {
            sets.push_back({{"name", t.name}, {"role", dataset::to_string(*t.manifest.role())}, {"size", t.manifest.size()}});
        }
        j["test_sets"] = std::move(sets);
        j["train_sizes"] = {{"art", in.train_art.size()}, {"nsfw", in.train_nsfw.size()}};
    }
    write_atomic(cfg.out, dump(j));
    write_atomic(sibling(cfg.out, ".gains.csv"), probe::gains_csv(outcome));
    for (const auto& t : in.test_sets) {
        if (t.name != cfg.art_test_name && t.name != cfg.nsfw_test_name) continue;
        std::ostringstream m;
        dataset::write_manifest(m, t.manifest);
        write_atomic(sibling(cfg.out, "." + t.name + ".csv"), m.str());
    }
    for (const auto& [name, g] : outcome.gain) {
        log << name << ": mean gain " << g.mean_pp << " pp (std " << g.std_pp << ")\n";
    }
    write_sidecar(cfg, "finetune", {});
    return kExitOk;
}

int cmd_audit(const RunConfig& cfg, std::ostream& log) {
    std::vector<audit::AuditDataset> datasets;
    for (const auto& d : cfg.datasets) datasets.push_back({d.name, dataset::load_manifest(d.path, d.role)});
    std::vector<audit::ClassifierRun> runs;
    for (const auto& v : cfg.verdicts) {
        audit::VerdictMap map;
        for (const auto& [id, verdict] : backend::load_verdicts(v.path)) map.emplace(id, verdict.label);
        runs.push_back({v.classifier, v.dataset, std::move(map)});
    }
    const auto report = audit::build_audit(datasets, runs, cfg.group_keys);
    write_atomic(cfg.out, dump(audit::to_json(report)));
    write_atomic(sibling(cfg.out, ".metrics.csv"), audit::metrics_csv(report));
    write_atomic(sibling(cfg.out, ".breakdowns.csv"), audit::breakdowns_csv(report));
    for (const auto& m : report.metrics) {
        log << m.classifier << " on " << m.dataset << ": unsafe " << m.unsafe_rate.value() << ", recall "
            << m.recall.value() << "\n";
    }
    write_sidecar(cfg, "audit", {});
    return kExitOk;
}

int cmd_stats(const RunConfig& cfg, std::ostream& log) {
    const auto a = read_sample(*cfg.sample_a);
    const auto b = read_sample(*cfg.sample_b);
    const auto result = audit::mann_whitney_u(a, b, cfg.method);
    const auto text = dump(audit::to_json(result));
    if (cfg.out.empty()) {
        log << text;
    } else {
        write_atomic(cfg.out, text);
        log << "U=" << result.u_statistic << " p=" << result.p_value << " (" << to_string(result.method) << ")\n";
    }
    return kExitOk;
}

}  // namespace

fs::path sibling(const fs::path& out, const std::string& suffix) {
    fs::path p = out;
    p.replace_extension();
    return fs::path(p.string() + suffix);
}

void write_atomic(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code dir_ec;
        fs::create_directories(path.parent_path(), dir_ec);
        if (dir_ec) throw Error("cannot create '" + path.parent_path().string() + "': " + dir_ec.message());
    }
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + tmp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.close();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw Error("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error("cannot move output into place at '" + path.string() + "'");
    }
}

ParseResult parse_args(const std::vector<std::string>& argv, const EnvLookup& env) {
    RunConfig cfg;
    CLI::App app{"Zero-shot art/porn nudity classification and NSFW classifier auditing"};
    app.name(argv.empty() ? "artmod" : fs::path(argv[0]).filename().string());
    app.require_subcommand(1);

    std::string out, role, backend_path, manifest, terms, embeddings, text_embeddings, labels, features, art_pool,
        nsfw_pool, sample_a, sample_b, method = "auto", groups;
    std::vector<std::string> tests, baselines, datasets, verdicts;

    auto add_common = [&](CLI::App* sub, bool out_required) {
        sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
        auto* o = sub->add_option("--out", out, "Output path");
        if (out_required) o->required();
        sub->add_option("--threshold", cfg.threshold, "Binarization threshold in (0, 1)")
            ->check(kOpenUnit)
            ->capture_default_str();
    };

    auto* embed = app.add_subcommand("embed", "Embed manifest images and/or terms into an embedding cache");
    add_common(embed, true);
    embed->add_option("--backend", backend_path, "Backend spec JSON (default: $ARTMOD_BACKEND)")
        ->check(CLI::ExistingFile);
    embed->add_option("--manifest", manifest, "Image manifest CSV")->check(CLI::ExistingFile);
    embed->add_option("--role", role, "Manifest role (art_censored, art_wikistyle, nsfw)");
    embed->add_option("--terms", terms, "Terms JSON to embed as text")->check(CLI::ExistingFile);
    embed->add_flag("--default-terms", cfg.default_terms, "Embed the built-in term lists");

    auto* zs = app.add_subcommand("zeroshot", "Zero-shot evaluation over all term combinations");
    add_common(zs, true);
    zs->add_option("--embeddings", embeddings, "Image embedding cache")->required()->check(CLI::ExistingFile);
    zs->add_option("--text-embeddings", text_embeddings, "Term embedding cache (default: --embeddings)")
        ->check(CLI::ExistingFile);
    zs->add_option("--terms", terms, "Terms JSON")->check(CLI::ExistingFile);
    zs->add_flag("--default-terms", cfg.default_terms, "Use the built-in term lists instead of --terms");
    zs->add_option("--labels", labels, "Ground-truth manifest CSV")->required()->check(CLI::ExistingFile);
    zs->add_option("--role", role, "Manifest role check (optional)");

    auto* cl = app.add_subcommand("classify", "Score a manifest with a binary NSFW scorer");
    add_common(cl, true);
    cl->add_option("--backend", backend_path, "Backend spec JSON (default: $ARTMOD_BACKEND)")
        ->check(CLI::ExistingFile);
    cl->add_option("--manifest", manifest, "Image manifest CSV")->required()->check(CLI::ExistingFile);
    cl->add_option("--role", role, "Manifest role check (optional)");

    auto* ft = app.add_subcommand("finetune", "Cross-validated linear-probe retraining on frozen features");
    add_common(ft, true);
    ft->add_option("--features", features, "Feature (embedding) cache")->required()->check(CLI::ExistingFile);
    ft->add_option("--art-pool", art_pool, "Art manifest; a test set is sampled from it, the rest trains")
        ->required()
        ->check(CLI::ExistingFile);
    ft->add_option("--nsfw-pool", nsfw_pool, "NSFW manifest; a test set is sampled from it, the rest trains")
        ->required()
        ->check(CLI::ExistingFile);
    ft->add_option("--sample-count", cfg.sample_count, "Images sampled from each pool as a test set")
        ->capture_default_str();
    ft->add_option("--art-test-name", cfg.art_test_name)->capture_default_str();
    ft->add_option("--nsfw-test-name", cfg.nsfw_test_name)->capture_default_str();
    ft->add_option("--test", tests, "Extra test set NAME:ROLE:PATH (repeatable)");
    ft->add_option("--baseline", baselines, "Pre-training recall NAME=VALUE (fraction or NN.N%, repeatable)");
    ft->add_option("--folds", cfg.folds)->check(CLI::PositiveNumber)->capture_default_str();
    ft->add_option("--lr", cfg.probe.learning_rate)->check(CLI::PositiveNumber)->capture_default_str();
    ft->add_option("--epochs", cfg.probe.epochs)->check(CLI::PositiveNumber)->capture_default_str();
    ft->add_option("--l2", cfg.probe.l2)->check(CLI::NonNegativeNumber)->capture_default_str();

    auto* au = app.add_subcommand("audit", "Metrics, bias breakdowns, agreement and significance tests");
    add_common(au, true);
    au->add_option("--dataset", datasets, "Dataset NAME:ROLE:PATH (repeatable)")->required();
    au->add_option("--verdicts", verdicts, "Verdict CSV CLASSIFIER:DATASET:PATH (repeatable)")->required();
    au->add_option("--group", groups, "Comma-separated grouping keys (default gender,period)");

    auto* st = app.add_subcommand("stats", "Statistical tests");
    st->require_subcommand(1);
    auto* mwu = st->add_subcommand("mwu", "Mann-Whitney U test on two samples");
    add_common(mwu, false);
    mwu->add_option("--a", sample_a, "First sample file")->required()->check(CLI::ExistingFile);
    mwu->add_option("--b", sample_b, "Second sample file")->required()->check(CLI::ExistingFile);
    mwu->add_option("--method", method, "auto, exact or asymptotic")
        ->check(CLI::IsMember({"auto", "exact", "asymptotic"}))
        ->capture_default_str();

    std::vector<const char*> raw;
    raw.reserve(argv.size());
    for (const auto& a : argv) raw.push_back(a.c_str());
    if (raw.empty()) raw.push_back("artmod");

    ParseResult result;
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        const int code = app.exit(e, o, er);
        result.exit_code = code == 0 ? kExitOk : kExitUsage;
        result.message = o.str() + er.str();
        return result;
    }

    try {
        cfg.out = out;
        if (!role.empty()) cfg.role = role_or_usage(role);
        if (!terms.empty()) cfg.terms = terms;
        auto needs_backend = [&] {
            if (backend_path.empty() && env) {
                if (const char* e = env("ARTMOD_BACKEND"); e && *e) {
                    backend_path = e;
                    require_readable(backend_path);
                }
            }
            if (backend_path.empty()) throw UsageError("--backend is required (or set ARTMOD_BACKEND)");
            cfg.backend = backend_path;
        };

        if (embed->parsed()) {
            cfg.command = Command::embed;
            needs_backend();
            if (!manifest.empty()) cfg.manifest = manifest;
            if (cfg.terms && cfg.default_terms) throw UsageError("--terms and --default-terms are exclusive");
            if (!cfg.manifest && !cfg.terms && !cfg.default_terms) {
                throw UsageError("embed needs --manifest and/or --terms/--default-terms");
            }
        } else if (zs->parsed()) {
            cfg.command = Command::zeroshot;
            cfg.embeddings = embeddings;
            if (!text_embeddings.empty()) cfg.text_embeddings = text_embeddings;
            cfg.labels = labels;
            if (cfg.terms && cfg.default_terms) throw UsageError("--terms and --default-terms are exclusive");
            if (!cfg.terms && !cfg.default_terms) throw UsageError("zeroshot requires --terms (or --default-terms)");
        } else if (cl->parsed()) {
            cfg.command = Command::classify;
            needs_backend();
            cfg.manifest = manifest;
        } else if (ft->parsed()) {
            cfg.command = Command::finetune;
            cfg.features = features;
            cfg.art_pool = art_pool;
            cfg.nsfw_pool = nsfw_pool;
            for (const auto& t : tests) cfg.tests.push_back(parse_dataset_arg(t));
            for (const auto& b : baselines) {
                const auto eq = b.find('=');
                if (eq == std::string::npos || eq == 0) throw UsageError("expected NAME=VALUE for --baseline, got '" + b + "'");
                cfg.baseline[b.substr(0, eq)] = parse_fraction(b.substr(eq + 1));
            }
        } else if (au->parsed()) {
            cfg.command = Command::audit;
            for (const auto& d : datasets) cfg.datasets.push_back(parse_dataset_arg(d));
            for (const auto& v : verdicts) cfg.verdicts.push_back(parse_verdict_arg(v));
            if (!groups.empty()) {
                cfg.group_keys.clear();
                std::istringstream gs(groups);
                std::string g;
                while (std::getline(gs, g, ',')) {
                    try {
                        cfg.group_keys.push_back(audit::parse_group_key(g));
                    } catch (const Error& e) {
                        throw UsageError(e.what());
                    }
                }
            }
        } else {
            cfg.command = Command::stats_mwu;
            cfg.sample_a = sample_a;
            cfg.sample_b = sample_b;
            cfg.method = method == "exact"        ? audit::UTestRequest::exact
                         : method == "asymptotic" ? audit::UTestRequest::asymptotic
                                                  : audit::UTestRequest::automatic;
        }
    } catch (const UsageError& e) {
        result.exit_code = kExitUsage;
        result.message = std::string("error: ") + e.what() + "\nRun with --help for more information.\n";
        return result;
    }
    result.config = std::move(cfg);
    return result;
}

int execute(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::embed: return cmd_embed(cfg, log);
            case Command::zeroshot: return cmd_zeroshot(cfg, log);
            case Command::classify: return cmd_classify(cfg, log);
            case Command::finetune: return cmd_finetune(cfg, log);
            case Command::audit: return cmd_audit(cfg, log);
            case Command::stats_mwu: return cmd_stats(cfg, log);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err, const EnvLookup& env) {
    auto parsed = parse_args(argv, env);
    if (!parsed.config) {
        (parsed.exit_code == kExitOk ? out : err) << parsed.message;
        return parsed.exit_code;
    }
    return execute(*parsed.config, out, err);
}

}  // namespace artmod::cli
