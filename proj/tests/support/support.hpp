#pragma once

// Fixtures shared by the unit tests and the acceptance runner.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "artmod/dataset/manifest.hpp"
#include "artmod/numkit/random.hpp"
#include "artmod/numkit/vector.hpp"
#include "artmod/zeroshot/classifier.hpp"
#include "artmod/zeroshot/termset.hpp"

namespace artmod::testing {

class TempDir {
public:
    TempDir() {
        std::string tmpl = (std::filesystem::temp_directory_path() / "artmod-test-XXXXXX").string();
        if (!::mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
        path_ = tmpl;
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + p.string());
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<float> random_vector(numkit::Rng& rng, std::size_t dim) {
    std::vector<float> v(dim);
    for (auto& x : v) x = static_cast<float>(rng.normal());
    return v;
}

// Brute-force reference for the zero-shot rule: cosines from scratch in
// long double, class sums compared directly.
inline Label oracle_label(const std::vector<float>& image, const std::vector<std::vector<float>>& porn,
                          const std::vector<std::vector<float>>& art) {
    auto cos = [](const std::vector<float>& a, const std::vector<float>& b) {
        long double ab = 0, aa = 0, bb = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            ab += static_cast<long double>(a[i]) * b[i];
            aa += static_cast<long double>(a[i]) * a[i];
            bb += static_cast<long double>(b[i]) * b[i];
        }
        return ab / std::sqrt(aa * bb);
    };
    long double ps = 0, as = 0;
    for (const auto& p : porn) ps += cos(image, p);
    for (const auto& a : art) as += cos(image, a);
    return ps > as ? Label::unsafe : Label::safe;
}

// Separable geometry. Axis 0 is "art", axis 1 is "porn"; every term also
// gets its own private axis so terms are distinct, and images carry noise on
// axes no term touches. Each safe image then has one cosine to every art
// term and a much smaller one to every porn term (and vice versa), so every
// combination classifies every image correctly.
struct SeparableFixture {
    zeroshot::TermSet terms = zeroshot::TermSet::defaults();
    std::vector<std::pair<std::string, std::vector<float>>> text;    // term -> vector
    std::vector<std::pair<std::string, std::vector<float>>> images;  // id -> vector
    zeroshot::GroundTruth truth;
    std::size_t dim = 0;

    zeroshot::EmbeddingMap image_map() const {
        zeroshot::EmbeddingMap m;
        for (const auto& [k, v] : images) m.emplace(k, numkit::EmbeddingVector(v));
        return m;
    }
    zeroshot::EmbeddingMap text_map() const {
        zeroshot::EmbeddingMap m;
        for (const auto& [k, v] : text) m.emplace(k, numkit::EmbeddingVector(v));
        return m;
    }
};

inline SeparableFixture make_separable(std::size_t n_safe, std::size_t n_unsafe, std::uint64_t seed,
                                       zeroshot::TermSet terms = zeroshot::TermSet::defaults()) {
    SeparableFixture f;
    f.terms = std::move(terms);
    const std::size_t n = f.terms.n();
    const std::size_t noise_dims = 4;
    f.dim = 2 + 2 * n + noise_dims;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<float> p(f.dim, 0.0f), a(f.dim, 0.0f);
        p[1] = 1.0f;
        p[2 + j] = 0.5f;
        a[0] = 1.0f;
        a[2 + n + j] = 0.5f;
        f.text.emplace_back(f.terms.porn_terms()[j], p);
        f.text.emplace_back(f.terms.art_terms()[j], a);
    }
    numkit::Rng rng(seed);
    auto image = [&](bool unsafe) {
        std::vector<float> v(f.dim, 0.0f);
        v[unsafe ? 1 : 0] = static_cast<float>(1.0 + rng.uniform01());
        v[unsafe ? 0 : 1] = static_cast<float>(0.1 * rng.uniform01());
        for (std::size_t d = 2 + 2 * n; d < f.dim; ++d) v[d] = static_cast<float>(0.3 * rng.normal());
        return v;
    };
    for (std::size_t i = 0; i < n_safe; ++i) {
        const std::string id = "safe" + std::to_string(i);
        f.images.emplace_back(id, image(false));
        f.truth.emplace_back(id, Label::safe);
    }
    for (std::size_t i = 0; i < n_unsafe; ++i) {
        const std::string id = "nsfw" + std::to_string(i);
        f.images.emplace_back(id, image(true));
        f.truth.emplace_back(id, Label::unsafe);
    }
    return f;
}

// Mock backend fixture CSV. Nine significant digits round-trip every float.
inline std::string mock_fixture_csv(const std::vector<std::pair<std::string, std::vector<float>>>& rows) {
    std::ostringstream s;
    s << std::setprecision(9);
    for (const auto& [k, v] : rows) {
        s << k;
        for (float x : v) s << ',' << x;
        s << '\n';
    }
    return s.str();
}

struct ManifestRow {
    std::string id;
    std::string label;
    std::string genders;
    std::string period;
    std::string artist;
};

inline std::string manifest_csv(const std::vector<ManifestRow>& rows) {
    std::string s(dataset::kManifestHeader);
    s += '\n';
    for (const auto& r : rows) {
        s += r.id + ",img/" + r.id + ".jpg," + r.label + "," + r.genders + "," + r.period + "," + r.artist + ",,\n";
    }
    return s;
}

inline std::string mock_spec_json(const std::filesystem::path& fixture, std::size_t dim = 0) {
    std::string s = "{\"kind\": \"mock\", \"model_id\": \"fixture\", \"fixture_path\": \"" + fixture.string() + "\"";
    if (dim) s += ", \"dim\": " + std::to_string(dim);
    return s + "}\n";
}

}  // namespace artmod::testing
