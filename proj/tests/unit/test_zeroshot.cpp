#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "artmod/error.hpp"
#include "artmod/zeroshot/classifier.hpp"
#include "artmod/zeroshot/report_json.hpp"
#include "artmod/zeroshot/termset.hpp"
#include "support.hpp"

using namespace artmod;
using namespace artmod::zeroshot;
using artmod::testing::make_separable;
using artmod::testing::oracle_label;

namespace {

TermSet numbered(std::size_t n) {
    std::vector<std::string> p, a;
    for (std::size_t i = 0; i < n; ++i) {
        p.push_back("p" + std::to_string(i));
        a.push_back("a" + std::to_string(i));
    }
    return TermSet(p, a);
}

// All (P, A) pairs of equal size by walking every subset of each list.
std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> oracle_pairs(std::size_t n) {
    std::vector<std::vector<std::size_t>> subsets;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        std::vector<std::size_t> s;
        for (std::size_t b = 0; b < n; ++b)
            if (m & (1u << b)) s.push_back(b);
        subsets.push_back(s);
    }
    std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> out;
    for (const auto& p : subsets)
        for (const auto& a : subsets)
            if (p.size() == a.size()) out.emplace(p, a);
    return out;
}

std::vector<ReferenceEmbedding> refs_from(const std::vector<std::vector<float>>& porn,
                                          const std::vector<std::vector<float>>& art) {
    std::vector<ReferenceEmbedding> r;
    for (const auto& p : porn) r.push_back({numkit::EmbeddingVector(p), TermClass::porn});
    for (const auto& a : art) r.push_back({numkit::EmbeddingVector(a), TermClass::art});
    return r;
}

}  // namespace

TEST_CASE("termset validation and defaults") {
    const auto d = TermSet::defaults();
    CHECK(d.n() == 5);
    CHECK(d.porn_terms() ==
          std::vector<std::string>{"Porn", "Sexually Explicit Nudity", "Obscene Nudity", "Adult Material", "NSFW"});
    CHECK(d.art_terms() == std::vector<std::string>{"Artistic Nudity", "Nude Art", "Fine Art Nudity", "Nude Portraiture",
                                                    "Human Form in Art"});
    CHECK(d.all_terms().size() == 10);
    CHECK_THROWS_AS(TermSet({"a"}, {"b", "c"}), InvalidArgument);
    CHECK_THROWS_AS(TermSet({"a", "a"}, {"b", "c"}), InvalidArgument);
    CHECK_THROWS_AS(TermSet({"a", "x"}, {"b", "a"}), InvalidArgument);
    CHECK_THROWS_AS(TermSet({}, {}), InvalidArgument);

    const auto t = parse_termset(R"({"porn_terms": ["x", "y"], "art_terms": ["u", "v"]})");
    CHECK(t.n() == 2);
    CHECK_THROWS_AS(parse_termset(R"({"porn_terms": ["x"]})"), Error);
    CHECK_THROWS_AS(parse_termset("[1,2]"), Error);
}

TEST_CASE("enumerate_combinations against exhaustive subset enumeration") {
    CHECK(enumerate_combinations(numbered(1)).size() == 1);
    const auto two = enumerate_combinations(numbered(2));
    CHECK(two.size() == 5);
    CHECK(std::count_if(two.begin(), two.end(), [](const auto& c) { return c.k() == 2; }) == 4);

    for (std::size_t n = 1; n <= 6; ++n) {
        const auto combos = enumerate_combinations(numbered(n));
        const auto oracle = oracle_pairs(n);
        CHECK(combos.size() == oracle.size());
        std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> got;
        for (const auto& c : combos) {
            CHECK(c.porn_indices().size() == c.art_indices().size());
            got.emplace(c.porn_indices(), c.art_indices());
        }
        CHECK(got == oracle);
        // (i, porn_mask, art_mask) ascending.
        for (std::size_t i = 1; i < combos.size(); ++i) {
            const auto& a = combos[i - 1];
            const auto& b = combos[i];
            CHECK(std::tuple(a.size(), a.porn_mask, a.art_mask) < std::tuple(b.size(), b.porn_mask, b.art_mask));
        }
    }

    const auto five = enumerate_combinations(TermSet::defaults());
    std::map<std::size_t, std::size_t> hist;
    for (const auto& c : five) ++hist[c.k()];
    CHECK(five.size() == 251);
    CHECK(hist == std::map<std::size_t, std::size_t>{{2, 25}, {4, 100}, {6, 100}, {8, 25}, {10, 1}});
}

TEST_CASE("knn_classify examples") {
    const auto refs = refs_from({{0, 1}}, {{1, 0}});
    CHECK(knn_classify(numkit::EmbeddingVector{1, 0}, refs) == Label::safe);
    CHECK(knn_classify(numkit::EmbeddingVector{0, 1}, refs) == Label::unsafe);
    // Equidistant: cos 1/sqrt(2) to both.
    CHECK(knn_classify(numkit::EmbeddingVector{1, 1}, refs) == Label::safe);
    const double tie[] = {0.5};
    CHECK(decide(tie, tie) == Label::safe);

    CHECK_THROWS_AS(knn_classify(numkit::EmbeddingVector{1, 0}, refs_from({{0, 1}}, {})), InvalidArgument);
    CHECK_THROWS_AS(knn_classify(numkit::EmbeddingVector{1, 0, 0}, refs), DimensionError);
    CHECK_THROWS_AS(knn_classify(numkit::EmbeddingVector{0, 0}, refs), ZeroNormError);
}

TEST_CASE("knn_classify matches the brute-force oracle (3+3 terms, 8-d)") {
    numkit::Rng rng(50);
    std::vector<std::vector<float>> porn, art;
    for (int i = 0; i < 3; ++i) {
        porn.push_back(artmod::testing::random_vector(rng, 8));
        art.push_back(artmod::testing::random_vector(rng, 8));
    }
    const auto refs = refs_from(porn, art);
    int unsafe = 0;
    for (int i = 0; i < 50; ++i) {
        const auto img = artmod::testing::random_vector(rng, 8);
        const auto l = knn_classify(numkit::EmbeddingVector(img), refs);
        CHECK(l == oracle_label(img, porn, art));
        unsafe += l == Label::unsafe;
    }
    // Both outcomes occur, so the comparison is not vacuous.
    CHECK(unsafe > 0);
    CHECK(unsafe < 50);
}

TEST_CASE("evaluate: separable fixture gives accuracy 1 everywhere") {
    const auto f = make_separable(12, 9, 3);
    const auto report = evaluate(f.image_map(), f.truth, f.terms, f.text_map());
    CHECK(report.per_combination.size() == 251);
    for (const auto& r : report.per_combination) {
        CHECK(r.accuracy == 1.0);
        CHECK(r.total == 21);
    }
    REQUIRE(report.per_k.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(report.per_k[i].k == 2 * (i + 1));
        CHECK(report.per_k[i].mean_accuracy == 1.0);
        CHECK(report.per_k[i].std_accuracy == 0.0);
    }
    CHECK(report.predictions == f.truth);

    const auto j = to_json(report, f.terms);
    CHECK(j["combinations"].size() == 251);
    CHECK(j["per_k"][4]["k"] == 10);
    CHECK(per_k_csv(report).rfind("k,combinations,mean_accuracy,std_accuracy\n2,25,1,0\n", 0) == 0);
}

TEST_CASE("evaluate: complement case and aggregation arithmetic") {
    auto f = make_separable(4, 0, 1);
    // Every image is safe but sits on the porn axis: all predictions wrong.
    for (auto& [id, v] : f.images) std::swap(v[0], v[1]);
    const auto report = evaluate(f.image_map(), f.truth, f.terms, f.text_map());
    for (const auto& r : report.per_combination) CHECK(r.accuracy == 0.0);

    // Mixed outcome: per-k mean and population std recomputed from per_combination.
    numkit::Rng rng(12);
    EmbeddingMap imgs, texts;
    GroundTruth truth;
    for (int i = 0; i < 30; ++i) {
        const auto id = "i" + std::to_string(i);
        imgs.emplace(id, numkit::EmbeddingVector(artmod::testing::random_vector(rng, 6)));
        truth.emplace_back(id, i % 3 == 0 ? Label::unsafe : Label::safe);
    }
    const auto terms = numbered(4);
    for (const auto& t : terms.all_terms()) texts.emplace(t, numkit::EmbeddingVector(artmod::testing::random_vector(rng, 6)));
    const auto r = evaluate(imgs, truth, terms, texts);
    for (const auto& s : r.per_k) {
        std::vector<double> acc;
        for (const auto& c : r.per_combination)
            if (c.combination.k() == s.k) acc.push_back(c.accuracy);
        CHECK(s.combinations == acc.size());
        double mean = 0;
        for (double a : acc) mean += a;
        mean /= acc.size();
        double var = 0;
        for (double a : acc) var += (a - mean) * (a - mean);
        CHECK(s.mean_accuracy == doctest::Approx(mean));
        CHECK(s.std_accuracy == doctest::Approx(std::sqrt(var / acc.size())));
    }
    // Every per-combination accuracy agrees with the oracle.
    for (const auto& c : r.per_combination) {
        std::vector<std::vector<float>> porn, art;
        for (const auto& t : c.porn_terms) porn.emplace_back(texts.at(t).values().begin(), texts.at(t).values().end());
        for (const auto& t : c.art_terms) art.emplace_back(texts.at(t).values().begin(), texts.at(t).values().end());
        std::size_t correct = 0;
        for (const auto& [id, label] : truth) {
            const auto& v = imgs.at(id).values();
            correct += oracle_label({v.begin(), v.end()}, porn, art) == label;
        }
        CHECK(c.correct == correct);
    }
}

TEST_CASE("evaluate: missing keys are listed") {
    const auto f = make_separable(2, 2, 1);
    auto imgs = f.image_map();
    imgs.erase("safe1");
    auto texts = f.text_map();
    texts.erase("NSFW");
    try {
        evaluate(imgs, f.truth, f.terms, texts);
        FAIL("expected error");
    } catch (const Error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("safe1") != std::string::npos);
        CHECK(msg.find("NSFW") != std::string::npos);
    }
    CHECK_THROWS_AS(evaluate(f.image_map(), {}, f.terms, f.text_map()), InvalidArgument);
}

TEST_CASE("term separation on separable term embeddings") {
    const auto f = make_separable(1, 1, 1);
    const auto s = analyze_term_separation(f.terms, f.text_map(), 42);
    CHECK(s.terms.size() == 10);
    CHECK(s.projection[0].size() == 2);
    CHECK(s.purity == 1.0);
    const auto again = analyze_term_separation(f.terms, f.text_map(), 42);
    CHECK(again.clusters == s.clusters);
    CHECK(again.projection == s.projection);
}
