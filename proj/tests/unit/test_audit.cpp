#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "artmod/audit/metrics.hpp"
#include "artmod/audit/report.hpp"
#include "artmod/audit/stats.hpp"
#include "artmod/error.hpp"
#include "mwu_pairs.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace artmod;
using namespace artmod::audit;
using dataset::ManifestRole;

namespace {

const double kScipyReference[][2] = {
#include "mwu_reference.inc"
};

dataset::ImageRecord rec(const std::string& id, Label label, bool female = false, bool male = false,
                         dataset::Period period = dataset::Period::unknown, std::optional<std::string> artist = {}) {
    dataset::ImageRecord r;
    r.id = id;
    r.label = label;
    r.genders = {female, male};
    r.period = period;
    r.artist = std::move(artist);
    return r;
}

dataset::Manifest art_manifest(std::size_t n, ManifestRole role = ManifestRole::art_censored) {
    std::vector<dataset::ImageRecord> recs;
    for (std::size_t i = 0; i < n; ++i) recs.push_back(rec("a" + std::to_string(i), Label::safe));
    return dataset::Manifest(recs, role);
}

std::vector<double> distinct_sample(numkit::Rng& rng, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.uniform01();
    return v;
}

}  // namespace

TEST_CASE("compute_metrics: hand counts") {
    const auto m = art_manifest(10);
    VerdictMap v;
    for (std::size_t i = 0; i < 10; ++i) v["a" + std::to_string(i)] = i < 3 ? Label::unsafe : Label::safe;
    const auto row = compute_metrics(v, m, "C", "D");
    CHECK(row.unsafe_rate == Fraction{3, 10});
    CHECK(row.unsafe_rate.value() == 0.3);
    CHECK(row.recall.value() == 0.7);
    CHECK(row.recall.numerator + row.unsafe_rate.numerator == row.recall.denominator);

    std::vector<dataset::ImageRecord> nsfw{rec("x", Label::unsafe), rec("y", Label::unsafe)};
    const dataset::Manifest nm(nsfw, ManifestRole::nsfw);
    const auto nrow = compute_metrics({{"x", Label::unsafe}, {"y", Label::unsafe}}, nm);
    CHECK(nrow.recall.value() == 1.0);

    v.erase("a4");
    v.erase("a7");
    try {
        compute_metrics(v, m);
        FAIL("expected missing verdicts");
    } catch (const Error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("a4") != std::string::npos);
        CHECK(msg.find("a7") != std::string::npos);
    }
}

TEST_CASE("compute_metrics: recall + FPR = 1 on random art fixtures") {
    numkit::Rng rng(9);
    for (int t = 0; t < 50; ++t) {
        const auto n = 1 + rng.uniform_below(200);
        const auto m = art_manifest(n, t % 2 ? ManifestRole::art_wikistyle : ManifestRole::art_censored);
        VerdictMap v;
        for (const auto& r : m.records()) v[r.id] = rng.uniform01() < 0.4 ? Label::unsafe : Label::safe;
        const auto row = compute_metrics(v, m);
        CHECK(row.recall.numerator + row.unsafe_rate.numerator == n);
        CHECK(row.recall.value() + row.unsafe_rate.value() == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("group_breakdown") {
    std::vector<dataset::ImageRecord> recs{rec("f1", Label::safe, true), rec("f2", Label::safe, true),
                                           rec("m1", Label::safe, false, true), rec("m2", Label::safe, false, true)};
    const dataset::Manifest m(recs, ManifestRole::art_censored);
    const VerdictMap v{{"f1", Label::unsafe}, {"f2", Label::safe}, {"m1", Label::safe}, {"m2", Label::safe}};
    const auto g = group_breakdown(v, m, GroupKey::gender);
    REQUIRE(g.groups.size() == 2);
    CHECK(g.groups[0].group == "female");
    CHECK(g.groups[0].rate == 0.5);
    CHECK(g.groups[1].group == "male");
    CHECK(g.groups[1].rate == 0.0);

    std::vector<dataset::ImageRecord> both{rec("b", Label::safe, true, true), rec("u", Label::safe)};
    const dataset::Manifest bm(both, ManifestRole::art_censored);
    const auto bg = group_breakdown({{"b", Label::unsafe}, {"u", Label::unsafe}}, bm, GroupKey::gender);
    REQUIRE(bg.groups.size() == 3);
    CHECK(bg.groups[0].flagged == 1);
    CHECK(bg.groups[1].flagged == 1);
    CHECK(bg.groups[2].group == "unknown");
    CHECK(bg.total_flagged == 2);

    CHECK_THROWS_AS(parse_group_key("colour"), InvalidArgument);
    CHECK(parse_group_key("platform") == GroupKey::platform);
}

TEST_CASE("group_breakdown: unanimous-set shares") {
    // 81 unanimously flagged images: 75 show a female body, 11 a male body
    // (5 both); one artist accounts for 11 of them.
    std::vector<dataset::ImageRecord> recs;
    for (int i = 0; i < 81; ++i) {
        const bool female = i < 75;
        const bool male = i >= 70;
        recs.push_back(rec("i" + std::to_string(i), Label::safe, female, male, dataset::Period::unknown,
                           i < 11 ? std::optional<std::string>("Artist A") : std::optional<std::string>("Other " + std::to_string(i))));
    }
    for (int i = 0; i < 40; ++i) recs.push_back(rec("s" + std::to_string(i), Label::safe, true));
    const dataset::Manifest m(recs, ManifestRole::art_censored);
    VerdictMap v;
    for (const auto& r : recs) v[r.id] = r.id[0] == 'i' ? Label::unsafe : Label::safe;

    const auto artist = group_breakdown(v, m, GroupKey::artist);
    const auto it = std::find_if(artist.groups.begin(), artist.groups.end(), [](const auto& g) { return g.group == "Artist A"; });
    REQUIRE(it != artist.groups.end());
    CHECK(it->flagged == 11);
    CHECK(std::round(it->share * 1000) / 10 == 13.6);
    // Disjoint key: group counts reconcile with the total.
    std::size_t sum = 0, flagged = 0;
    for (const auto& g : artist.groups) {
        sum += g.total;
        flagged += g.flagged;
    }
    CHECK(sum == m.size());
    CHECK(flagged == 81);

    const auto gender = group_breakdown(v, m, GroupKey::gender);
    CHECK(std::round(gender.groups[0].share * 1000) / 10 == 92.6);
    CHECK(std::round(gender.groups[1].share * 1000) / 10 == 13.6);
}

TEST_CASE("agreement") {
    const std::vector<std::string> ids{"x", "y", "z"};
    const VerdictMap c1{{"x", Label::unsafe}, {"y", Label::unsafe}, {"z", Label::safe}};
    const VerdictMap c2{{"x", Label::unsafe}, {"y", Label::unsafe}, {"z", Label::safe}};
    const VerdictMap c3{{"x", Label::unsafe}, {"y", Label::safe}, {"z", Label::safe}};
    const auto r = agreement({{"C1", c1}, {"C2", c2}, {"C3", c3}}, ids);
    CHECK(r.unanimous_unsafe == std::vector<std::string>{"x"});
    CHECK(r.unanimous_safe == std::vector<std::string>{"z"});
    CHECK(r.matrix[1] == std::vector<Label>{Label::unsafe, Label::unsafe, Label::safe});

    const auto same = agreement({{"C1", c1}, {"C2", c1}}, ids);
    CHECK(same.unanimous_unsafe.size() + same.unanimous_safe.size() == ids.size());

    const auto u = unanimous_unsafe_verdicts(r);
    CHECK(u.at("x") == Label::unsafe);
    CHECK(u.at("y") == Label::safe);

    CHECK_THROWS_AS(agreement({{"C1", c1}}, ids), InvalidArgument);
    CHECK_THROWS_AS(agreement({{"C1", c1}, {"C2", {{"x", Label::safe}}}}, ids), Error);
}

TEST_CASE("mann_whitney_u: examples") {
    const std::vector<double> a{1, 2, 3}, b{4, 5, 6};
    const auto r = mann_whitney_u(a, b);
    CHECK(r.u_statistic == 0.0);
    CHECK(r.method == UTestMethod::exact);
    CHECK(r.p_value == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(artmod::testing::enumeration_p(a, b) == doctest::Approx(0.1).epsilon(1e-12));

    const std::vector<double> five{5};
    const auto t = mann_whitney_u(five, five);
    CHECK(t.u_statistic == 0.5);
    CHECK(t.p_value == 1.0);

    CHECK_THROWS_AS(mann_whitney_u(std::vector<double>{}, b), InvalidArgument);
    CHECK_THROWS_AS(mann_whitney_u(std::vector<double>{1, 1}, std::vector<double>{1, 2}, UTestRequest::exact), InvalidArgument);
    CHECK(mann_whitney_u(a, b, UTestRequest::asymptotic).method == UTestMethod::normal_approx_tie_corrected);
}

TEST_CASE("mann_whitney_u: exact p equals enumeration") {
    numkit::Rng rng(71);
    for (int t = 0; t < 40; ++t) {
        const auto n1 = 1 + rng.uniform_below(7), n2 = 1 + rng.uniform_below(7);
        const auto a = distinct_sample(rng, n1), b = distinct_sample(rng, n2);
        const auto r = mann_whitney_u(a, b);
        CHECK(r.method == UTestMethod::exact);
        CHECK(r.p_value == doctest::Approx(artmod::testing::enumeration_p(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("mann_whitney_u: antisymmetry and bounds") {
    numkit::Rng rng(72);
    for (int t = 0; t < 100; ++t) {
        const auto n1 = 1 + rng.uniform_below(40), n2 = 1 + rng.uniform_below(40);
        std::vector<double> a(n1), b(n2);
        for (auto& x : a) x = static_cast<double>(rng.uniform_below(6));
        for (auto& x : b) x = static_cast<double>(rng.uniform_below(6));
        const auto ab = mann_whitney_u(a, b), ba = mann_whitney_u(b, a);
        CHECK(ab.u_statistic + ba.u_statistic == double(n1 * n2));
        CHECK(ab.u_statistic >= 0.0);
        CHECK(ab.u_statistic <= double(n1 * n2));
        CHECK(ab.p_value == doctest::Approx(ba.p_value).epsilon(1e-12));
        CHECK(ab.p_value >= 0.0);
        CHECK(ab.p_value <= 1.0);
    }
}

TEST_CASE("mann_whitney_u: exact and approximate agree in the overlap regime") {
    numkit::Rng rng(73);
    for (int t = 0; t < 30; ++t) {
        const auto n1 = 8 + rng.uniform_below(3), n2 = 8 + rng.uniform_below(3);
        const auto a = distinct_sample(rng, n1), b = distinct_sample(rng, n2);
        const auto e = mann_whitney_u(a, b, UTestRequest::exact);
        const auto n = mann_whitney_u(a, b, UTestRequest::asymptotic);
        CHECK(e.u_statistic == n.u_statistic);
        CHECK(std::abs(e.p_value - n.p_value) < 0.01);
    }
}

TEST_CASE("mann_whitney_u: tie-corrected approximation against frozen reference values") {
    for (int i = 0; i < artmod::testing::kMwuPairs; ++i) {
        const auto [a, b] = artmod::testing::binary_pair(i);
        const auto r = mann_whitney_u(a, b);
        CHECK(r.method == UTestMethod::normal_approx_tie_corrected);
        CHECK(std::abs(r.u_statistic - kScipyReference[i][0]) <= 1e-6);
        CHECK(std::abs(r.p_value - kScipyReference[i][1]) <= 1e-4);
        CHECK(r.p_value == doctest::Approx(kScipyReference[i][1]).epsilon(1e-9));
    }
    std::vector<double> a(200, 0.0), b(200, 0.0);
    std::fill(a.begin(), a.begin() + 70, 1.0);
    std::fill(b.begin(), b.begin() + 16, 1.0);
    const auto r = mann_whitney_u(a, b);
    CHECK(r.p_value < 0.01);
    CHECK(std::abs(r.u_statistic - kScipyReference[20][0]) <= 1e-6);
    CHECK(r.p_value == doctest::Approx(kScipyReference[20][1]).epsilon(1e-6));

    // All values tied: no variance, p = 1.
    const std::vector<double> zeros(30, 0.0);
    CHECK(mann_whitney_u(zeros, zeros).p_value == 1.0);
}

TEST_CASE("build_audit assembles metrics, breakdowns, agreement and tests") {
    std::vector<dataset::ImageRecord> d1, d2, d3;
    for (int i = 0; i < 20; ++i) {
        d1.push_back(rec("p" + std::to_string(i), Label::safe, i % 2 == 0, i % 3 == 0, dataset::Period::p1850_1900));
        d2.push_back(rec("w" + std::to_string(i), Label::safe, i % 2 == 1, i % 4 == 0, dataset::Period::pre1800));
        d3.push_back(rec("n" + std::to_string(i), Label::unsafe));
    }
    std::vector<AuditDataset> datasets{{"D01", dataset::Manifest(d1, ManifestRole::art_censored)},
                                       {"D02", dataset::Manifest(d2, ManifestRole::art_wikistyle)},
                                       {"D03", dataset::Manifest(d3, ManifestRole::nsfw)}};
    std::vector<ClassifierRun> runs;
    for (int c = 0; c < 3; ++c) {
        for (const auto& d : datasets) {
            VerdictMap v;
            int i = 0;
            for (const auto& r : d.manifest.records()) v[r.id] = (i++ + c) % 3 == 0 ? Label::unsafe : Label::safe;
            runs.push_back({"C0" + std::to_string(c + 1), d.name, v});
        }
    }
    const auto report = build_audit(datasets, runs);
    CHECK(report.metrics.size() == 9);
    CHECK(report.agreements.size() == 3);
    // Per classifier: 2 keys x 2 art datasets; unanimous: (2 keys + artist) x 2 art datasets.
    CHECK(report.breakdowns.size() == 3 * 4 + 6);
    // Per classifier: female-vs-male on 2 art datasets plus D01 vs D02.
    CHECK(report.tests.size() == 9);

    const auto j = to_json(report);
    CHECK(j["metrics"].size() == 9);
    CHECK(metrics_csv(report).rfind("classifier,dataset,role,unsafe,total,unsafe_rate,recall_hits,recall\n", 0) == 0);
    CHECK(breakdowns_csv(report).rfind("classifier,dataset,key,group,total,flagged,rate,share\n", 0) == 0);

    runs.push_back({"C01", "D09", {}});
    CHECK_THROWS_AS(build_audit(datasets, runs), InvalidArgument);
}
