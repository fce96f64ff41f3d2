#include "artmod/zeroshot/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "artmod/error.hpp"
#include "artmod/numkit/kmeans.hpp"
#include "artmod/numkit/pca.hpp"

namespace artmod::zeroshot {

Label decide(std::span<const double> porn_similarities, std::span<const double> art_similarities) {
    double porn = 0.0;
    double art = 0.0;
    for (double s : porn_similarities) porn += s;
    for (double s : art_similarities) art += s;
    return porn > art ? Label::unsafe : Label::safe;
}

Label knn_classify(const numkit::EmbeddingVector& image, std::span<const ReferenceEmbedding> refs) {
    std::vector<double> porn, art;
    for (const auto& r : refs) {
        const double s = numkit::cosine_similarity(image, r.embedding);
        (r.cls == TermClass::porn ? porn : art).push_back(s);
    }
    if (porn.empty() || art.empty()) throw InvalidArgument("knn_classify needs at least one reference per class");
    return decide(porn, art);
}

namespace {

const numkit::EmbeddingVector& require(const EmbeddingMap& m, const std::string& key) { return m.at(key); }

void check_coverage(const EmbeddingMap& images, const GroundTruth& truth, const TermSet& terms,
                    const EmbeddingMap& texts) {
    std::vector<std::string> missing_ids, missing_terms;
    for (const auto& [id, _] : truth)
        if (!images.contains(id)) missing_ids.push_back(id);
    for (const auto& t : terms.all_terms())
        if (!texts.contains(t)) missing_terms.push_back(t);
    if (missing_ids.empty() && missing_terms.empty()) return;

    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
        return s;
    };
    std::string msg = "missing embeddings:";
    if (!missing_ids.empty()) msg += " images [" + join(missing_ids) + "]";
    if (!missing_terms.empty()) msg += " terms [" + join(missing_terms) + "]";
    throw Error(msg);
}

}  // namespace

ZeroShotReport evaluate(const EmbeddingMap& image_embeddings, const GroundTruth& ground_truth, const TermSet& terms,
                        const EmbeddingMap& text_embeddings) {
    if (ground_truth.empty()) throw InvalidArgument("zero-shot evaluation needs at least one labeled image");
    check_coverage(image_embeddings, ground_truth, terms, text_embeddings);

    const std::size_t n = terms.n();
    const std::size_t images = ground_truth.size();

    // Similarities are computed once per (image, term) and reused by every
    // combination; knn_classify computes the same values on the fly.
    std::vector<std::vector<double>> porn_sim(images, std::vector<double>(n));
    std::vector<std::vector<double>> art_sim(images, std::vector<double>(n));
    for (std::size_t i = 0; i < images; ++i) {
        const auto& img = require(image_embeddings, ground_truth[i].first);
        for (std::size_t t = 0; t < n; ++t) {
            porn_sim[i][t] = numkit::cosine_similarity(img, require(text_embeddings, terms.porn_terms()[t]));
            art_sim[i][t] = numkit::cosine_similarity(img, require(text_embeddings, terms.art_terms()[t]));
        }
    }

    ZeroShotReport report;
    const auto combos = enumerate_combinations(terms);
    report.per_combination.reserve(combos.size());
    std::vector<double> p, a;
    for (const auto& combo : combos) {
        const auto pi = combo.porn_indices();
        const auto ai = combo.art_indices();
        CombinationResult r;
        r.combination = combo;
        for (auto idx : pi) r.porn_terms.push_back(terms.porn_terms()[idx]);
        for (auto idx : ai) r.art_terms.push_back(terms.art_terms()[idx]);
        const bool full = combo.size() == n;

        for (std::size_t i = 0; i < images; ++i) {
            p.clear();
            a.clear();
            for (auto idx : pi) p.push_back(porn_sim[i][idx]);
            for (auto idx : ai) a.push_back(art_sim[i][idx]);
            const Label predicted = decide(p, a);
            if (predicted == ground_truth[i].second) ++r.correct;
            if (full) report.predictions.emplace_back(ground_truth[i].first, predicted);
        }
        r.total = images;
        r.accuracy = static_cast<double>(r.correct) / static_cast<double>(r.total);
        report.per_combination.push_back(std::move(r));
    }

    std::map<std::size_t, std::vector<double>> by_k;
    for (const auto& r : report.per_combination) by_k[r.combination.k()].push_back(r.accuracy);
    for (const auto& [k, accs] : by_k) {
        KSummary s;
        s.k = k;
        s.combinations = accs.size();
        double sum = 0.0;
        for (double x : accs) sum += x;
        s.mean_accuracy = sum / static_cast<double>(accs.size());
        double var = 0.0;
        for (double x : accs) var += (x - s.mean_accuracy) * (x - s.mean_accuracy);
        s.std_accuracy = std::sqrt(var / static_cast<double>(accs.size()));
        report.per_k.push_back(s);
    }
    return report;
}

TermSeparation analyze_term_separation(const TermSet& terms, const EmbeddingMap& text_embeddings, std::uint64_t seed) {
    TermSeparation out;
    out.terms = terms.all_terms();
    std::vector<numkit::EmbeddingVector> points;
    for (std::size_t i = 0; i < out.terms.size(); ++i) {
        auto it = text_embeddings.find(out.terms[i]);
        if (it == text_embeddings.end()) throw Error("missing embedding for term '" + out.terms[i] + "'");
        points.push_back(it->second);
        out.classes.push_back(i < terms.n() ? TermClass::porn : TermClass::art);
    }
    if (points.size() < 3) throw InvalidArgument("term separation needs at least 3 terms");

    auto pca = numkit::pca_fit_project(points, std::min<std::size_t>(2, points.size() - 1));
    out.projection = std::move(pca.points);
    out.explained_variance = std::move(pca.model.explained_variance);

    const auto km = numkit::kmeans(points, 2, seed);
    out.clusters = km.assignments;
    std::size_t agree = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if ((out.clusters[i] == 0) == (out.classes[i] == TermClass::porn)) ++agree;
    }
    const std::size_t best = std::max(agree, points.size() - agree);
    out.purity = static_cast<double>(best) / static_cast<double>(points.size());
    return out;
}

}  // namespace artmod::zeroshot
