#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "artmod/label.hpp"
#include "artmod/numkit/vector.hpp"
#include "artmod/zeroshot/termset.hpp"

namespace artmod::zeroshot {

struct ReferenceEmbedding {
    numkit::EmbeddingVector embedding;
    TermClass cls;
};

/// Decision rule given per-term cosine similarities, summed in span order.
/// With k equal to the number of references every reference is a neighbor,
/// so a similarity-weighted kNN vote reduces to comparing these class sums.
/// Ties go to safe.
Label decide(std::span<const double> porn_similarities, std::span<const double> art_similarities);

/// Weighted kNN with k = refs.size() and cosine similarity as vote weight.
/// Throws InvalidArgument when a class has no reference, DimensionError /
/// ZeroNormError on bad vectors.
Label knn_classify(const numkit::EmbeddingVector& image, std::span<const ReferenceEmbedding> refs);

using EmbeddingMap = std::unordered_map<std::string, numkit::EmbeddingVector>;
/// Ordered (id, ground-truth label) pairs.
using GroundTruth = std::vector<std::pair<std::string, Label>>;

struct CombinationResult {
    TermCombination combination;
    std::vector<std::string> porn_terms;
    std::vector<std::string> art_terms;
    std::size_t correct = 0;
    std::size_t total = 0;
    double accuracy = 0.0;
};

struct KSummary {
    std::size_t k = 0;
    std::size_t combinations = 0;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;  // population standard deviation over combinations
};

struct ZeroShotReport {
    std::vector<CombinationResult> per_combination;  // enumeration order
    std::vector<KSummary> per_k;                     // ascending k
    GroundTruth predictions;                         // full combination (k = 2n), ground-truth order
};

/// Classify every labeled image under every term combination and report
/// proportion-correct accuracy per combination and its mean/std per k.
/// Throws artmod::Error naming every missing image id or term when an
/// embedding is absent.
ZeroShotReport evaluate(const EmbeddingMap& image_embeddings, const GroundTruth& ground_truth, const TermSet& terms,
                        const EmbeddingMap& text_embeddings);

/// Whether the term embeddings form two clusters matching their classes:
/// 2-d PCA projection for plotting plus k-means (k = 2) on the raw vectors.
struct TermSeparation {
    std::vector<std::string> terms;  // porn terms then art terms
    std::vector<TermClass> classes;
    std::vector<std::vector<double>> projection;  // PCA coordinates per term
    std::vector<double> explained_variance;
    std::vector<std::size_t> clusters;
    double purity = 0.0;  // best-matching cluster/class agreement
};

/// Needs at least 3 terms in total; projection dims = min(2, terms - 1).
TermSeparation analyze_term_separation(const TermSet& terms, const EmbeddingMap& text_embeddings, std::uint64_t seed);

}  // namespace artmod::zeroshot
