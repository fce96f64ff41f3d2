#pragma once

#include <string>

#include <json.hpp>

#include "artmod/zeroshot/classifier.hpp"

namespace artmod::zeroshot {

/// Report layout:
/// {
///   "terms": {"porn_terms": [...], "art_terms": [...]},
///   "images": N,
///   "combinations": [{"k", "porn_terms", "art_terms", "correct", "total", "accuracy"}, ...],
///   "per_k": [{"k", "combinations", "mean_accuracy", "std_accuracy"}, ...],
///   "predictions": [{"id", "label"}, ...]          // full combination
/// }
nlohmann::json to_json(const ZeroShotReport& report, const TermSet& terms);
nlohmann::json to_json(const TermSeparation& separation);

/// Plot data: `k,combinations,mean_accuracy,std_accuracy`.
std::string per_k_csv(const ZeroShotReport& report);

/// Full-combination predictions as a verdict CSV (`id,score,label,threshold`),
/// with score 1/0 and threshold 0.5, so they can be audited like any scorer.
std::string predictions_csv(const ZeroShotReport& report);

}  // namespace artmod::zeroshot
