#include "artmod/backend/verdict.hpp"

#include <string>

#include "artmod/error.hpp"

namespace artmod::backend {

Verdict binarize(double score, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw InvalidArgument("threshold must lie in (0, 1), got " + std::to_string(threshold));
    }
    if (!(score >= 0.0 && score <= 1.0)) {
        throw InvalidArgument("score must lie in [0, 1], got " + std::to_string(score));
    }
    return {score, score >= threshold ? Label::unsafe : Label::safe, threshold};
}

}  // namespace artmod::backend
