#pragma once

#include "artmod/label.hpp"

namespace artmod::backend {

struct Verdict {
    double score = 0.0;  // unsafeness in [0, 1]
    Label label = Label::safe;
    double threshold = 0.5;
};

/// unsafe iff score >= threshold. Throws InvalidArgument unless
/// score is in [0, 1] and threshold in (0, 1).
Verdict binarize(double score, double threshold);

}  // namespace artmod::backend
