#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "artmod/backend/verdict.hpp"

namespace artmod::backend {

using VerdictList = std::vector<std::pair<std::string, Verdict>>;

/// CSV `id,score,label,threshold`; scores printed with 17 significant digits.
void write_verdicts(std::ostream& out, const VerdictList& verdicts);

/// Validates every row (label must agree with score >= threshold).
VerdictList read_verdicts(std::istream& in, const std::string& source_name);
VerdictList load_verdicts(const std::filesystem::path& path);

}  // namespace artmod::backend
