#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace artmod::dataset {

/// Split one CSV line (RFC 4180 quoting, no embedded newlines).
/// A trailing '\r' is ignored. Throws artmod::Error on an unterminated quote.
std::vector<std::string> split_csv_line(std::string_view line);

/// Quote a field only when it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

/// Shortest decimal text that reads back as the same double.
std::string csv_number(double value);

}  // namespace artmod::dataset
