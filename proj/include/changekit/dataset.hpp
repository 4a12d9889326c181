#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "changekit/indicator.hpp"

namespace changekit {

/// Labeled observations in input order. Labels are unique and non-empty;
/// there is at least one observation.
struct Dataset {
    std::vector<LabeledObservation> observations;
    std::string source;
};

/// Parses CSV with header `label,past,present` (case-insensitive, LF or
/// CRLF, optional UTF-8 BOM, RFC 4180 quoting within a line). The report
/// columns `abs,rel,indicator,rank` may follow and are ignored, so ranked
/// output can be read back.
///
/// Throws ParseError for a missing or unknown header, a malformed row or an
/// empty body; ValidationError for empty, duplicate or non-positive values.
[[nodiscard]] Dataset parse_csv(std::string_view text, std::string source = "<stdin>");
[[nodiscard]] Dataset parse_csv(std::istream& in, std::string source = "<stdin>");

/// Splits one CSV line into fields. `line_number` is used in error messages.
[[nodiscard]] std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_number);

/// Quotes a field when it contains a comma, quote or line break.
[[nodiscard]] std::string quote_csv_field(std::string_view field);

}  // namespace changekit
