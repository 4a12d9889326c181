#pragma once

#include <string>

namespace changekit {

/// Shortest decimal text that parses back to the same double.
[[nodiscard]] std::string format_shortest(double value);

/// Fixed notation with `decimals` digits after the point. Exact decimal ties
/// round half to even.
[[nodiscard]] std::string format_fixed(double value, int decimals);

/// printf-style %.Ng, e.g. format_significant(0.2, 4) == "0.2".
[[nodiscard]] std::string format_significant(double value, int digits);

}  // namespace changekit
