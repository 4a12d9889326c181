#include "changekit/number_format.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace changekit {

std::string format_shortest(double value) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

// glibc printf rounds the exact binary value under the current rounding mode
// (round-to-nearest-even by default).
std::string format_fixed(double value, int decimals) {
    std::array<char, 512> buf{};
    const int n = std::snprintf(buf.data(), buf.size(), "%.*f", decimals, value);
    if (n < 0) return {};
    if (static_cast<std::size_t>(n) < buf.size()) return std::string(buf.data(), static_cast<std::size_t>(n));
    std::string big(static_cast<std::size_t>(n) + 1, '\0');
    std::snprintf(big.data(), big.size(), "%.*f", decimals, value);
    big.resize(static_cast<std::size_t>(n));
    return big;
}

std::string format_significant(double value, int digits) {
    std::array<char, 64> buf{};
    const int n = std::snprintf(buf.data(), buf.size(), "%.*g", digits, value);
    return n < 0 ? std::string{} : std::string(buf.data(), static_cast<std::size_t>(n));
}

}  // namespace changekit
