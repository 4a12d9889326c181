#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "changekit/indicator.hpp"

namespace changekit::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,
    kInputError = 1,      // parse, validation and domain errors, bad flags
    kNumericalError = 2,  // non-finite results, failed self-checks, failed verification
};

inline constexpr const char* kSeedEnvVar = "CHANGEKIT_SEED";

/// Runs one command. `args` excludes the program name, e.g.
/// {"rank", "data.csv", "--lambda", "0.5"}. Standard input is read from `in`
/// when the input path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// "x,y" -> PositivePair. Throws ValidationError naming `option`.
[[nodiscard]] PositivePair parse_pair(std::string_view text, std::string_view option);

/// --seed wins over the environment value, which wins over the default.
[[nodiscard]] std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char* env_value);

}  // namespace changekit::cli
