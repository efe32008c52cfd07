#pragma once

// Subcommand implementations. Each writes its report to `out` and returns the
// process exit code: 0 success, 1 a predicate answered "no", 2 an error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cideal_cli/document.hpp"

namespace cideal::cli {

enum class Format { Text, Structured };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

struct Options {
  std::string input;
  std::vector<std::string> ideals;  ///< --ideal, repeatable
  std::optional<std::int64_t> power;
  std::optional<std::int64_t> iterate;
  std::optional<std::string> gens;
  Format format = Format::Text;
};

/// Runs `command` against `opts`; errors are reported on `err`.
int run_command(const std::string& command, const Options& opts, std::ostream& out, std::ostream& err);

/// Names accepted by run_command.
const std::vector<std::string>& command_names();

/// "(2,1,1)" in point order.
std::string format_basis(const PointBasis& b);
/// "m * p_A2^2"; "1" for the unit ideal.
std::string format_factorization(const IdealClass& i);

}  // namespace cideal::cli
