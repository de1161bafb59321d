#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "leastprime/primes.hpp"
#include "leastprime/report.hpp"
#include "leastprime/symgroup.hpp"

namespace leastprime::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitInvariant = 4;

/// Parses argv (without the program name), runs one subcommand and writes
/// the report to `out`, diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Accepts comma-separated parts ("2,2,1", summing to n), cycle notation
/// ("(12)(345)", fixed points implicit) or "e". Throws std::invalid_argument.
CycleType parse_class_spec(const std::string& text, int n);

/// Every row for `quantity` (little-n, big-N, big-N-odd-union,
/// quadratic-little-n, pollack, erdos) in published order, restricted to
/// degree n when given, each diffed against its pinned reference value.
TableReport constants_table(const std::string& quantity, std::optional<int> n, double eps, unsigned threads,
                            const PrimeTable& primes = PrimeTable::standard());

}  // namespace leastprime::cli
