#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "signdet/cli/instance.hpp"
#include "signdet/driver.hpp"

namespace signdet::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kMismatch = 2 };

enum class Format { Text, Json };

struct SignsFlags {
  bool oracle = false;
  bool naive = false;
  bool count_ops = false;
  bool optimized_step22 = false;
  Format format = Format::Text;
};

/// Rows as `<s1> ... <ss> : <count>` after a leading `m=<m>` line.
std::string format_text(const SignDetResult& result, bool with_ops);
std::string format_json(const SignDetResult& result, bool with_ops);

/// Runs the incremental method and writes the report to `out`; diagnostics
/// go to `err`. Returns an ExitCode.
int cmd_signs(const Instance& inst, const SignsFlags& flags, std::ostream& out, std::ostream& err);

struct BenchFlags {
  std::uint64_t seed = 1;
  int degree = 8;
  std::size_t num_polys = 3;
  std::size_t trials = 10;
  long coeff_bound = 10;
  bool optimized_step22 = false;
};

inline constexpr const char* kBenchCsvHeader = "seed,trial,step,r,ops,budget,ratio";

/// ops/budget rounded half-up to four decimals, e.g. "0.1250".
std::string format_ratio(std::uint64_t ops, std::uint64_t budget);

/// CSV with one row per pipeline step of every trial.
int cmd_bench(const BenchFlags& flags, std::ostream& out, std::ostream& err);

/// Embedded verification groups; one PASS/FAIL line each.
int cmd_selftest(std::ostream& out, std::uint64_t seed = 2024);

}  // namespace signdet::cli
