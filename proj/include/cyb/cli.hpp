#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cyb {

enum class Command { kInvariants, kEnumerate, kKaehler, kClassify, kDiscriminant };
enum class OutputFormat { kJson, kCsv, kText };

/// Exit statuses of the command-line front end.
enum ExitStatus : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidDegrees = 2,
  kExitOracleMismatch = 3,
  kExitInadmissible = 4,
};

struct RunConfig {
  Command command = Command::kInvariants;
  int base_dim = 3;
  std::vector<std::int64_t> degrees;
  std::int64_t max_degree = 4;
  OutputFormat format = OutputFormat::kJson;
  std::uint64_t seed = 0;
  std::int64_t bound = 1;
  std::string out_path;  // empty: write to the given stream
  unsigned threads = 0;  // 0: CYB_THREADS or hardware concurrency
};

/// Runs one command. The report goes to `out` (or out_path); failures are written to `err` as
/// a one-line JSON object {"error": <reason>, "message": <text>} and mapped onto ExitStatus.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Normalised split specs enumerated by `enumerate`: over P^3 (0, b) with b <= max_degree and
/// b <= 4; over P^1 (0, a1, a2, a3) with a1 <= a2 <= a3 <= max_degree. Sorted by degrees.
std::vector<std::vector<std::int64_t>> enumeration_family(int base_dim, std::int64_t max_degree);

}  // namespace cyb
