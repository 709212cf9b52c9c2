#ifndef POSETENUM_RUN_HPP
#define POSETENUM_RUN_HPP

// Command implementations behind the CLI, kept in the library so tests can
// drive them with in-memory streams.

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "posetenum/audit.hpp"
#include "posetenum/enumerate.hpp"

namespace posetenum {

/// Bad file, bad generator spec or inconsistent flags; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputMode { Sets, Deltas, Count };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitViolation = 3;

struct RunConfig {
  std::string input_path;  ///< exclusive with `generator`
  std::string generator;
  std::uint64_t seed = 1;
  Kind kind = Kind::Ideals;
  Order order = Order::Basic;
  bool loopless = false;
  bool audit = false;
  OutputMode output = OutputMode::Sets;
  std::optional<std::int64_t> tstar;
  std::optional<std::int64_t> mu;
  std::string out_path;

  // audit
  std::vector<PushoutParams> pushout;
  AuditLimits limits;

  // bench
  std::vector<std::string> families = {"chain", "antichain", "random"};
  std::vector<int> sizes = {50, 100, 200, 400};
  std::int64_t output_cap = std::int64_t{1} << 17;

  /// Throws InputError on inconsistent settings.
  void validate() const;
  PotentialConstants constants() const;
};

/// Loads the poset named by `input_path` or `generator`; InputError on failure.
Poset load_input(const RunConfig& cfg);

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses `alpha=A beta=B`.
PushoutParams parse_pushout(const std::vector<std::string>& words);

struct AuditSummary {
  std::vector<CheckReport> checks;  ///< pyramid, inner-bound, pair-bound, subtree, gap
  std::vector<PushoutReport> pushout;
  std::int64_t root_slack = 0;
  std::optional<std::int64_t> required_tstar;
  bool passed() const;
};

AuditSummary run_audit(const Poset& p, const Ledger& ledger,
                       const std::vector<PushoutParams>& pushout);

struct BenchRow {
  std::string family;
  std::int64_t n = 0;
  std::int64_t q = 0;
  std::int64_t outputs = 0;
  std::int64_t total_ticks = 0;
  /// Ticks from the first to the last output over outputs - 1; the time to
  /// the first output is reported separately.
  double ticks_per_output = 0;
  std::int64_t max_gap_ticks = 0;  ///< between consecutive outputs, first excluded
  std::int64_t ticks_to_first = 0;
};

/// Generator spec used by the sweep for family at size n.
std::string bench_spec(const std::string& family, int n);

/// Runs one enumeration, stopping after `output_cap` outputs.
BenchRow bench_one(const Poset& p, Kind kind, Order order, bool loopless,
                   std::int64_t output_cap, const PotentialConstants& c);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& r);

}  // namespace posetenum

#endif  // POSETENUM_RUN_HPP
