#ifndef POSETENUM_AUDIT_HPP
#define POSETENUM_AUDIT_HPP

// Recursion-tree ledger and the amortization inequalities checked on it.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posetenum/enumerate.hpp"
#include "posetenum/poset.hpp"

namespace posetenum {

/// Coefficients of Phi(P) = alpha + beta*n + gamma*q + delta*t, the reward
/// mu per visit and the ticks per coin.
struct PotentialConstants {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::int64_t delta = 0;
  std::int64_t mu = 0;
  std::int64_t tstar = 0;

  static PotentialConstants ideals();
  static PotentialConstants antichains();
  static PotentialConstants defaults(Kind kind);

  /// Throws std::invalid_argument unless all are positive and
  /// mu >= alpha + beta + 1.
  void validate() const;
};

/// Ticks per coin shipped as the default for both kinds and orders: the
/// smallest value passing the Pyramid check on the calibration corpus (the
/// Gray ideal walk needs 13, the basic recursions 9 and 10).
inline constexpr std::int64_t kDefaultTstar = 13;

std::int64_t potential(const PosetStats& s, const PotentialConstants& c);

/// How much of the recursion tree is recorded. Children beyond the limits
/// are skipped: their potential is still known, but their subtree is not run.
struct AuditLimits {
  int max_depth = -1;  ///< deepest recorded node, root = 0; negative = no limit
  std::int64_t max_nodes = 200000;
};

struct IterationRecord {
  int id = 0;
  int parent = -1;
  int depth = 0;
  std::vector<Element> sub;
  PosetStats stats;
  std::int64_t phi = 0;
  std::int64_t ticks = 0;   ///< T(X): ticks of this iteration without its children
  std::int64_t visits = 0;  ///< |X'|
  std::int64_t children_phi_sum = 0;
  std::vector<int> children;  ///< recorded children, in call order
  std::vector<std::vector<Element>> skipped;  ///< children that were not run
  std::int64_t subtree_ticks = 0;
  std::int64_t subtree_visits = 0;
  bool complete = true;  ///< no skipped child anywhere below
};

struct Ledger {
  Kind kind = Kind::Ideals;
  Order order = Order::Basic;
  PotentialConstants constants;
  std::vector<IterationRecord> nodes;     ///< pre-order; nodes[0] is the root
  std::vector<std::int64_t> visit_ticks;  ///< tick count at each visit
  std::int64_t total_ticks = 0;
  std::int64_t max_path_ticks = 0;  ///< max over root-to-node paths of summed T
  bool complete() const { return !nodes.empty() && nodes[0].complete; }
};

/// Runs an instrumented enumeration and computes n, q, t and Phi for every
/// recorded node and every skipped child.
Ledger record_ledger(const Poset& p, Kind kind, Order order, const PotentialConstants& c,
                     const AuditLimits& limits = {});

/// node_id,parent_id,depth,n,q,t,phi,ticks,visits with a header line.
std::string ledger_csv(const Ledger& ledger);

struct Violation {
  int node = 0;
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::int64_t checked = 0;
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

/// Sum Phi(children) + mu*visits - Phi(X), the coins left to pay for T(X).
std::int64_t pyramid_slack(const Ledger& ledger, const IterationRecord& r);

/// T* * slack >= T(X) at every recorded node.
CheckReport check_pyramid(const Ledger& ledger);

/// Inner nodes: Sum Phi(children) - Phi(X) >= n + q. Antichain runs also
/// check mu - Phi(X) >= 1 on single-element nodes.
CheckReport check_inner_bound(const Ledger& ledger);

/// Smallest T* for which check_pyramid passes; 0 if no node needs coins.
/// Throws std::domain_error if some node has positive ticks and no slack.
std::int64_t required_tstar(const Ledger& ledger);

/// Subtree ticks <= T* (mu * subtree visits - Phi(X)) on every complete node.
CheckReport check_subtree(const Ledger& ledger);

/// For visits i < j: ticks between them <= 2*D + (j-i)*mu*T* - 1 and ticks
/// before visit j <= D + j*mu*T* - 1, with D = max_path_ticks. Needs a
/// complete ledger; an incomplete one yields a report with checked = 0.
CheckReport check_gap(const Ledger& ledger);

/// q''' <= 96 (Sum t''_i + Sum n_i) at every recorded nonempty node, with
/// the partitions recomputed by brute force from the node's chain frame.
CheckReport check_pair_bound(const Ledger& ledger, const Poset& p);

struct PairPartition {
  std::int64_t q1 = 0;  ///< pairs meeting the chain
  std::int64_t q2 = 0;  ///< off-chain pairs sharing an incomparable chain element
  std::int64_t q3 = 0;  ///< remaining pairs
  std::int64_t t2_weighted = 0;  ///< Sum over children of t''_i
  std::int64_t n_weighted = 0;   ///< Sum over children of n_i
};

PairPartition pair_partition(const Poset& p, std::span<const Element> sub, Kind kind);

/// Which per-iteration time the push-out check uses: the measured ticks, or
/// the T* (n + q) ticks the potential analysis charges an iteration.
enum class TimeModel { Measured, Charged };

struct PushoutParams {
  double alpha = 2.0;
  double beta = 0.0;
  TimeModel model = TimeModel::Measured;
};

struct PushoutReport {
  CheckReport condition;    ///< nodes with Sum T(Y) < alpha T(X) - beta (|C|+1) T*
  CheckReport cross_check;  ///< passing nodes that fail the induced Pyramid form
  std::optional<double> root_slack;
  /// (Sum of children T - largest child T) / T(root); nullopt without children.
  std::optional<double> root_ratio;
};

/// Checks every recorded node whose children were all recorded.
PushoutReport check_pushout(const Ledger& ledger, const PushoutParams& params);

/// 48 Sum j (C(a_j,3)+1) + 48 Sum j (C(b_j,3)+1) >= Sum a * Sum b, j 1-based.
/// Throws std::invalid_argument on entries below 1.
bool check_aux(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

}  // namespace posetenum

#endif  // POSETENUM_AUDIT_HPP
