#ifndef POSETENUM_ORACLE_HPP
#define POSETENUM_ORACLE_HPP

// Brute-force ground truth for tests and acceptance runs.

#include <cstddef>
#include <optional>
#include <vector>

#include "posetenum/poset.hpp"

namespace posetenum {

/// A set of element ids, sorted ascending.
using ElementSet = std::vector<Element>;

/// Distinct sets in canonical order: by size, then lexicographically.
class SetFamily {
 public:
  SetFamily() = default;
  /// Canonicalizes; throws std::invalid_argument on a repeated set.
  explicit SetFamily(std::vector<ElementSet> sets);

  const std::vector<ElementSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(const ElementSet& s) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::vector<ElementSet> sets_;
};

inline constexpr int kOracleMaxElements = 22;

/// All downward-closed subsets. Refuses n > 22 with std::invalid_argument.
SetFamily brute_ideals(const Poset& p);
/// All pairwise incomparable subsets. Same size limit.
SetFamily brute_antichains(const Poset& p);

struct GrayViolation {
  std::size_t index;  ///< position of the later set of the offending pair
  std::size_t distance;
};

/// Symmetric difference of two sorted sets.
std::size_t symmetric_distance(const ElementSet& a, const ElementSet& b);

/// nullopt iff all consecutive sets differ in at most k elements.
std::optional<GrayViolation> verify_gray(const std::vector<ElementSet>& stream,
                                         std::size_t k);

/// True iff the stream lists every set of `family` exactly once.
bool verify_permutation(const std::vector<ElementSet>& stream, const SetFamily& family);

}  // namespace posetenum

#endif  // POSETENUM_ORACLE_HPP
