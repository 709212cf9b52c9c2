#ifndef POSETENUM_KERNELS_HPP
#define POSETENUM_KERNELS_HPP

// Data-parallel brute-force kernels used by the auditor and the oracle.
// Each OpenMP kernel has a serial twin with the same contract; tests compare
// them and bench/ times them against each other.

#include <cstdint>
#include <span>
#include <vector>

#include "posetenum/poset.hpp"

namespace posetenum::kernels {

/// Incomparable pairs and 3-antichains among `elements`.
PosetStats pair_triple_counts_serial(const Poset& p,
                                     std::span<const Element> elements);
PosetStats pair_triple_counts_parallel(const Poset& p,
                                       std::span<const Element> elements);

/// In-place transitive closure of a dense n x n 0/1 table.
void transitive_closure_serial(int n, std::vector<std::uint8_t>& rel);
void transitive_closure_parallel(int n, std::vector<std::uint8_t>& rel);

/// Bitmasks (bit u = element u) of all ideals / antichains, ascending.
/// Requires p.size() <= 26.
std::vector<std::uint32_t> ideal_masks_serial(const Poset& p);
std::vector<std::uint32_t> ideal_masks_parallel(const Poset& p);
std::vector<std::uint32_t> antichain_masks_serial(const Poset& p);
std::vector<std::uint32_t> antichain_masks_parallel(const Poset& p);

}  // namespace posetenum::kernels

#endif  // POSETENUM_KERNELS_HPP
