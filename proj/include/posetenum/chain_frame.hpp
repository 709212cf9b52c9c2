#ifndef POSETENUM_CHAIN_FRAME_HPP
#define POSETENUM_CHAIN_FRAME_HPP

// Greedy antichain decomposition, longest chain, the s/l levels of every
// element against that chain and the sorted buckets derived from them.
//
// Inside a frame elements are addressed by their position in the sorted
// element list of the subposet ("local index"). Positions are monotone in
// ids, so sorted local lists are sorted id lists as well.

#include <cstdint>
#include <vector>

#include "posetenum/meter.hpp"
#include "posetenum/poset.hpp"

namespace posetenum {

using LocalList = std::vector<int>;

struct AntichainDecomposition {
  /// levels[t] is A_{t+1} as local indices, in insertion order.
  std::vector<LocalList> levels;
  /// level[a] is the 1-based level of local index a.
  std::vector<int> level;
  /// pred[a] is the local index of the element that placed a one level
  /// higher, or -1 for elements of A_1.
  std::vector<int> pred;
};

/// Inserts elements in id order. Each element scans the levels top-down and
/// each level in insertion order; the first smaller element found decides.
/// Falls back to A_1 only after every level was scanned.
AntichainDecomposition decompose(const SubposetView& p, Meter* meter = nullptr);

/// Follows pred from the smallest element of the top level. Local indices,
/// bottom first. Empty for an empty decomposition.
LocalList longest_chain(const AntichainDecomposition& d, Meter* meter = nullptr);

struct Levels {
  /// Per local index: s_u = max{i : c_i < u} (0 if none), l_u = min{i : u < c_i}
  /// (k+1 if none). Chain elements c_i get s = l = i.
  std::vector<int> s;
  std::vector<int> l;
};

/// Scans c_{i-1}, ..., c_1 for s_u and c_{i+1}, ..., c_k for l_u where A_i
/// holds u.
Levels compute_levels(const SubposetView& p, const LocalList& chain,
                      const AntichainDecomposition& d, Meter* meter = nullptr);

class ChainFrame {
 public:
  ChainFrame() = default;

  std::vector<Element> sub;  ///< element ids, strictly increasing
  LocalList chain;           ///< c_1..c_k
  std::vector<int> s;
  std::vector<int> l;
  std::vector<int> chain_pos;  ///< i for c_i, 0 off the chain
  /// S[i] for i in 0..k, sorted.
  std::vector<LocalList> S;
  /// L[i] for i in 1..k+1, sorted; L[0] stays empty.
  std::vector<LocalList> L;

  int k() const { return static_cast<int>(chain.size()); }
  int size() const { return static_cast<int>(sub.size()); }
  Element id(int local) const { return sub[local]; }
  bool on_chain(int local) const { return chain_pos[local] != 0; }

  /// Translates local indices to ids.
  std::vector<Element> ids(const LocalList& locals) const;
};

/// Decomposition, chain, levels and buckets of `p` in O(n + q) ticks.
ChainFrame build_frame(const SubposetView& p, Meter* meter = nullptr);

/// Rolling update for the ideal recursion. Requires `current` to hold
/// P_{i-1}; replaces it by P_i = (P_{i-1} \ L_i) + S_i, sorted.
void advance_subposet(const ChainFrame& f, int i, LocalList& current,
                      Meter* meter = nullptr);

/// Rolling update for the antichain recursion (P_i = elements incomparable
/// with c_i): P_1 = S_0 and P_i = (P_{i-1} \ L_i) + S_{i-1}.
void advance_antichain_subposet(const ChainFrame& f, int i, LocalList& current,
                                Meter* meter = nullptr);

/// P_0..P_k for the ideal recursion.
std::vector<LocalList> ideal_subposets(const ChainFrame& f, Meter* meter = nullptr);

/// Local indices of all off-chain elements, sorted (P_r).
LocalList off_chain(const ChainFrame& f, Meter* meter = nullptr);

// Sorted-list helpers, one tick per loop body.
LocalList merge_sorted(const LocalList& a, const LocalList& b, Meter* meter = nullptr);
LocalList difference_sorted(const LocalList& a, const LocalList& b,
                            Meter* meter = nullptr);

}  // namespace posetenum

#endif  // POSETENUM_CHAIN_FRAME_HPP
