#ifndef POSETENUM_POSET_HPP
#define POSETENUM_POSET_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace posetenum {

using Element = int;

/// Raised for malformed poset files and generator specs.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when declared relations do not form a strict partial order.
class OrderError : public std::runtime_error {
 public:
  OrderError() : std::runtime_error("not a partial order") {}
};

/// Immutable strict order on elements 0..n-1.
///
/// Internal ids are always topologically labeled (u < v whenever u precedes
/// v). `label(u)` recovers the id the element had in the input.
class Poset {
 public:
  Poset() = default;

  /// Takes a dense strict-order table (row-major, less[u*n+v] <=> u < v).
  /// The table must already be transitively closed, irreflexive and
  /// topologically labeled; throws OrderError otherwise.
  Poset(int n, std::vector<std::uint8_t> less, std::vector<int> labels);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }

  bool less(Element u, Element v) const {
    return less_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  bool comparable(Element u, Element v) const {
    return less(u, v) || less(v, u);
  }
  int label(Element u) const { return labels_[u]; }
  const std::vector<int>& labels() const { return labels_; }

  /// Triple-loop check of irreflexivity, antisymmetry and transitivity.
  /// Test and audit paths only; O(n^3).
  bool satisfies_order_axioms() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> less_;
  std::vector<int> labels_;
};

/// n, incomparable pairs q and 3-antichains t of a (sub)poset.
struct PosetStats {
  std::int64_t n = 0;
  std::int64_t q = 0;
  std::int64_t t = 0;
  friend bool operator==(const PosetStats&, const PosetStats&) = default;
};

/// A sorted list of element ids of a root poset. Restriction keeps the
/// topological labeling valid, so every subposet shares the root's table.
struct SubposetView {
  const Poset* poset = nullptr;
  std::span<const Element> elements;

  int size() const { return static_cast<int>(elements.size()); }
  bool empty() const { return elements.empty(); }
};

inline SubposetView whole(const Poset& p, const std::vector<Element>& ids) {
  return SubposetView{&p, ids};
}

/// Ids 0..n-1, the element list of a whole poset.
std::vector<Element> all_elements(const Poset& p);

// -- construction ---------------------------------------------------------

/// Builds a poset from `n` and a list of u<v relations, taking the transitive
/// closure and relabeling topologically. Relation endpoints are input labels.
Poset make_poset(int n, std::span<const std::pair<int, int>> relations);

/// Parses the line-based `poset <n>` / `rel <u> <v>` format.
Poset load_poset(std::string_view text);
Poset load_poset_file(const std::string& path);

/// Writes the transitive reduction using the original labels.
std::string write_poset(const Poset& p);

/// Relabels so that u < v implies id(u) < id(v). Among incomparable
/// candidates the smallest current id goes first, so an already sorted
/// poset is returned unchanged.
Poset topological_relabel(const Poset& p);

// -- generators -----------------------------------------------------------

Poset chain(int n);
Poset antichain(int n);
/// V-shaped fixture: 0 < 2 and 1 < 2.
Poset v_poset();
/// Transitive closure of a random DAG on ids 0..n-1 where each pair i<j is
/// an edge with probability `density`. Deterministic in `seed`.
Poset random_poset(int n, double density, std::uint64_t seed);
/// Layered family on which the child-time inequality of the push-out method
/// fails: 2*ell antichains around a distinguished chain.
Poset uno(int ell);
/// Element count of uno(ell) without building it.
int uno_size(int ell);

/// Parses generator specs: `chain:N`, `antichain:N`, `v`, `uno:L`,
/// `random:N:DENSITY[:SEED]`.
Poset generate(std::string_view spec, std::uint64_t default_seed = 1);

// -- statistics -----------------------------------------------------------

/// Brute-force n, q, t of the subposet induced by `elements`.
PosetStats compute_stats(const Poset& p, std::span<const Element> elements);
PosetStats compute_stats(const Poset& p);

}  // namespace posetenum

#endif  // POSETENUM_POSET_HPP
