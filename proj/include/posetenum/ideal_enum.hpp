#ifndef POSETENUM_IDEAL_ENUM_HPP
#define POSETENUM_IDEAL_ENUM_HPP

#include <optional>
#include <vector>

#include "posetenum/cursor.hpp"
#include "posetenum/meter.hpp"
#include "posetenum/poset.hpp"

namespace posetenum {

/// Visits every ideal once. The recursion splits the ideals by the highest
/// chain element they contain: the ideals with top chain element c_i are
/// D_i plus an ideal of P_i = {u : u not <= c_i, u not >= c_{i+1}}.
/// With `track_changes` the visitor may call Cursor::take_change().
void enumerate_ideals_basic(const Poset& p, const Visitor& visit,
                            Meter* meter = nullptr, bool track_changes = false);

/// Visits every ideal once, from the empty set to the full poset, with
/// consecutive ideals differing in at most three elements. The visitor must
/// call Cursor::take_delta() at every visit (the first call returns the
/// change from the empty set).
void enumerate_ideals_gray(const Poset& p, const Visitor& visit,
                           Meter* meter = nullptr);

struct TopSplit {
  std::vector<Element> lower;  ///< {u : u not >= y}
  std::vector<Element> upper;  ///< {u : u not <= y}
  std::vector<Element> down;   ///< {u : u <= y}
};

/// Splits a subposet at y so that its ideals are the ideals of `lower`
/// together with `down` plus each ideal of `upper`.
TopSplit split_for_top(const SubposetView& p, Element y, Meter* meter = nullptr);

enum class ChainEnd { Min, Max };

/// Bottom or top element of the longest chain the recursion computes for
/// `p`; nullopt for an empty subposet.
std::optional<Element> pick_perturbation(const SubposetView& p, ChainEnd end);

}  // namespace posetenum

#endif  // POSETENUM_IDEAL_ENUM_HPP
