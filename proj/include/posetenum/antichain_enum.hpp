#ifndef POSETENUM_ANTICHAIN_ENUM_HPP
#define POSETENUM_ANTICHAIN_ENUM_HPP

#include "posetenum/cursor.hpp"
#include "posetenum/meter.hpp"
#include "posetenum/poset.hpp"

namespace posetenum {

/// Visits every antichain once: for each chain element c_i the antichains
/// through c_i (recursing on the elements incomparable with c_i), then the
/// antichains avoiding the chain (recursing on P minus the chain).
void enumerate_antichains_basic(const Poset& p, const Visitor& visit,
                                Meter* meter = nullptr, bool track_changes = false);

enum class Direction { Forward, Reverse };

/// Forward: starts at the 1-antichain {c_1}, ends at the empty antichain.
/// Reverse: the mirrored sequence. Consecutive antichains differ in at most
/// three elements; the visitor must call Cursor::take_delta() at every visit.
void enumerate_antichains_gray(const Poset& p, const Visitor& visit,
                               Direction direction = Direction::Forward,
                               Meter* meter = nullptr);

}  // namespace posetenum

#endif  // POSETENUM_ANTICHAIN_ENUM_HPP
