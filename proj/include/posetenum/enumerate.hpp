#ifndef POSETENUM_ENUMERATE_HPP
#define POSETENUM_ENUMERATE_HPP

// Uniform entry point over the four enumerators.

#include <string_view>
#include <vector>

#include "posetenum/antichain_enum.hpp"
#include "posetenum/cursor.hpp"
#include "posetenum/ideal_enum.hpp"
#include "posetenum/oracle.hpp"

namespace posetenum {

enum class Kind { Ideals, Antichains };
enum class Order { Basic, Gray };

Kind parse_kind(std::string_view s);
Order parse_order(std::string_view s);
std::string_view to_string(Kind k);
std::string_view to_string(Order o);

/// Runs the selected enumerator. Gray mode always tracks changes; basic mode
/// only when `track_changes` is set.
void enumerate(const Poset& p, Kind kind, Order order, const Visitor& visit,
               Meter* meter = nullptr, bool track_changes = false);

/// Every visited set in visiting order. Gray runs are rebuilt by replaying
/// the deltas, so this also checks that the delta stream round-trips.
std::vector<ElementSet> collect_sets(const Poset& p, Kind kind, Order order);

/// Only the delta stream of a Gray run (first entry: change from the empty set).
std::vector<Delta> collect_deltas(const Poset& p, Kind kind);

}  // namespace posetenum

#endif  // POSETENUM_ENUMERATE_HPP
