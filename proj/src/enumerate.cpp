#include "posetenum/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace posetenum {

Kind parse_kind(std::string_view s) {
  if (s == "ideals") return Kind::Ideals;
  if (s == "antichains") return Kind::Antichains;
  throw std::invalid_argument("unknown kind '" + std::string(s) + "'");
}

Order parse_order(std::string_view s) {
  if (s == "basic") return Order::Basic;
  if (s == "gray") return Order::Gray;
  throw std::invalid_argument("unknown order '" + std::string(s) + "'");
}

std::string_view to_string(Kind k) { return k == Kind::Ideals ? "ideals" : "antichains"; }
std::string_view to_string(Order o) { return o == Order::Basic ? "basic" : "gray"; }

void enumerate(const Poset& p, Kind kind, Order order, const Visitor& visit, Meter* meter,
               bool track_changes) {
  if (kind == Kind::Ideals) {
    if (order == Order::Basic) enumerate_ideals_basic(p, visit, meter, track_changes);
    else enumerate_ideals_gray(p, visit, meter);
  } else {
    if (order == Order::Basic) enumerate_antichains_basic(p, visit, meter, track_changes);
    else enumerate_antichains_gray(p, visit, Direction::Forward, meter);
  }
}

std::vector<ElementSet> collect_sets(const Poset& p, Kind kind, Order order) {
  std::vector<ElementSet> out;
  if (order == Order::Basic) {
    enumerate(p, kind, order, [&](Cursor& c) { out.push_back(c.sorted()); });
    return out;
  }
  ElementSet current;
  enumerate(p, kind, order, [&](Cursor& c) {
    apply_delta(current, c.take_delta());
    out.push_back(current);
  });
  return out;
}

std::vector<Delta> collect_deltas(const Poset& p, Kind kind) {
  std::vector<Delta> out;
  enumerate(p, kind, Order::Gray, [&](Cursor& c) { out.push_back(c.take_delta()); });
  return out;
}

}  // namespace posetenum
