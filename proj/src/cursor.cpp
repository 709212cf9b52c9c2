#include "posetenum/cursor.hpp"

#include <algorithm>
#include <sstream>

namespace posetenum {

Cursor::Cursor(int universe, Meter* meter) : meter_(meter), pos_(universe, -1) {
  members_.reserve(universe);
}

void Cursor::add(Element u) {
  if (meter_) meter_->tick();
  if (pos_[u] >= 0) throw std::logic_error("cursor already holds element");
  pos_[u] = static_cast<int>(members_.size());
  members_.push_back(u);
  if (tracking_) touch(u);
}

void Cursor::remove(Element u) {
  if (meter_) meter_->tick();
  const int at = pos_[u];
  if (at < 0) throw std::logic_error("cursor does not hold element");
  const Element last = members_.back();
  members_[at] = last;
  pos_[last] = at;
  members_.pop_back();
  pos_[u] = -1;
  if (tracking_) touch(u);
}

std::vector<Element> Cursor::sorted() const {
  std::vector<Element> out(members_.begin(), members_.end());
  std::sort(out.begin(), out.end());
  return out;
}

void Cursor::set_tracking(bool on) {
  tracking_ = on;
  touched_.clear();
  was_.assign(pos_.size(), 0);
  touched_flag_.assign(pos_.size(), 0);
  for (Element u : members_) was_[u] = 1;
}

void Cursor::touch(Element u) {
  if (touched_flag_[u]) return;
  touched_flag_[u] = 1;
  touched_.push_back(u);
}

Change Cursor::take_change() {
  Change c;
  for (Element u : touched_) {
    touched_flag_[u] = 0;
    const std::uint8_t now = contains(u) ? 1 : 0;
    if (now == was_[u]) continue;
    (now ? c.added : c.removed).push_back(u);
    was_[u] = now;
  }
  touched_.clear();
  std::sort(c.added.begin(), c.added.end());
  std::sort(c.removed.begin(), c.removed.end());
  return c;
}

Delta Cursor::take_delta() {
  const Change c = take_change();
  const int size = static_cast<int>(c.added.size() + c.removed.size());
  if (size > 3) throw GrayBoundError(size);
  Delta d;
  d.added = static_cast<std::uint8_t>(c.added.size());
  d.removed = static_cast<std::uint8_t>(c.removed.size());
  std::copy(c.added.begin(), c.added.end(), d.items.begin());
  std::copy(c.removed.begin(), c.removed.end(), d.items.begin() + d.added);
  return d;
}

void apply_delta(std::vector<Element>& set, const Delta& d) {
  for (Element u : d.minus()) {
    const auto it = std::lower_bound(set.begin(), set.end(), u);
    if (it == set.end() || *it != u) throw std::logic_error("delta removes a missing element");
    set.erase(it);
  }
  for (Element u : d.plus()) {
    const auto it = std::lower_bound(set.begin(), set.end(), u);
    if (it != set.end() && *it == u) throw std::logic_error("delta adds a present element");
    set.insert(it, u);
  }
}

void apply_change(std::vector<Element>& set, const Change& c) {
  std::vector<Element> out;
  std::set_difference(set.begin(), set.end(), c.removed.begin(), c.removed.end(),
                      std::back_inserter(out));
  std::vector<Element> merged;
  std::merge(out.begin(), out.end(), c.added.begin(), c.added.end(),
             std::back_inserter(merged));
  set = std::move(merged);
}

std::string format_set(const Poset& p, std::span<const Element> ids) {
  if (ids.empty()) return ".";
  std::vector<int> labels;
  labels.reserve(ids.size());
  for (Element u : ids) labels.push_back(p.label(u));
  std::sort(labels.begin(), labels.end());
  std::ostringstream out;
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << labels[i];
  return out.str();
}

std::string format_delta(const Poset& p, std::span<const Element> added,
                         std::span<const Element> removed) {
  auto sorted_labels = [&](std::span<const Element> ids) {
    std::vector<int> v;
    for (Element u : ids) v.push_back(p.label(u));
    std::sort(v.begin(), v.end());
    return v;
  };
  std::ostringstream out;
  bool first = true;
  for (int x : sorted_labels(added)) {
    out << (first ? "" : " ") << '+' << x;
    first = false;
  }
  for (int x : sorted_labels(removed)) {
    out << (first ? "" : " ") << '-' << x;
    first = false;
  }
  return out.str();
}

}  // namespace posetenum
