#ifndef POSETENUM_CURSOR_HPP
#define POSETENUM_CURSOR_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "posetenum/meter.hpp"
#include "posetenum/poset.hpp"

namespace posetenum {

/// Difference between two consecutive visits when at most three elements
/// change. Added elements come first, each side sorted by id.
struct Delta {
  std::array<Element, 3> items{};
  std::uint8_t added = 0;
  std::uint8_t removed = 0;

  int size() const { return added + removed; }
  std::span<const Element> plus() const { return {items.data(), added}; }
  std::span<const Element> minus() const {
    return {items.data() + added, removed};
  }
  friend bool operator==(const Delta& a, const Delta& b) {
    return a.added == b.added && a.removed == b.removed &&
           std::equal(a.items.begin(), a.items.begin() + a.size(), b.items.begin());
  }
};

/// Unbounded difference, used where no Gray bound applies.
struct Change {
  std::vector<Element> added;
  std::vector<Element> removed;
};

class GrayBoundError : public std::logic_error {
 public:
  explicit GrayBoundError(int size)
      : std::logic_error("consecutive visits differ in " + std::to_string(size) +
                         " elements") {}
};

/// The set under construction, with O(1) insertion, removal and membership.
/// Optionally records which elements were touched since the last visit so
/// the net change can be reported.
class Cursor {
 public:
  explicit Cursor(int universe, Meter* meter = nullptr);

  void add(Element u);
  void remove(Element u);
  bool contains(Element u) const { return pos_[u] >= 0; }
  int size() const { return static_cast<int>(members_.size()); }
  std::span<const Element> members() const { return members_; }
  std::vector<Element> sorted() const;

  void set_tracking(bool on);
  /// Net change since the previous take. Throws GrayBoundError above 3.
  Delta take_delta();
  Change take_change();

 private:
  void touch(Element u);

  Meter* meter_;
  std::vector<Element> members_;
  std::vector<int> pos_;
  bool tracking_ = false;
  std::vector<std::uint8_t> was_;
  std::vector<std::uint8_t> touched_flag_;
  std::vector<Element> touched_;
};

/// Called once per visited set.
using Visitor = std::function<void(Cursor&)>;

/// Applies a delta to a sorted set.
void apply_delta(std::vector<Element>& set, const Delta& d);
void apply_change(std::vector<Element>& set, const Change& c);

/// `1 4 7` in original labels, ascending; `.` for the empty set.
std::string format_set(const Poset& p, std::span<const Element> ids);
/// `+a +b -c` in original labels; additions first, each side ascending.
std::string format_delta(const Poset& p, std::span<const Element> added,
                         std::span<const Element> removed);

}  // namespace posetenum

#endif  // POSETENUM_CURSOR_HPP
