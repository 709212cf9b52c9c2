#include "posetenum/antichain_enum.hpp"

#include "posetenum/chain_frame.hpp"

namespace posetenum {

namespace {

class Antichains {
 public:
  Antichains(const Poset& p, const Visitor& visit, Meter& m, bool track)
      : p_(p), visit_(visit), m_(m), cur_(p.size(), &m) {
    cur_.set_tracking(track);
  }

  void basic(const std::vector<Element>& sub) {
    if (!open(sub)) return;
    const ChainFrame f = build_frame(SubposetView{&p_, sub}, &m_);
    LocalList rolling;
    for (int i = 1; i <= f.k(); ++i) {
      m_.tick();
      advance_antichain_subposet(f, i, rolling, &m_);
      cur_.add(f.id(f.chain[i - 1]));
      descend(f, rolling, [&](const auto& ids) { basic(ids); });
      cur_.remove(f.id(f.chain[i - 1]));
    }
    descend(f, off_chain(f, &m_), [&](const auto& ids) { basic(ids); });
    m_.leave();
  }

  // Every call starts and ends with nothing of `sub` in the cursor.
  void gray(const std::vector<Element>& sub, Direction dir) {
    if (!open(sub)) return;
    const ChainFrame f = build_frame(SubposetView{&p_, sub}, &m_);
    const int k = f.k();
    std::vector<LocalList> P(k + 1);
    for (int i = 1; i <= k; ++i) {
      P[i] = P[i - 1];
      m_.tick(static_cast<std::int64_t>(P[i].size()));
      advance_antichain_subposet(f, i, P[i], &m_);
    }
    const LocalList rest = off_chain(f, &m_);
    auto through = [&](int i, Direction child) {
      m_.tick();
      cur_.add(f.id(f.chain[i - 1]));
      descend(f, P[i], [&](const auto& ids) { gray(ids, child); });
      cur_.remove(f.id(f.chain[i - 1]));
    };
    if (dir == Direction::Forward) {
      for (int i = 1; i <= k; ++i) through(i, Direction::Reverse);
      descend(f, rest, [&](const auto& ids) { gray(ids, Direction::Forward); });
    } else {
      descend(f, rest, [&](const auto& ids) { gray(ids, Direction::Reverse); });
      for (int i = k; i >= 1; --i) through(i, Direction::Forward);
    }
    m_.leave();
  }

 private:
  // Node entry; handles the empty subposet and returns false for it.
  bool open(const std::vector<Element>& sub) {
    m_.enter(sub);
    m_.tick();
    if (!sub.empty()) return true;
    m_.tick();
    visit_(cur_);
    m_.visited();
    m_.leave();
    return false;
  }

  template <typename Recurse>
  void descend(const ChainFrame& f, const LocalList& child, Recurse&& recurse) {
    m_.tick(static_cast<std::int64_t>(child.size()));
    const auto ids = f.ids(child);
    if (!m_.may_descend(ids)) {
      m_.skip(ids);
      return;
    }
    recurse(ids);
  }

  const Poset& p_;
  const Visitor& visit_;
  Meter& m_;
  Cursor cur_;
};

}  // namespace

void enumerate_antichains_basic(const Poset& p, const Visitor& visit, Meter* meter,
                                bool track_changes) {
  Meter local;
  Antichains(p, visit, meter ? *meter : local, track_changes).basic(all_elements(p));
}

void enumerate_antichains_gray(const Poset& p, const Visitor& visit, Direction direction,
                               Meter* meter) {
  Meter local;
  Antichains(p, visit, meter ? *meter : local, true).gray(all_elements(p), direction);
}

}  // namespace posetenum
