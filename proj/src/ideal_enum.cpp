#include "posetenum/ideal_enum.hpp"

#include <stdexcept>

#include "posetenum/chain_frame.hpp"

namespace posetenum {

namespace {

std::vector<Element> to_ids(const ChainFrame& f, const LocalList& l, Meter& m) {
  m.tick(static_cast<std::int64_t>(l.size()));
  return f.ids(l);
}

LocalList intersect_sorted(const LocalList& a, const LocalList& b, Meter& m) {
  LocalList out;
  std::size_t j = 0;
  for (int x : a) {
    m.tick();
    while (j < b.size() && b[j] < x) ++j;
    if (j < b.size() && b[j] == x) out.push_back(x);
  }
  return out;
}

class BasicIdeals {
 public:
  BasicIdeals(const Poset& p, const Visitor& visit, Meter& m, bool track)
      : p_(p), visit_(visit), m_(m), cur_(p.size(), &m) {
    cur_.set_tracking(track);
  }

  void run() { recurse(all_elements(p_)); }

 private:
  void recurse(const std::vector<Element>& sub) {
    m_.enter(sub);
    m_.tick();
    if (sub.empty()) {
      emit();
      m_.leave();
      return;
    }
    const ChainFrame f = build_frame(SubposetView{&p_, sub}, &m_);
    LocalList rolling = f.S[0];
    m_.tick(static_cast<std::int64_t>(rolling.size()));
    descend(f, rolling);
    for (int i = 1; i <= f.k(); ++i) {
      m_.tick();
      advance_subposet(f, i, rolling, &m_);
      for (int a : f.L[i]) cur_.add(f.id(a));
      cur_.add(f.id(f.chain[i - 1]));
      descend(f, rolling);
    }
    for (int i = 1; i <= f.k(); ++i) {
      for (int a : f.L[i]) cur_.remove(f.id(a));
      cur_.remove(f.id(f.chain[i - 1]));
    }
    m_.leave();
  }

  void descend(const ChainFrame& f, const LocalList& child) {
    const auto ids = to_ids(f, child, m_);
    if (!m_.may_descend(ids)) {
      m_.skip(ids);
      return;
    }
    recurse(ids);
  }

  void emit() {
    m_.tick();
    visit_(cur_);
    m_.visited();
  }

  const Poset& p_;
  const Visitor& visit_;
  Meter& m_;
  Cursor cur_;
};

// First and last ideal of a recursive call, relative to its subposet.
// The *Min / *Max kinds name the bottom / top of the chain the callee
// computes, which only the callee knows.
enum class FormKind { Empty, Full, EmptyPlus, FullMinus, EmptyPlusMin, FullMinusMax };

template <typename List>
struct BasicForm {
  FormKind kind = FormKind::Empty;
  List list;
};
using Form = BasicForm<std::vector<Element>>;
using LForm = BasicForm<LocalList>;

std::size_t content_size(const LForm& x, std::size_t sz) {
  switch (x.kind) {
    case FormKind::Empty: return 0;
    case FormKind::Full: return sz;
    case FormKind::EmptyPlus: return x.list.size();
    case FormKind::FullMinus: return sz - x.list.size();
    default: throw std::logic_error("unresolved form");
  }
}

void normalize(LForm& x, std::size_t sz) {
  if (x.kind != FormKind::EmptyPlus && x.kind != FormKind::FullMinus) return;
  const std::size_t c = content_size(x, sz);
  if (c == 0) x = LForm{FormKind::Empty, {}};
  else if (c == sz) x = LForm{FormKind::Full, {}};
}

bool extreme(const LForm& x) {
  return x.kind == FormKind::Empty || x.kind == FormKind::Full;
}

class GrayIdeals {
 public:
  GrayIdeals(const Poset& p, const Visitor& visit, Meter& m)
      : p_(p), visit_(visit), m_(m), cur_(p.size(), &m),
        local_of_(p.size(), -1), mark_(p.size(), 0) {
    cur_.set_tracking(true);
  }

  void run() {
    walk(all_elements(p_), Form{FormKind::Empty, {}}, Form{FormKind::Full, {}});
  }

 private:
  enum Part { kWhole = 0, kLower = 1, kUpper = 2 };

  struct Block {
    int idx;
    int part;
    LForm first;
    LForm last;
  };

  struct Frame {
    ChainFrame f;
    std::vector<LocalList> P;
    LocalList lower, upper, down;
    const LocalList& sub_of(const Block& b) const {
      return b.part == kWhole ? P[b.idx] : (b.part == kLower ? lower : upper);
    }
  };

  void walk(const std::vector<Element>& sub, const Form& first_in, const Form& last_in) {
    m_.enter(sub);
    m_.tick();
    if (sub.empty()) {
      emit();
      m_.leave();
      return;
    }
    Frame fr;
    fr.f = build_frame(SubposetView{&p_, sub}, &m_);
    const ChainFrame& f = fr.f;
    const std::size_t n = sub.size();
    for (int a = 0; a < f.size(); ++a) local_of_[f.sub[a]] = a;
    m_.tick(static_cast<std::int64_t>(n));

    LForm first = localize(first_in);
    LForm last = localize(last_in);
    const int bottom = f.chain.front();
    const int top = f.chain.back();
    if (first.kind == FormKind::EmptyPlusMin) {
      cur_.add(f.id(bottom));
      first = LForm{FormKind::EmptyPlus, {bottom}};
    } else if (first.kind == FormKind::FullMinusMax) {
      cur_.remove(f.id(top));
      first = LForm{FormKind::FullMinus, {top}};
    }
    if (last.kind == FormKind::EmptyPlusMin) last = LForm{FormKind::EmptyPlus, {bottom}};
    else if (last.kind == FormKind::FullMinusMax) last = LForm{FormKind::FullMinus, {top}};
    normalize(first, n);
    normalize(last, n);

    fr.P = ideal_subposets(f, &m_);

    // A path is always planned from an arbitrary ideal towards an extreme
    // one; when the extreme end comes first the plan is run backwards.
    bool reversed = false;
    const LForm* start = &first;
    bool dual = false;
    if (extreme(last) && last.kind != first.kind) {
      dual = last.kind == FormKind::Empty;
    } else if (extreme(first)) {
      reversed = true;
      start = &last;
      dual = first.kind == FormKind::Empty;
    } else {
      throw std::logic_error("neither end of a walk is extreme");
    }
    const auto plan = make_plan(fr, *start, dual);
    execute(fr, plan, reversed);
    m_.leave();
  }

  LForm localize(const Form& x) {
    LForm out{x.kind, {}};
    out.list.reserve(x.list.size());
    for (Element u : x.list) out.list.push_back(local_of_[u]);
    m_.tick(static_cast<std::int64_t>(x.list.size()));
    return out;
  }

  std::vector<Block> make_plan(Frame& fr, const LForm& start, bool dual) {
    const ChainFrame& f = fr.f;
    const int k = f.k();

    int zeta = 0;
    LocalList rel;
    switch (start.kind) {
      case FormKind::Empty:
        break;
      case FormKind::Full:
        zeta = k;
        rel = fr.P[k];
        m_.tick(static_cast<std::int64_t>(rel.size()));
        break;
      case FormKind::EmptyPlus:
        for (int a : start.list) {
          m_.tick();
          zeta = std::max(zeta, f.chain_pos[a]);
        }
        for (int a : start.list) {
          m_.tick();
          if (f.chain_pos[a] == 0 && f.l[a] > zeta) rel.push_back(a);
        }
        break;
      case FormKind::FullMinus:
        for (int a : start.list) mark_[a] = 1;
        m_.tick(static_cast<std::int64_t>(start.list.size()));
        zeta = k;
        while (zeta > 0 && mark_[f.chain[zeta - 1]]) {
          m_.tick();
          --zeta;
        }
        for (int a : start.list) mark_[a] = 0;
        rel = difference_sorted(fr.P[zeta], start.list, &m_);
        break;
      default:
        throw std::logic_error("unresolved start form");
    }

    // In the dual orientation the walk heads for the empty ideal; it mirrors
    // the chain, so abstract index j is block k - j and the roles of the S
    // and L buckets swap.
    const int zp = dual ? k - zeta : zeta;
    auto oi = [&](int j) { return dual ? k - j : j; };
    auto Lx = [&](int j) -> const LocalList& { return dual ? f.S[k + 1 - j] : f.L[j]; };
    auto Sx = [&](int j) -> const LocalList& { return dual ? f.L[k + 1 - j] : f.S[j]; };
    auto low = [&] { return LForm{dual ? FormKind::Full : FormKind::Empty, {}}; };
    auto high = [&] { return LForm{dual ? FormKind::Empty : FormKind::Full, {}}; };
    auto low_plus = [&](LocalList l) {
      return LForm{dual ? FormKind::FullMinus : FormKind::EmptyPlus, std::move(l)};
    };
    auto high_minus = [&](LocalList l) {
      return LForm{dual ? FormKind::EmptyPlus : FormKind::FullMinus, std::move(l)};
    };
    auto low_plus_end = [&] {
      return LForm{dual ? FormKind::FullMinusMax : FormKind::EmptyPlusMin, {}};
    };
    auto high_minus_end = [&] {
      return LForm{dual ? FormKind::EmptyPlusMin : FormKind::FullMinusMax, {}};
    };
    auto is_low = [&](const LForm& x, std::size_t sz) {
      const std::size_t c = content_size(x, sz);
      return dual ? c == sz : c == 0;
    };
    auto is_high = [&](const LForm& x, std::size_t sz) {
      const std::size_t c = content_size(x, sz);
      return dual ? c == 0 : c == sz;
    };

    const bool split = zp == k;
    int part_a = kWhole, part_b = kWhole;
    if (split) {
      // The start ideal and the target both live in one block; cut it at y
      // so that one half is walked first and the other last.
      const LocalList& Pb = fr.P[oi(k)];
      int y = -1;
      if (dual) {
        y = rel.front();
      } else {
        std::size_t j = 0;
        for (int a : Pb) {
          m_.tick();
          if (j < rel.size() && rel[j] == a) {
            ++j;
            continue;
          }
          y = a;
          break;
        }
      }
      const Element yid = f.id(y);
      for (int a : Pb) {
        m_.tick(2);
        const Element u = f.id(a);
        const bool up = a == y || p_.less(yid, u);
        const bool dn = a == y || p_.less(u, yid);
        if (!up) fr.lower.push_back(a);
        if (!dn) fr.upper.push_back(a);
        if (dn) fr.down.push_back(a);
      }
      part_a = dual ? kUpper : kLower;
      part_b = dual ? kLower : kUpper;
    }

    std::vector<Block> plan;
    auto push = [&](int idx, int part, LForm first, LForm last) {
      const Block b{idx, part, {}, {}};
      const std::size_t sz = fr.sub_of(b).size();
      if (sz == 0) {
        plan.push_back(Block{idx, part, LForm{}, LForm{}});
        return;
      }
      normalize(first, sz);
      normalize(last, sz);
      plan.push_back(Block{idx, part, std::move(first), std::move(last)});
    };
    auto size_of = [&](int idx, int part) {
      return fr.sub_of(Block{idx, part, {}, {}}).size();
    };

    for (int j = zp; j >= 0; j -= 2) {
      const int idx = oi(j);
      const int part = (split && j == zp) ? part_a : kWhole;
      const std::size_t sz = size_of(idx, part);
      LForm first;
      if (j == zp) {
        first = LForm{FormKind::EmptyPlus,
                      part == kWhole ? rel : intersect_sorted(rel, fr.sub_of(Block{idx, part, {}, {}}), m_)};
      } else {
        first = low_plus(merge_sorted(Lx(j + 1), Lx(j + 2), &m_));
      }
      normalize(first, sz);
      LForm last;
      if (j == 0) last = is_high(first, sz) ? high_minus_end() : high();
      else last = is_low(first, sz) ? low_plus_end() : low();
      push(idx, part, std::move(first), std::move(last));
    }

    std::vector<int> asc;
    for (int j = (zp % 2 == 0) ? 1 : 0; j < zp; j += 2) asc.push_back(j);
    if (!split)
      for (int j = zp + 1; j <= k; ++j) asc.push_back(j);
    int prev = 0;
    for (int j : asc) {
      m_.tick();
      const int idx = oi(j);
      if (j == 0) {
        push(idx, kWhole, low(), high());
        prev = 0;
        continue;
      }
      LocalList list;
      for (int t = prev + 1; t <= j; ++t) list = merge_sorted(list, Sx(t), &m_);
      prev = j;
      LForm first = list.empty() ? high_minus_end() : high_minus(std::move(list));
      push(idx, kWhole, std::move(first), high());
    }
    if (split) push(oi(k), part_b, high_minus_end(), high());
    return plan;
  }

  void execute(Frame& fr, const std::vector<Block>& plan, bool reversed) {
    const ChainFrame& f = fr.f;
    static const LocalList kNone;
    int d = 0;
    const LocalList* held_sub = nullptr;
    const LocalList* held_extra = nullptr;
    const std::size_t count = plan.size();
    for (std::size_t t = 0; t < count; ++t) {
      m_.tick();
      const Block& b = plan[reversed ? count - 1 - t : t];
      const LForm& first = reversed ? b.last : b.first;
      const LForm& last = reversed ? b.first : b.last;
      const LocalList& bsub = fr.sub_of(b);
      const LocalList& extra = b.part == kUpper ? fr.down : kNone;
      if (t == 0) {
        d = b.idx;
      } else {
        for (int a : *held_sub) {
          m_.tick();
          if (cur_.contains(f.id(a))) cur_.remove(f.id(a));
        }
        for (int a : *held_extra) cur_.remove(f.id(a));
        while (d < b.idx) {
          ++d;
          for (int a : f.L[d]) cur_.add(f.id(a));
          cur_.add(f.id(f.chain[d - 1]));
        }
        while (d > b.idx) {
          cur_.remove(f.id(f.chain[d - 1]));
          for (int a : f.L[d]) cur_.remove(f.id(a));
          --d;
        }
        for (int a : extra) cur_.add(f.id(a));
        switch (first.kind) {
          case FormKind::Full:
          case FormKind::FullMinusMax:
            for (int a : bsub) cur_.add(f.id(a));
            break;
          case FormKind::EmptyPlus:
            for (int a : first.list) cur_.add(f.id(a));
            break;
          case FormKind::FullMinus:
            for (int a : difference_sorted(bsub, first.list, &m_)) cur_.add(f.id(a));
            break;
          default:
            break;
        }
      }
      held_sub = &bsub;
      held_extra = &extra;
      call(f, bsub, first, last);
    }
  }

  void call(const ChainFrame& f, const LocalList& bsub, const LForm& first,
            const LForm& last) {
    const auto ids = to_ids(f, bsub, m_);
    Form fi{first.kind, to_ids(f, first.list, m_)};
    Form la{last.kind, to_ids(f, last.list, m_)};
    if (!m_.may_descend(ids)) {
      m_.skip(ids);
      settle_skipped(ids, la);
      return;
    }
    walk(ids, fi, la);
  }

  // Leaves the cursor where the skipped call would have left it.
  void settle_skipped(const std::vector<Element>& ids, const Form& last) {
    Meter::Pause pause(m_);
    for (Element u : ids)
      if (cur_.contains(u)) cur_.remove(u);
    switch (last.kind) {
      case FormKind::Empty:
        break;
      case FormKind::Full:
        for (Element u : ids) cur_.add(u);
        break;
      case FormKind::EmptyPlus:
        for (Element u : last.list) cur_.add(u);
        break;
      case FormKind::FullMinus: {
        std::vector<Element> keep;
        std::set_difference(ids.begin(), ids.end(), last.list.begin(), last.list.end(),
                            std::back_inserter(keep));
        for (Element u : keep) cur_.add(u);
        break;
      }
      case FormKind::EmptyPlusMin:
        cur_.add(*pick_perturbation(SubposetView{&p_, ids}, ChainEnd::Min));
        break;
      case FormKind::FullMinusMax: {
        const Element x = *pick_perturbation(SubposetView{&p_, ids}, ChainEnd::Max);
        for (Element u : ids)
          if (u != x) cur_.add(u);
        break;
      }
    }
  }

  void emit() {
    m_.tick();
    visit_(cur_);
    m_.visited();
  }

  const Poset& p_;
  const Visitor& visit_;
  Meter& m_;
  Cursor cur_;
  std::vector<int> local_of_;
  std::vector<std::uint8_t> mark_;
};

}  // namespace

void enumerate_ideals_basic(const Poset& p, const Visitor& visit, Meter* meter,
                            bool track_changes) {
  Meter local;
  BasicIdeals(p, visit, meter ? *meter : local, track_changes).run();
}

void enumerate_ideals_gray(const Poset& p, const Visitor& visit, Meter* meter) {
  Meter local;
  GrayIdeals(p, visit, meter ? *meter : local).run();
}

TopSplit split_for_top(const SubposetView& p, Element y, Meter* meter) {
  TopSplit out;
  const Poset& P = *p.poset;
  for (Element u : p.elements) {
    if (meter) meter->tick(2);
    const bool up = u == y || P.less(y, u);
    const bool dn = u == y || P.less(u, y);
    if (!up) out.lower.push_back(u);
    if (!dn) out.upper.push_back(u);
    if (dn) out.down.push_back(u);
  }
  return out;
}

std::optional<Element> pick_perturbation(const SubposetView& p, ChainEnd end) {
  if (p.empty()) return std::nullopt;
  const ChainFrame f = build_frame(p);
  return f.id(end == ChainEnd::Min ? f.chain.front() : f.chain.back());
}

}  // namespace posetenum
