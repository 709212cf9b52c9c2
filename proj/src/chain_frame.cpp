#include "posetenum/chain_frame.hpp"

#include <algorithm>

namespace posetenum {

namespace {

inline void tick(Meter* m, std::int64_t n = 1) {
  if (m) m->tick(n);
}

}  // namespace

AntichainDecomposition decompose(const SubposetView& p, Meter* meter) {
  const int m = p.size();
  const Poset& P = *p.poset;
  AntichainDecomposition d;
  d.level.assign(m, 0);
  d.pred.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    tick(meter);
    const Element u = p.elements[a];
    int placed = 0;
    for (int t = static_cast<int>(d.levels.size()); t >= 1 && placed == 0; --t) {
      for (int b : d.levels[t - 1]) {
        tick(meter);
        if (P.less(p.elements[b], u)) {
          d.pred[a] = b;
          placed = t + 1;
          break;
        }
      }
    }
    if (placed == 0) placed = 1;
    if (placed > static_cast<int>(d.levels.size())) d.levels.emplace_back();
    d.levels[placed - 1].push_back(a);
    d.level[a] = placed;
    tick(meter);
  }
  return d;
}

LocalList longest_chain(const AntichainDecomposition& d, Meter* meter) {
  LocalList chain;
  if (d.levels.empty()) return chain;
  const LocalList& top = d.levels.back();
  int start = top.front();
  for (int a : top) start = std::min(start, a);
  chain.resize(d.levels.size());
  int pos = static_cast<int>(chain.size());
  for (int a = start; a != -1; a = d.pred[a]) {
    tick(meter);
    chain[--pos] = a;
  }
  return chain;
}

Levels compute_levels(const SubposetView& p, const LocalList& chain,
                      const AntichainDecomposition& d, Meter* meter) {
  const int m = p.size();
  const int k = static_cast<int>(chain.size());
  const Poset& P = *p.poset;
  Levels lv;
  lv.s.assign(m, 0);
  lv.l.assign(m, k + 1);
  for (int i = 1; i <= k; ++i) lv.s[chain[i - 1]] = lv.l[chain[i - 1]] = i;
  std::vector<std::uint8_t> is_chain(m, 0);
  for (int c : chain) is_chain[c] = 1;
  for (int a = 0; a < m; ++a) {
    tick(meter);
    if (is_chain[a]) continue;
    const Element u = p.elements[a];
    const int i = d.level[a];
    int s = 0;
    for (int j = i - 1; j >= 1; --j) {
      tick(meter);
      if (P.less(p.elements[chain[j - 1]], u)) {
        s = j;
        break;
      }
    }
    int l = k + 1;
    for (int j = i + 1; j <= k; ++j) {
      tick(meter);
      if (P.less(u, p.elements[chain[j - 1]])) {
        l = j;
        break;
      }
    }
    lv.s[a] = s;
    lv.l[a] = l;
  }
  return lv;
}

std::vector<Element> ChainFrame::ids(const LocalList& locals) const {
  std::vector<Element> out;
  out.reserve(locals.size());
  for (int a : locals) out.push_back(sub[a]);
  return out;
}

ChainFrame build_frame(const SubposetView& p, Meter* meter) {
  ChainFrame f;
  f.sub.assign(p.elements.begin(), p.elements.end());
  const auto d = decompose(p, meter);
  f.chain = longest_chain(d, meter);
  auto lv = compute_levels(p, f.chain, d, meter);
  f.s = std::move(lv.s);
  f.l = std::move(lv.l);
  const int m = f.size();
  const int k = f.k();
  f.chain_pos.assign(m, 0);
  for (int i = 1; i <= k; ++i) f.chain_pos[f.chain[i - 1]] = i;
  f.S.assign(k + 1, {});
  f.L.assign(k + 2, {});
  // Scanning in local order keeps every bucket sorted.
  for (int a = 0; a < m; ++a) {
    tick(meter);
    if (f.chain_pos[a] != 0) continue;
    f.S[f.s[a]].push_back(a);
    f.L[f.l[a]].push_back(a);
    tick(meter, 2);
  }
  return f;
}

LocalList merge_sorted(const LocalList& a, const LocalList& b, Meter* meter) {
  LocalList out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    tick(meter);
    if (j == b.size() || (i < a.size() && a[i] < b[j]))
      out.push_back(a[i++]);
    else if (i == a.size() || b[j] < a[i])
      out.push_back(b[j++]);
    else {
      out.push_back(a[i++]);
      ++j;
    }
  }
  return out;
}

LocalList difference_sorted(const LocalList& a, const LocalList& b, Meter* meter) {
  LocalList out;
  out.reserve(a.size());
  std::size_t j = 0;
  for (int x : a) {
    tick(meter);
    while (j < b.size() && b[j] < x) {
      tick(meter);
      ++j;
    }
    if (j < b.size() && b[j] == x) continue;
    out.push_back(x);
  }
  return out;
}

namespace {

LocalList drop_and_merge(const ChainFrame& f, int drop_l, const LocalList& add,
                         const LocalList& current, Meter* meter) {
  LocalList kept;
  kept.reserve(current.size());
  for (int a : current) {
    tick(meter);
    if (f.l[a] != drop_l) kept.push_back(a);
  }
  return merge_sorted(kept, add, meter);
}

}  // namespace

void advance_subposet(const ChainFrame& f, int i, LocalList& current, Meter* meter) {
  current = drop_and_merge(f, i, f.S[i], current, meter);
}

void advance_antichain_subposet(const ChainFrame& f, int i, LocalList& current,
                                Meter* meter) {
  if (i == 1) {
    current = f.S[0];
    tick(meter, static_cast<std::int64_t>(current.size()));
    return;
  }
  current = drop_and_merge(f, i, f.S[i - 1], current, meter);
}

std::vector<LocalList> ideal_subposets(const ChainFrame& f, Meter* meter) {
  std::vector<LocalList> P(f.k() + 1);
  P[0] = f.S[0];
  tick(meter, static_cast<std::int64_t>(P[0].size()));
  for (int i = 1; i <= f.k(); ++i) {
    P[i] = drop_and_merge(f, i, f.S[i], P[i - 1], meter);
  }
  return P;
}

LocalList off_chain(const ChainFrame& f, Meter* meter) {
  LocalList out;
  out.reserve(f.sub.size() - f.chain.size());
  for (int a = 0; a < f.size(); ++a) {
    tick(meter);
    if (f.chain_pos[a] == 0) out.push_back(a);
  }
  return out;
}

}  // namespace posetenum
