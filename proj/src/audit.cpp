#include "posetenum/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "posetenum/chain_frame.hpp"
#include "posetenum/kernels.hpp"
#include "posetenum/meter.hpp"

namespace posetenum {

PotentialConstants PotentialConstants::ideals() {
  return {922, 921, 385, 192, 1844, kDefaultTstar};
}

PotentialConstants PotentialConstants::antichains() {
  return {196, 195, 97, 96, 392, kDefaultTstar};
}

PotentialConstants PotentialConstants::defaults(Kind kind) {
  return kind == Kind::Ideals ? ideals() : antichains();
}

void PotentialConstants::validate() const {
  if (alpha <= 0 || beta <= 0 || gamma <= 0 || delta <= 0 || mu <= 0 || tstar <= 0)
    throw std::invalid_argument("potential constants must be positive");
  if (mu < alpha + beta + 1) throw std::invalid_argument("mu must be at least alpha + beta + 1");
}

std::int64_t potential(const PosetStats& s, const PotentialConstants& c) {
  return c.alpha + c.beta * s.n + c.gamma * s.q + c.delta * s.t;
}

namespace {

class Recorder : public Probe {
 public:
  Recorder(Ledger& ledger, Meter& meter, const AuditLimits& limits)
      : ledger_(ledger), meter_(meter), limits_(limits) {}

  void enter(std::span<const Element> sub) override {
    IterationRecord r;
    r.id = static_cast<int>(ledger_.nodes.size());
    r.parent = open_.empty() ? -1 : open_.back().id;
    r.depth = static_cast<int>(open_.size());
    r.sub.assign(sub.begin(), sub.end());
    if (r.parent >= 0) ledger_.nodes[r.parent].children.push_back(r.id);
    ledger_.nodes.push_back(std::move(r));
    open_.push_back({static_cast<int>(ledger_.nodes.size()) - 1, meter_.count(), 0});
  }

  void leave() override {
    const Open o = open_.back();
    open_.pop_back();
    IterationRecord& r = ledger_.nodes[o.id];
    r.subtree_ticks = meter_.count() - o.start;
    r.ticks = r.subtree_ticks - o.child_ticks;
    r.subtree_visits += r.visits;
    for (int c : r.children) {
      r.subtree_visits += ledger_.nodes[c].subtree_visits;
      r.complete = r.complete && ledger_.nodes[c].complete;
    }
    r.complete = r.complete && r.skipped.empty();
    if (!open_.empty()) open_.back().child_ticks += r.subtree_ticks;
  }

  bool may_descend(std::span<const Element>) override {
    const int depth = static_cast<int>(open_.size());
    if (limits_.max_depth >= 0 && depth > limits_.max_depth) return false;
    return static_cast<std::int64_t>(ledger_.nodes.size()) < limits_.max_nodes;
  }

  void skip(std::span<const Element> sub) override {
    ledger_.nodes[open_.back().id].skipped.emplace_back(sub.begin(), sub.end());
  }

  void visit() override {
    ++ledger_.nodes[open_.back().id].visits;
    ledger_.visit_ticks.push_back(meter_.count());
  }

 private:
  struct Open {
    int id;
    std::int64_t start;
    std::int64_t child_ticks;
  };
  Ledger& ledger_;
  Meter& meter_;
  AuditLimits limits_;
  std::vector<Open> open_;
};

std::string side(std::int64_t lhs, const char* op, std::int64_t rhs) {
  return std::to_string(lhs) + " " + op + " " + std::to_string(rhs);
}

}  // namespace

Ledger record_ledger(const Poset& p, Kind kind, Order order, const PotentialConstants& c,
                     const AuditLimits& limits) {
  c.validate();
  Ledger ledger;
  ledger.kind = kind;
  ledger.order = order;
  ledger.constants = c;
  Meter meter;
  Recorder rec(ledger, meter, limits);
  meter.set_probe(&rec);
  enumerate(p, kind, order, [](Cursor&) {}, &meter, false);
  ledger.total_ticks = meter.count();

  auto& nodes = ledger.nodes;
  std::vector<std::int64_t> path(nodes.size(), 0);
  for (auto& r : nodes) {
    path[r.id] = r.ticks + (r.parent >= 0 ? path[r.parent] : 0);
    ledger.max_path_ticks = std::max(ledger.max_path_ticks, path[r.id]);
  }

  std::vector<std::int64_t> skipped_phi(nodes.size(), 0);
  const auto count = static_cast<std::int64_t>(nodes.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    auto& r = nodes[i];
    r.stats = kernels::pair_triple_counts_serial(p, r.sub);
    r.phi = potential(r.stats, c);
    for (const auto& s : r.skipped)
      skipped_phi[i] += potential(kernels::pair_triple_counts_serial(p, s), c);
  }
  for (auto& r : nodes) {
    r.children_phi_sum = skipped_phi[r.id];
    for (int ch : r.children) r.children_phi_sum += nodes[ch].phi;
  }
  return ledger;
}

std::string ledger_csv(const Ledger& ledger) {
  std::ostringstream out;
  out << "node_id,parent_id,depth,n,q,t,phi,ticks,visits\n";
  for (const auto& r : ledger.nodes)
    out << r.id << ',' << r.parent << ',' << r.depth << ',' << r.stats.n << ','
        << r.stats.q << ',' << r.stats.t << ',' << r.phi << ',' << r.ticks << ','
        << r.visits << '\n';
  return out.str();
}

std::int64_t pyramid_slack(const Ledger& ledger, const IterationRecord& r) {
  return r.children_phi_sum + ledger.constants.mu * r.visits - r.phi;
}

CheckReport check_pyramid(const Ledger& ledger) {
  CheckReport rep{"pyramid", 0, {}};
  const std::int64_t tstar = ledger.constants.tstar;
  for (const auto& r : ledger.nodes) {
    ++rep.checked;
    const std::int64_t coins = tstar * pyramid_slack(ledger, r);
    if (coins < r.ticks)
      rep.violations.push_back({r.id, "T* * slack = " + side(coins, "<", r.ticks)});
  }
  return rep;
}

CheckReport check_inner_bound(const Ledger& ledger) {
  CheckReport rep{"inner-bound", 0, {}};
  const auto& c = ledger.constants;
  for (const auto& r : ledger.nodes) {
    if (r.stats.n == 0) continue;
    ++rep.checked;
    const std::int64_t lhs = r.children_phi_sum - r.phi;
    if (lhs < r.stats.n + r.stats.q)
      rep.violations.push_back({r.id, "Sum Phi - Phi = " + side(lhs, "<", r.stats.n + r.stats.q)});
    if (ledger.kind == Kind::Antichains && r.stats.n == 1 && c.mu - r.phi < 1)
      rep.violations.push_back({r.id, "mu - Phi = " + side(c.mu - r.phi, "<", 1)});
  }
  return rep;
}

std::int64_t required_tstar(const Ledger& ledger) {
  std::int64_t need = 0;
  for (const auto& r : ledger.nodes) {
    if (r.ticks <= 0) continue;
    const std::int64_t slack = pyramid_slack(ledger, r);
    if (slack <= 0)
      throw std::domain_error("node " + std::to_string(r.id) + " has no slack");
    need = std::max(need, (r.ticks + slack - 1) / slack);
  }
  return need;
}

CheckReport check_subtree(const Ledger& ledger) {
  CheckReport rep{"subtree", 0, {}};
  const auto& c = ledger.constants;
  for (const auto& r : ledger.nodes) {
    if (!r.complete) continue;
    ++rep.checked;
    const std::int64_t bound = c.tstar * (c.mu * r.subtree_visits - r.phi);
    if (r.subtree_ticks > bound)
      rep.violations.push_back({r.id, "subtree ticks " + side(r.subtree_ticks, ">", bound)});
  }
  return rep;
}

CheckReport check_gap(const Ledger& ledger) {
  CheckReport rep{"gap", 0, {}};
  if (!ledger.complete()) return rep;
  const std::int64_t step = ledger.constants.mu * ledger.constants.tstar;
  const std::int64_t big_delta = ledger.max_path_ticks;
  // f(j) - f(i) <= 2D - 1 for all i < j, with f(j) = stamp_j - j*step.
  std::int64_t min_f = std::numeric_limits<std::int64_t>::max();
  const auto& stamps = ledger.visit_ticks;
  for (std::size_t idx = 0; idx < stamps.size(); ++idx) {
    const auto j = static_cast<std::int64_t>(idx) + 1;
    ++rep.checked;
    const std::int64_t before = stamps[idx] - 1;
    if (before > big_delta + j * step - 1)
      rep.violations.push_back(
          {static_cast<int>(j), "ticks before visit " + side(before, ">", big_delta + j * step - 1)});
    const std::int64_t f = stamps[idx] - j * step;
    if (min_f != std::numeric_limits<std::int64_t>::max() && f - min_f > 2 * big_delta - 1)
      rep.violations.push_back(
          {static_cast<int>(j), "excess between visits " + side(f - min_f, ">", 2 * big_delta - 1)});
    min_f = std::min(min_f, f);
  }
  return rep;
}

PairPartition pair_partition(const Poset& p, std::span<const Element> sub, Kind kind) {
  PairPartition out;
  if (sub.empty()) return out;
  const std::vector<Element> ids(sub.begin(), sub.end());
  const ChainFrame f = build_frame(SubposetView{&p, ids});
  const int shift = kind == Kind::Ideals ? 0 : 1;
  std::vector<int> off;
  for (int a = 0; a < f.size(); ++a) {
    if (f.on_chain(a)) {
      for (int b = 0; b < f.size(); ++b)
        if (!f.on_chain(b) && !p.comparable(f.id(a), f.id(b))) ++out.q1;
    } else {
      off.push_back(a);
      out.n_weighted += f.l[a] - f.s[a] - shift;
    }
  }
  const std::size_t m = off.size();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y) {
      const int u = off[x], v = off[y];
      if (p.comparable(f.id(u), f.id(v))) continue;
      const int s2 = std::max(f.s[u], f.s[v]);
      const int l2 = std::min(f.l[u], f.l[v]);
      if (s2 + 1 < l2) ++out.q2;
      else ++out.q3;
      for (std::size_t z = y + 1; z < m; ++z) {
        const int w = off[z];
        if (p.comparable(f.id(u), f.id(w)) || p.comparable(f.id(v), f.id(w))) continue;
        const int s3 = std::max(s2, f.s[w]);
        const int l3 = std::min(l2, f.l[w]);
        if (s3 + 1 < l3) out.t2_weighted += l3 - s3 - shift;
      }
    }
  return out;
}

CheckReport check_pair_bound(const Ledger& ledger, const Poset& p) {
  CheckReport rep{"pair-bound", 0, {}};
  const auto& nodes = ledger.nodes;
  const auto count = static_cast<std::int64_t>(nodes.size());
  std::vector<PairPartition> parts(nodes.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < count; ++i) parts[i] = pair_partition(p, nodes[i].sub, ledger.kind);
  for (const auto& r : nodes) {
    if (r.sub.empty()) continue;
    ++rep.checked;
    const auto& pp = parts[r.id];
    const std::int64_t rhs = 96 * (pp.t2_weighted + pp.n_weighted);
    if (pp.q3 > rhs) rep.violations.push_back({r.id, "q''' = " + side(pp.q3, ">", rhs)});
  }
  return rep;
}

PushoutReport check_pushout(const Ledger& ledger, const PushoutParams& params) {
  PushoutReport rep;
  rep.condition.name = "pushout";
  rep.cross_check.name = "pushout-implies-pyramid";
  const double a = params.alpha, b = params.beta;
  const double tstar = static_cast<double>(ledger.constants.tstar);
  auto time = [&](const IterationRecord& r) {
    if (params.model == TimeModel::Measured) return static_cast<double>(r.ticks);
    return tstar * static_cast<double>(r.stats.n + r.stats.q);
  };
  for (const auto& r : ledger.nodes) {
    if (r.children.empty() || !r.skipped.empty()) continue;
    double sum = 0;
    double largest = 0;
    for (int ch : r.children) {
      const double t = time(ledger.nodes[ch]);
      sum += t;
      largest = std::max(largest, t);
    }
    const double c = static_cast<double>(r.children.size());
    const double tx = time(r);
    const double slack = sum - (a * tx - b * (c + 1) * tstar);
    if (r.id == 0) {
      rep.root_slack = slack;
      if (tx > 0) rep.root_ratio = (sum - largest) / tx;
    }
    ++rep.condition.checked;
    if (slack < 0) {
      std::ostringstream d;
      d << "children T " << sum << " < " << a * tx - b * (c + 1) * tstar;
      rep.condition.violations.push_back({r.id, d.str()});
      continue;
    }
    // Phi(X) = T(X)/((a-1)T*) + 3b/(a-1), scaled by (a-1)T*.
    ++rep.cross_check.checked;
    const double lhs = sum - tx + 3 * b * tstar * (c - 1);
    if (r.children.size() >= 2 && lhs < (a - 1) * tx) {
      std::ostringstream d;
      d << "induced slack " << lhs << " < " << (a - 1) * tx;
      rep.cross_check.violations.push_back({r.id, d.str()});
    }
  }
  return rep;
}

bool check_aux(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  auto weighted = [](std::span<const std::int64_t> v) {
    std::int64_t total = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      const std::int64_t x = v[j];
      if (x < 1) throw std::invalid_argument("check_aux entries must be positive");
      total += static_cast<std::int64_t>(j + 1) * (x * (x - 1) * (x - 2) / 6 + 1);
    }
    return total;
  };
  std::int64_t sa = 0, sb = 0;
  for (auto x : a) sa += x;
  for (auto x : b) sb += x;
  return 48 * weighted(a) + 48 * weighted(b) >= sa * sb;
}

}  // namespace posetenum
