// Acceptance run: one PASS/FAIL line per criterion. With a criterion id as
// argument (1..8, or 5c for the charged push-out line) only that one runs.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "posetenum/audit.hpp"
#include "posetenum/enumerate.hpp"
#include "posetenum/oracle.hpp"
#include "posetenum/run.hpp"
#include "posetenum/stepper.hpp"

using namespace posetenum;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 500 seeded random posets with n in [1, 10] and the fixtures.
std::vector<Poset> oracle_corpus() {
  std::vector<Poset> out;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> size(1, 10);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 500; ++i) out.push_back(random_poset(size(rng), density(rng), rng()));
  for (int n = 0; n <= 10; ++n) {
    out.push_back(chain(n));
    out.push_back(antichain(n));
  }
  out.push_back(v_poset());
  for (int ell = 1; ell <= 3; ++ell) out.push_back(uno(ell));
  return out;
}

const std::vector<Poset>& corpus() {
  static const std::vector<Poset> c = oracle_corpus();
  return c;
}

SetFamily oracle(const Poset& p, Kind k) {
  return k == Kind::Ideals ? brute_ideals(p) : brute_antichains(p);
}

const Kind kKinds[] = {Kind::Ideals, Kind::Antichains};
const Order kOrders[] = {Order::Basic, Order::Gray};

std::string label(Kind k, Order o) {
  return std::string(to_string(k)) + "/" + std::string(to_string(o));
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  std::int64_t runs = 0, bad = 0;
  std::string first;
  for (const Poset& p : corpus())
    for (Kind k : kKinds) {
      const SetFamily fam = oracle(p, k);
      for (Order o : kOrders) {
        ++runs;
        if (!verify_permutation(collect_sets(p, k, o), fam)) {
          if (bad++ == 0) first = label(k, o) + " n=" + std::to_string(p.size());
        }
      }
    }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << runs << " runs on " << corpus().size() << " posets, " << bad << " mismatches, " << secs
    << " s";
  if (bad) d << ", first " << first;
  return {bad == 0 && secs < 60.0, d.str()};
}

Outcome criterion2() {
  std::int64_t runs = 0, bad = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (bad++ == 0) first = what;
  };
  for (const Poset& p : corpus()) {
    const auto full = all_elements(p);
    const auto ideals = collect_sets(p, Kind::Ideals, Order::Gray);
    ++runs;
    if (verify_gray(ideals, 3)) fail("ideal Gray distance");
    if (ideals.empty() || !ideals.front().empty()) fail("ideal walk does not start at the empty set");
    if (ideals.empty() || ideals.back() != full) fail("ideal walk does not end at P");
    const auto anti = collect_sets(p, Kind::Antichains, Order::Gray);
    ++runs;
    if (verify_gray(anti, 3)) fail("antichain Gray distance");
    if (anti.empty() || !anti.back().empty()) fail("antichain walk does not end empty");
    if (p.size() > 0 && (anti.empty() || anti.front().size() != 1))
      fail("antichain walk does not start at a 1-antichain");
  }
  std::ostringstream d;
  d << runs << " Gray runs, " << bad << " violations";
  if (bad) d << ", first: " << first;
  return {bad == 0, d.str()};
}

std::int64_t count_visits(const Poset& p, Kind k, Order o) {
  std::int64_t c = 0;
  enumerate(p, k, o, [&](Cursor& cur) {
    if (o == Order::Gray) cur.take_delta();
    ++c;
  });
  return c;
}

Outcome criterion3() {
  std::int64_t checks = 0, bad = 0;
  for (int n = 0; n <= 20; ++n)
    for (Order o : kOrders) {
      checks += 2;
      if (count_visits(chain(n), Kind::Ideals, o) != n + 1) ++bad;
      if (count_visits(antichain(n), Kind::Ideals, o) != (std::int64_t{1} << n)) ++bad;
    }
  for (const Poset& p : corpus()) {
    checks += 2;
    if (count_visits(p, Kind::Ideals, Order::Basic) != count_visits(p, Kind::Antichains, Order::Basic))
      ++bad;
    if (brute_ideals(p).size() != brute_antichains(p).size()) ++bad;
  }
  std::ostringstream d;
  d << checks << " identities, " << bad << " wrong";
  return {bad == 0, d.str()};
}

// The audited runs of criteria 4 and 8: the oracle corpus, larger random
// posets and uno(l) for l <= 32, all four kind/order pairs.
struct AuditedRun {
  std::string name;
  const Poset* poset;
  Ledger ledger;
};

const std::vector<AuditedRun>& audited_runs() {
  static const std::vector<AuditedRun> runs = [] {
    static std::vector<Poset> extra;
    for (std::uint64_t s = 1; s <= 20; ++s) extra.push_back(random_poset(12 + 2 * s, 0.15, s));
    for (int n : {16, 40}) {
      extra.push_back(chain(n));
      extra.push_back(antichain(n));
    }
    for (int ell : {4, 8, 16, 32}) extra.push_back(uno(ell));
    std::vector<AuditedRun> out;
    auto add = [&](const std::string& name, const Poset& p, const AuditLimits& lim) {
      for (Kind k : kKinds)
        for (Order o : kOrders)
          out.push_back({name + " " + label(k, o), &p,
                         record_ledger(p, k, o, PotentialConstants::defaults(k), lim)});
    };
    for (const Poset& p : corpus()) add("corpus n=" + std::to_string(p.size()), p, {});
    for (const Poset& p : extra) add("n=" + std::to_string(p.size()), p, {});
    // Near the root of the big uno trees the node cap cuts whole subtrees;
    // a depth cap records every node of the top levels instead.
    AuditLimits shallow;
    shallow.max_depth = 2;
    shallow.max_nodes = 1000000;
    for (std::size_t i = extra.size() - 2; i < extra.size(); ++i)
      add("depth<=2 n=" + std::to_string(extra[i].size()), extra[i], shallow);
    return out;
  }();
  return runs;
}

Outcome criterion4() {
  std::int64_t nodes = 0, bad = 0;
  std::string first;
  for (const auto& r : audited_runs()) {
    const auto rep = check_pyramid(r.ledger);
    nodes += rep.checked;
    if (!rep.passed() && bad == 0) first = r.name + ": " + rep.violations.front().detail;
    bad += static_cast<std::int64_t>(rep.violations.size());
  }
  std::int64_t tight_bad = 0;
  for (int n : {1, 2, 5, 10, 50, 200}) {
    const Ledger L = record_ledger(chain(n), Kind::Ideals, Order::Basic,
                                   PotentialConstants::ideals());
    if (pyramid_slack(L, L.nodes.front()) != n) ++tight_bad;
  }
  std::ostringstream d;
  d << audited_runs().size() << " ledgers, " << nodes << " nodes, " << bad
    << " Pyramid violations, chain root slack == n: " << (tight_bad ? "no" : "yes");
  if (bad) d << ", first " << first;
  return {bad == 0 && tight_bad == 0, d.str()};
}

// Root-level push-out over uno(l), l in {8, 16, 32, 64}.
Outcome pushout_criterion(TimeModel model) {
  const int ells[] = {8, 16, 32, 64};
  const PushoutParams params[] = {{1.5, 4.0, model}, {2.0, 8.0, model}};
  std::vector<double> ratios;
  bool violated_all = true;
  std::ostringstream d;
  AuditLimits root_only;
  root_only.max_depth = 1;
  root_only.max_nodes = 1000000;
  for (int ell : ells) {
    const Ledger L = record_ledger(uno(ell), Kind::Ideals, Order::Basic,
                                   PotentialConstants::ideals(), root_only);
    const auto first = check_pushout(L, params[0]);
    ratios.push_back(first.root_ratio.value_or(NAN));
    d << "l=" << ell << " ratio=" << ratios.back();
    for (const auto& pp : params) {
      const auto rep = check_pushout(L, pp);
      const bool root_fails =
          std::any_of(rep.condition.violations.begin(), rep.condition.violations.end(),
                      [](const Violation& v) { return v.node == 0; });
      d << (root_fails ? " viol" : " ok");
      if (ell == ells[3] && !root_fails) violated_all = false;
    }
    d << "; ";
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < ratios.size(); ++i)
    if (!(ratios[i] < ratios[i - 1])) decreasing = false;
  d << (model == TimeModel::Measured ? "measured" : "charged") << " ticks, ratio "
    << (decreasing ? "decreasing" : "not decreasing") << ", violated at l=64: "
    << (violated_all ? "both" : "not both");
  return {decreasing && violated_all, d.str()};
}

Outcome criterion5() { return pushout_criterion(TimeModel::Measured); }
Outcome criterion5_charged() { return pushout_criterion(TimeModel::Charged); }

const std::vector<std::string> kFamilies = {"chain", "antichain", "random"};
const std::vector<int> kSizes = {50, 100, 200, 400};
constexpr std::int64_t kCap = std::int64_t{1} << 17;
constexpr double kFirstConstant = 16.0;  // ticks_to_first <= c n (n + q)
constexpr double kGapConstant = 1.0;     // loopless max gap <= c' mu T*

struct SweepRow {
  std::string family;
  Kind kind;
  BenchRow row;
};

std::vector<SweepRow> sweep(Order order, bool loopless) {
  std::vector<SweepRow> rows;
  for (Kind k : kKinds)
    for (const auto& f : kFamilies)
      for (int n : kSizes) rows.push_back({f, k, {}});
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int n = kSizes[i % kSizes.size()];
    const Poset p = generate(bench_spec(rows[i].family, n), 1);
    rows[i].row = bench_one(p, rows[i].kind, order, loopless, kCap,
                            PotentialConstants::defaults(rows[i].kind));
  }
  return rows;
}

// max / min of a per-row quantity within each (kind, family) group. Groups
// at 2x or more are appended to `where`.
template <typename F>
double worst_spread(const std::vector<SweepRow>& rows, F value, std::string& where) {
  std::map<std::string, std::pair<double, double>> range;
  for (const auto& r : rows) {
    const std::string key = std::string(to_string(r.kind)) + "/" + r.family;
    const double v = value(r.row);
    auto it = range.find(key);
    if (it == range.end())
      range[key] = {v, v};
    else
      it->second = {std::min(it->second.first, v), std::max(it->second.second, v)};
  }
  double worst = 0;
  std::ostringstream w;
  for (const auto& [key, mm] : range) {
    const double s = mm.first > 0 ? mm.second / mm.first : INFINITY;
    worst = std::max(worst, s);
    if (s >= 2.0) w << (w.tellp() > 0 ? ", " : "") << key << " " << mm.first << ".." << mm.second;
  }
  where = w.str().empty() ? "all groups under 2x" : w.str();
  return worst;
}

Outcome criterion6() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  for (Order o : kOrders) {
    const auto rows = sweep(o, false);
    std::string where;
    const double spread = worst_spread(rows, [](const BenchRow& r) { return r.ticks_per_output; }, where);
    double first_c = 0;
    for (const auto& r : rows) {
      const double bound = static_cast<double>(r.row.n) * static_cast<double>(r.row.n + r.row.q);
      first_c = std::max(first_c, r.row.ticks_to_first / bound);
    }
    ok = ok && spread < 2.0 && first_c <= kFirstConstant;
    d << to_string(o) << ": per-output spread " << spread << " (" << where
      << "), max ticks_to_first/(n(n+q)) " << first_c << "; ";
  }
  const double secs = seconds_since(t0);
  d << "c=" << kFirstConstant << ", " << secs << " s";
  return {ok && secs < 300.0, d.str()};
}

// First `cap` deltas of the plain Gray run.
std::vector<Delta> gray_prefix(const Poset& p, Kind k, std::int64_t cap) {
  std::vector<Delta> out;
  try {
    enumerate(p, k, Order::Gray, [&](Cursor& c) {
      out.push_back(c.take_delta());
      if (static_cast<std::int64_t>(out.size()) >= cap) throw StopEnumeration();
    });
  } catch (const StopEnumeration&) {
  }
  return out;
}

Outcome criterion7() {
  const auto t0 = Clock::now();
  std::vector<SweepRow> rows;
  try {
    rows = sweep(Order::Gray, true);
  } catch (const std::exception& e) {
    return {false, std::string("stepper failed: ") + e.what()};
  }
  std::string where;
  const double spread = worst_spread(
      rows, [](const BenchRow& r) { return static_cast<double>(r.max_gap_ticks); }, where);
  double gap_c = 0;
  for (const auto& r : rows) {
    const auto c = PotentialConstants::defaults(r.kind);
    gap_c = std::max(gap_c, static_cast<double>(r.row.max_gap_ticks) / (c.mu * c.tstar));
  }
  std::int64_t streams = 0, mismatched = 0, underflows = 0;
  std::vector<std::pair<Kind, std::string>> jobs;
  for (Kind k : kKinds)
    for (const auto& f : kFamilies)
      for (int n : kSizes) jobs.push_back({k, bench_spec(f, n)});
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : streams, mismatched, underflows)
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Poset p = generate(jobs[i].second, 1);
    const auto expect = gray_prefix(p, jobs[i].first, kCap);
    std::vector<Delta> got;
    try {
      auto st = make_stepper(p, jobs[i].first);
      while (static_cast<std::int64_t>(got.size()) < kCap) {
        auto d = st->step();
        if (!d) break;
        got.push_back(*d);
      }
    } catch (const QueueUnderflow&) {
      ++underflows;
    } catch (const std::exception&) {
      ++mismatched;
    }
    ++streams;
    if (got != expect) ++mismatched;
  }
  std::ostringstream d;
  d << "max-gap spread " << spread << " (" << where << "), max gap/(mu T*) " << gap_c
    << ", " << underflows << " underflows, " << mismatched << "/" << streams
    << " streams differ from the Gray run, " << seconds_since(t0) << " s";
  return {spread < 2.0 && gap_c <= kGapConstant && underflows == 0 && mismatched == 0, d.str()};
}

Outcome criterion8() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> len(1, 8), val(1, 8);
  std::int64_t aux_bad = 0;
  for (int i = 0; i < 10000; ++i) {
    std::vector<std::int64_t> a(len(rng)), b(len(rng));
    for (auto& x : a) x = val(rng);
    for (auto& x : b) x = val(rng);
    if (!check_aux(a, b)) ++aux_bad;
  }
  std::int64_t pair_nodes = 0, sub_nodes = 0, gap_visits = 0, bad = 0;
  std::string first;
  for (const auto& r : audited_runs()) {
    const CheckReport reps[] = {check_pair_bound(r.ledger, *r.poset), check_subtree(r.ledger),
                                check_gap(r.ledger)};
    pair_nodes += reps[0].checked;
    sub_nodes += reps[1].checked;
    gap_visits += reps[2].checked;
    for (const auto& rep : reps) {
      if (!rep.passed() && bad == 0)
        first = r.name + " " + rep.name + ": " + rep.violations.front().detail;
      bad += static_cast<std::int64_t>(rep.violations.size());
    }
  }
  std::ostringstream d;
  d << "aux " << aux_bad << "/10000 fail; pair bound on " << pair_nodes << " nodes, subtree on "
    << sub_nodes << " nodes, gap on " << gap_visits << " visits: " << bad << " violations";
  if (bad) d << ", first " << first;
  return {aux_bad == 0 && bad == 0, d.str()};
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"1", "oracle equivalence", criterion1},
      {"2", "3-Gray walks", criterion2},
      {"3", "counting identities", criterion3},
      {"4", "Pyramid ledger", criterion4},
      {"5", "push-out failure on measured ticks", criterion5},
      {"5c", "push-out failure on charged ticks", criterion5_charged},
      {"6", "constant amortized delay", criterion6},
      {"7", "loopless delay", criterion7},
      {"8", "auxiliary lemmas", criterion8},
  };
  const std::string only = argc > 1 ? argv[1] : "";
  int failed = 0, ran = 0;
  for (const auto& c : all) {
    if (!only.empty() && c.id != only) continue;
    ++ran;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %-2s %s  %s: %s\n", c.id.c_str(), o.pass ? "PASS" : "FAIL",
                c.title.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  if (ran == 0) {
    std::fprintf(stderr, "unknown criterion '%s'\n", only.c_str());
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
