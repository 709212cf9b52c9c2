#include "posetenum/run.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "posetenum/meter.hpp"
#include "posetenum/stepper.hpp"

namespace posetenum {

void RunConfig::validate() const {
  if (input_path.empty() == generator.empty())
    throw InputError("give exactly one of --in and --gen");
  if (loopless && order != Order::Gray) throw InputError("--loopless needs --order gray");
  if (output_cap < 1) throw InputError("output cap must be positive");
  for (int n : sizes)
    if (n < 0) throw InputError("bench sizes must be nonnegative");
  try {
    constants().validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

PotentialConstants RunConfig::constants() const {
  PotentialConstants c = PotentialConstants::defaults(kind);
  if (tstar) c.tstar = *tstar;
  if (mu) c.mu = *mu;
  return c;
}

Poset load_input(const RunConfig& cfg) {
  try {
    if (!cfg.input_path.empty()) return load_poset_file(cfg.input_path);
    return generate(cfg.generator, cfg.seed);
  } catch (const ParseError& e) {
    throw InputError(e.what());
  } catch (const OrderError& e) {
    throw InputError(e.what());
  }
}

PushoutParams parse_pushout(const std::vector<std::string>& words) {
  PushoutParams pp;
  bool have_alpha = false, have_beta = false;
  for (const auto& w : words) {
    const auto eq = w.find('=');
    if (eq == std::string::npos) throw InputError("expected key=value, got '" + w + "'");
    const std::string key = w.substr(0, eq);
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(w.substr(eq + 1), &used);
      if (used != w.size() - eq - 1) throw InputError("bad number in '" + w + "'");
    } catch (const std::logic_error&) {
      throw InputError("bad number in '" + w + "'");
    }
    if (key == "alpha") {
      pp.alpha = value;
      have_alpha = true;
    } else if (key == "beta") {
      pp.beta = value;
      have_beta = true;
    } else {
      throw InputError("unknown push-out parameter '" + key + "'");
    }
  }
  if (!have_alpha || !have_beta) throw InputError("push-out needs alpha= and beta=");
  if (pp.alpha <= 1 || pp.beta < 0) throw InputError("push-out needs alpha > 1 and beta >= 0");
  return pp;
}

namespace {

// Resolves --out: the given stream, or a file that stays open for the call.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary);
    if (!file_) throw InputError("cannot write '" + path + "'");
    out_ = &file_;
  }
  std::ostream& get() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

std::string check_line(const CheckReport& r) {
  std::ostringstream s;
  s << std::left << std::setw(24) << r.name << (r.passed() ? "PASS" : "FAIL")
    << "  checked=" << r.checked;
  if (!r.passed()) {
    s << "  violations=" << r.violations.size() << "  nodes=";
    const std::size_t shown = std::min<std::size_t>(r.violations.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) s << (i ? "," : "") << r.violations[i].node;
    if (shown < r.violations.size()) s << ",...";
    s << "  first: " << r.violations.front().detail;
  }
  return s.str();
}

void print_audit(const AuditSummary& a, const Ledger& ledger, const std::vector<PushoutParams>& pp,
                 std::ostream& out) {
  const auto& root = ledger.nodes.front();
  out << "nodes " << ledger.nodes.size() << (ledger.complete() ? "" : " (tree truncated)")
      << ", visits " << ledger.visit_ticks.size() << ", ticks " << ledger.total_ticks << '\n';
  out << "root n=" << root.stats.n << " q=" << root.stats.q << " t=" << root.stats.t
      << " phi=" << root.phi << " ticks=" << root.ticks << " slack=" << a.root_slack << '\n';
  for (const auto& c : a.checks) {
    if (c.name == "gap" && c.checked == 0) {
      out << std::left << std::setw(24) << c.name << "SKIP  (tree truncated)\n";
      continue;
    }
    out << check_line(c) << '\n';
  }
  for (std::size_t i = 0; i < a.pushout.size(); ++i) {
    const auto& r = a.pushout[i];
    std::ostringstream name;
    name << "pushout(alpha=" << pp[i].alpha << ",beta=" << pp[i].beta
         << (pp[i].model == TimeModel::Charged ? ",charged" : "") << ")";
    CheckReport cond = r.condition;
    cond.name = name.str();
    out << check_line(cond) << '\n';
    if (r.root_slack) out << "  root slack " << *r.root_slack << '\n';
    if (r.root_ratio) out << "  root ratio " << *r.root_ratio << '\n';
    out << check_line(r.cross_check) << '\n';
  }
  if (a.required_tstar) out << "required T* " << *a.required_tstar << '\n';
}

}  // namespace

bool AuditSummary::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed(); });
}

AuditSummary run_audit(const Poset& p, const Ledger& ledger,
                       const std::vector<PushoutParams>& pushout) {
  AuditSummary a;
  a.checks.push_back(check_pyramid(ledger));
  a.checks.push_back(check_inner_bound(ledger));
  a.checks.push_back(check_pair_bound(ledger, p));
  a.checks.push_back(check_subtree(ledger));
  a.checks.push_back(check_gap(ledger));
  for (const auto& pp : pushout) a.pushout.push_back(check_pushout(ledger, pp));
  a.root_slack = pyramid_slack(ledger, ledger.nodes.front());
  try {
    a.required_tstar = required_tstar(ledger);
  } catch (const std::domain_error&) {
  }
  return a;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out_default, std::ostream& err) {
  return guarded(err, [&] {
    cfg.validate();
    const Poset p = load_input(cfg);
    Sink sink(cfg.out_path, out_default);
    std::ostream& out = sink.get();

    std::int64_t count = 0;
    std::vector<Element> current;
    auto emit_delta = [&](const Delta& d) {
      if (count == 0) {
        apply_delta(current, d);
        out << format_set(p, current) << '\n';
      } else {
        out << format_delta(p, d.plus(), d.minus()) << '\n';
      }
    };

    if (cfg.loopless) {
      auto st = make_stepper(p, cfg.kind, 0, cfg.constants());
      while (auto d = st->step()) {
        if (cfg.output == OutputMode::Sets) {
          apply_delta(current, *d);
          out << format_set(p, current) << '\n';
        } else if (cfg.output == OutputMode::Deltas) {
          emit_delta(*d);
        }
        ++count;
      }
    } else {
      const bool gray = cfg.order == Order::Gray;
      const bool track = cfg.output == OutputMode::Deltas;
      enumerate(
          p, cfg.kind, cfg.order,
          [&](Cursor& c) {
            if (cfg.output == OutputMode::Sets) {
              const auto s = c.sorted();
              out << format_set(p, s) << '\n';
            } else if (cfg.output == OutputMode::Deltas) {
              if (gray) {
                emit_delta(c.take_delta());
              } else {
                const Change ch = c.take_change();
                if (count == 0) {
                  apply_change(current, ch);
                  out << format_set(p, current) << '\n';
                } else {
                  out << format_delta(p, ch.added, ch.removed) << '\n';
                }
              }
            }
            ++count;
          },
          nullptr, track);
    }
    if (cfg.output == OutputMode::Count) out << count << '\n';
    out.flush();

    if (!cfg.audit) return kExitOk;
    const Ledger ledger = record_ledger(p, cfg.kind, cfg.order, cfg.constants(), cfg.limits);
    const AuditSummary a = run_audit(p, ledger, cfg.pushout);
    print_audit(a, ledger, cfg.pushout, err);
    return a.passed() ? kExitOk : kExitViolation;
  });
}

int cmd_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    cfg.validate();
    const Poset p = load_input(cfg);
    const Ledger ledger = record_ledger(p, cfg.kind, cfg.order, cfg.constants(), cfg.limits);
    if (!cfg.out_path.empty()) {
      Sink sink(cfg.out_path, out);
      sink.get() << ledger_csv(ledger);
    }
    const AuditSummary a = run_audit(p, ledger, cfg.pushout);
    print_audit(a, ledger, cfg.pushout, out);
    if (a.passed()) return kExitOk;
    out << "audit violations found\n";
    return kExitViolation;
  });
}

std::string bench_spec(const std::string& family, int n) {
  if (family == "chain" || family == "antichain") return family + ":" + std::to_string(n);
  if (family == "random") {
    // Ten expected edges per element: roughly half of all pairs stay incomparable.
    const double density = n > 1 ? std::min(1.0, 10.0 / n) : 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "random:%d:%.6f", n, density);
    return buf;
  }
  throw InputError("unknown bench family '" + family + "'");
}

BenchRow bench_one(const Poset& p, Kind kind, Order order, bool loopless,
                   std::int64_t output_cap, const PotentialConstants& c) {
  BenchRow row;
  const PosetStats s = compute_stats(p);
  row.n = s.n;
  row.q = s.q;
  std::int64_t prev = 0;
  auto on_output = [&](std::int64_t now, std::int64_t gap) {
    if (row.outputs == 0) row.ticks_to_first = now;
    else row.max_gap_ticks = std::max(row.max_gap_ticks, gap);
    ++row.outputs;
    prev = now;
  };
  if (loopless) {
    auto st = make_stepper(p, kind, 0, c);
    while (row.outputs < output_cap && st->step()) on_output(st->producer_ticks(), st->last_gap());
    row.total_ticks = st->producer_ticks();
  } else {
    Meter m;
    try {
      enumerate(
          p, kind, order,
          [&](Cursor& cur) {
            if (order == Order::Gray) cur.take_delta();
            on_output(m.count(), m.count() - prev);
            if (row.outputs >= output_cap) throw StopEnumeration();
          },
          &m);
    } catch (const StopEnumeration&) {
    }
    row.total_ticks = m.count();
  }
  if (row.outputs > 1)
    row.ticks_per_output =
        static_cast<double>(prev - row.ticks_to_first) / static_cast<double>(row.outputs - 1);
  return row;
}

std::string bench_csv_header() {
  return "family,n,q,outputs,total_ticks,ticks_per_output,max_gap_ticks,ticks_to_first\n";
}

std::string bench_csv_row(const BenchRow& r) {
  std::ostringstream s;
  s << r.family << ',' << r.n << ',' << r.q << ',' << r.outputs << ',' << r.total_ticks << ','
    << std::fixed << std::setprecision(3) << r.ticks_per_output << ',' << r.max_gap_ticks << ','
    << r.ticks_to_first << '\n';
  return s.str();
}

int cmd_bench(const RunConfig& cfg, std::ostream& out_default, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.loopless && cfg.order != Order::Gray) throw InputError("--loopless needs --order gray");
    if (cfg.output_cap < 1) throw InputError("output cap must be positive");
    PotentialConstants c;
    try {
      c = cfg.constants();
      c.validate();
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    std::vector<std::string> specs;
    std::vector<std::string> fams;
    for (const auto& f : cfg.families)
      for (int n : cfg.sizes) {
        specs.push_back(bench_spec(f, n));
        fams.push_back(f);
      }
    std::vector<Poset> posets;
    for (const auto& s : specs) {
      try {
        posets.push_back(generate(s, cfg.seed));
      } catch (const ParseError& e) {
        throw InputError(e.what());
      }
    }
    std::vector<BenchRow> rows(specs.size());
    const auto count = static_cast<std::int64_t>(specs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      rows[i] = bench_one(posets[i], cfg.kind, cfg.order, cfg.loopless, cfg.output_cap, c);
      rows[i].family = fams[i];
    }
    Sink sink(cfg.out_path, out_default);
    sink.get() << bench_csv_header();
    for (const auto& r : rows) sink.get() << bench_csv_row(r);
    return kExitOk;
  });
}

}  // namespace posetenum
