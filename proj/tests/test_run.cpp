#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "posetenum/run.hpp"

using namespace posetenum;

namespace {

RunConfig gen(const std::string& spec) {
  RunConfig cfg;
  cfg.generator = spec;
  return cfg;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("enumerate counts") {
  std::ostringstream out, err;
  RunConfig cfg = gen("chain:3");
  cfg.output = OutputMode::Count;
  CHECK(cmd_enumerate(cfg, out, err) == kExitOk);
  CHECK(out.str() == "4\n");
  out.str("");
  cfg.generator = "antichain:10";
  cfg.kind = Kind::Antichains;
  cfg.order = Order::Gray;
  cfg.loopless = true;
  CHECK(cmd_enumerate(cfg, out, err) == kExitOk);
  CHECK(out.str() == "1024\n");
}

TEST_CASE("enumerate sets and deltas on the V poset") {
  std::ostringstream out, err;
  RunConfig cfg = gen("v");
  cfg.kind = Kind::Antichains;
  cfg.order = Order::Gray;
  CHECK(cmd_enumerate(cfg, out, err) == kExitOk);
  CHECK(lines(out.str()) == std::vector<std::string>{"0", "0 1", "2", "1", "."});

  out.str("");
  cfg.kind = Kind::Ideals;
  cfg.output = OutputMode::Deltas;
  CHECK(cmd_enumerate(cfg, out, err) == kExitOk);
  CHECK(lines(out.str()) == std::vector<std::string>{".", "+1", "+0 -1", "+1", "+2"});

  // Loopless output is the same stream.
  std::ostringstream out2;
  cfg.loopless = true;
  CHECK(cmd_enumerate(cfg, out2, err) == kExitOk);
  CHECK(out2.str() == out.str());

  // Basic order deltas replay to the basic set stream.
  std::ostringstream sets, deltas;
  RunConfig b = gen("random:9:0.3:2");
  CHECK(cmd_enumerate(b, sets, err) == kExitOk);
  b.output = OutputMode::Deltas;
  CHECK(cmd_enumerate(b, deltas, err) == kExitOk);
  CHECK(lines(sets.str()).size() == lines(deltas.str()).size());
  CHECK(lines(sets.str()).front() == lines(deltas.str()).front());
}

TEST_CASE("input errors exit with 2") {
  std::ostringstream out, err;
  RunConfig missing;
  missing.input_path = "/nonexistent/poset.txt";
  CHECK(cmd_enumerate(missing, out, err) == kExitInput);
  CHECK(err.str().find("error:") != std::string::npos);
  CHECK(cmd_enumerate(gen("cycle:4"), out, err) == kExitInput);
  RunConfig both = gen("chain:2");
  both.input_path = "x";
  CHECK(cmd_audit(both, out, err) == kExitInput);
  RunConfig neither;
  CHECK(cmd_enumerate(neither, out, err) == kExitInput);
  RunConfig loop = gen("chain:2");
  loop.loopless = true;
  CHECK(cmd_enumerate(loop, out, err) == kExitInput);
  RunConfig badmu = gen("chain:2");
  badmu.mu = 5;
  CHECK(cmd_audit(badmu, out, err) == kExitInput);

  const std::string path = "test_run_cyclic.txt";
  std::ofstream(path) << "poset 2\nrel 0 1\nrel 1 0\n";
  RunConfig cyc;
  cyc.input_path = path;
  CHECK(cmd_enumerate(cyc, out, err) == kExitInput);
  std::remove(path.c_str());
}

TEST_CASE("audit verdicts and exit codes") {
  std::ostringstream out, err;
  RunConfig cfg = gen("chain:50");
  CHECK(cmd_audit(cfg, out, err) == kExitOk);
  CHECK(out.str().find("slack=50") != std::string::npos);
  CHECK(out.str().find("required T* 9") != std::string::npos);
  CHECK(out.str().find("FAIL") == std::string::npos);

  out.str("");
  cfg.tstar = 1;
  CHECK(cmd_audit(cfg, out, err) == kExitViolation);
  CHECK(out.str().find("pyramid") != std::string::npos);
  CHECK(out.str().find("FAIL") != std::string::npos);

  std::ostringstream eout, eerr;
  RunConfig en = gen("chain:5");
  en.audit = true;
  en.tstar = 1;
  en.output = OutputMode::Count;
  CHECK(cmd_enumerate(en, eout, eerr) == kExitViolation);
  CHECK(eout.str() == "6\n");
  CHECK(eerr.str().find("FAIL") != std::string::npos);
}

TEST_CASE("push-out failures do not change the exit code") {
  std::ostringstream out, err;
  RunConfig cfg = gen("uno:6");
  PushoutParams pp = parse_pushout({"alpha=2", "beta=8"});
  pp.model = TimeModel::Charged;
  cfg.pushout = {pp};
  CHECK(cmd_audit(cfg, out, err) == kExitOk);
  CHECK(out.str().find("pushout(alpha=2,beta=8,charged)") != std::string::npos);
}

TEST_CASE("push-out parameters") {
  const auto pp = parse_pushout({"beta=4", "alpha=1.5"});
  CHECK(pp.alpha == doctest::Approx(1.5));
  CHECK(pp.beta == doctest::Approx(4));
  CHECK_THROWS_AS(parse_pushout({"alpha=2"}), InputError);
  CHECK_THROWS_AS(parse_pushout({"alpha=1", "beta=0"}), InputError);
  CHECK_THROWS_AS(parse_pushout({"alpha=2x", "beta=0"}), InputError);
  CHECK_THROWS_AS(parse_pushout({"gamma=2", "beta=0"}), InputError);
}

TEST_CASE("audit CSV and bench CSV") {
  const std::string path = "test_run_ledger.csv";
  std::ostringstream out, err;
  RunConfig cfg = gen("v");
  cfg.out_path = path;
  CHECK(cmd_audit(cfg, out, err) == kExitOk);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "node_id,parent_id,depth,n,q,t,phi,ticks,visits");
  std::remove(path.c_str());

  std::ostringstream bout;
  RunConfig b;
  b.families = {"chain", "antichain"};
  b.sizes = {8};
  b.output_cap = 100;
  CHECK(cmd_bench(b, bout, err) == kExitOk);
  const auto rows = lines(bout.str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] + "\n" == bench_csv_header());
  CHECK(rows[1].rfind("chain,8,0,9,", 0) == 0);
  CHECK(rows[2].rfind("antichain,8,28,100,", 0) == 0);
  b.families = {"tree"};
  CHECK(cmd_bench(b, bout, err) == kExitInput);
}

TEST_CASE("bench rows") {
  const auto c = PotentialConstants::ideals();
  const BenchRow r = bench_one(chain(20), Kind::Ideals, Order::Basic, false, 1000, c);
  CHECK(r.outputs == 21);
  CHECK(r.ticks_to_first > 0);
  CHECK(r.max_gap_ticks > 0);
  const BenchRow capped = bench_one(antichain(20), Kind::Ideals, Order::Gray, true, 50, c);
  CHECK(capped.outputs == 50);
  CHECK(capped.max_gap_ticks <= c.mu * c.tstar);
  CHECK(bench_spec("random", 100) == "random:100:0.100000");
}
