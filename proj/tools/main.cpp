#include <CLI11.hpp>

#include <iostream>

#include "posetenum/run.hpp"

using namespace posetenum;

namespace {

void add_input(CLI::App* cmd, RunConfig& cfg, std::string& kind) {
  auto* in = cmd->add_option("--in", cfg.input_path, "poset file");
  auto* gen = cmd->add_option("--gen", cfg.generator,
                              "generator: chain:N, antichain:N, v, uno:L, random:N:D[:SEED]");
  in->excludes(gen);
  cmd->add_option("--kind", kind, "ideals or antichains")
      ->check(CLI::IsMember({"ideals", "antichains"}));
  cmd->add_option("--seed", cfg.seed, "seed for random generators");
}

void add_constants(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--tstar", cfg.tstar, "ticks per coin");
  cmd->add_option("--mu", cfg.mu, "coins per visit");
}

void add_order(CLI::App* cmd, std::string& order, bool& loopless) {
  cmd->add_option("--order", order, "basic or gray")->check(CLI::IsMember({"basic", "gray"}));
  cmd->add_flag("--loopless", loopless, "constant worst-case delay via the queued stepper");
}

void add_limits(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--max-depth", cfg.limits.max_depth, "deepest audited recursion level");
  cmd->add_option("--max-nodes", cfg.limits.max_nodes, "audited node budget");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate ideals and antichains of finite posets"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string kind = "ideals";
  std::string order;
  bool loopless = false;
  bool count = false;
  bool deltas = false;
  std::vector<std::string> pushout;
  std::string time_model = "measured";
  std::vector<std::string> families;
  std::vector<int> sizes;

  auto* en = app.add_subcommand("enumerate", "list every ideal or antichain");
  add_input(en, cfg, kind);
  add_order(en, order, loopless);
  add_constants(en, cfg);
  add_limits(en, cfg);
  en->add_flag("--count", count, "print only the number of sets");
  en->add_flag("--deltas", deltas, "print the first set, then one change per line");
  en->add_flag("--audit", cfg.audit, "also audit the run; violations exit with 3");
  en->add_option("--out", cfg.out_path, "write the listing to a file");

  auto* au = app.add_subcommand("audit", "check the amortization inequalities on the recursion tree");
  add_input(au, cfg, kind);
  add_order(au, order, loopless);
  add_constants(au, cfg);
  add_limits(au, cfg);
  au->add_option("--pushout", pushout, "push-out parameters, e.g. alpha=2 beta=4")
      ->expected(2, 2);
  au->add_option("--time-model", time_model, "push-out iteration time: measured or charged")
      ->check(CLI::IsMember({"measured", "charged"}));
  au->add_option("--out", cfg.out_path, "ledger CSV path");

  auto* be = app.add_subcommand("bench", "tick-delay sweep over generated posets");
  be->add_option("--kind", kind, "ideals or antichains")
      ->check(CLI::IsMember({"ideals", "antichains"}));
  add_order(be, order, loopless);
  add_constants(be, cfg);
  be->add_option("--families", families, "chain, antichain, random")->delimiter(',');
  be->add_option("--sizes", sizes, "element counts")->delimiter(',');
  be->add_option("--cap", cfg.output_cap, "outputs per run");
  be->add_option("--seed", cfg.seed, "seed for random families");
  be->add_option("--out", cfg.out_path, "CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  cfg.kind = parse_kind(kind);
  if (order.empty()) cfg.order = loopless ? Order::Gray : Order::Basic;
  else cfg.order = parse_order(order);
  cfg.loopless = loopless;
  if (count && deltas) {
    std::cerr << "error: --count and --deltas are exclusive\n";
    return kExitInput;
  }
  cfg.output = count ? OutputMode::Count : (deltas ? OutputMode::Deltas : OutputMode::Sets);
  if (!families.empty()) cfg.families = families;
  if (!sizes.empty()) cfg.sizes = sizes;

  try {
    if (!pushout.empty()) {
      PushoutParams pp = parse_pushout(pushout);
      pp.model = time_model == "charged" ? TimeModel::Charged : TimeModel::Measured;
      cfg.pushout.push_back(pp);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }

  if (en->parsed()) return cmd_enumerate(cfg, std::cout, std::cerr);
  if (au->parsed()) return cmd_audit(cfg, std::cout, std::cerr);
  return cmd_bench(cfg, std::cout, std::cerr);
}
