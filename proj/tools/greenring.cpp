#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "greenring/cli.hpp"

using namespace greenring;

int main(int argc, char** argv) {
  CLI::App app{"Tensor products of modules over the Drinfeld double H_n(1,q)"};
  app.require_subcommand(1);

  DecomposeOptions dec;
  auto* d = app.add_subcommand("decompose", "decompose a label expression");
  d->add_option("--n", dec.n, "n (order of q)")->default_val(3);
  d->add_option("--expr", dec.expr, "expression, e.g. \"V(2,0) (x) P(2,0)\"")->required();
  d->add_option("--mode", dec.mode, "rules | oracle | both")->default_val("rules");
  d->add_option("--seed", dec.seed, "oracle seed")->default_val(1);
  d->add_flag("--json", dec.json, "JSON output");
  d->add_option("--cache", dec.cache, "module cache directory (GREENRING_CACHE overrides)");

  SweepOptions sw;
  sw.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* s = app.add_subcommand("verify-sweep", "compare rules and oracle on every pair of a label family");
  s->add_option("--n", sw.n)->default_val(3);
  s->add_option("--max-m", sw.max_m, "largest |m| for strings")->default_val(2);
  s->add_option("--max-s", sw.max_s, "largest s for bands")->default_val(2);
  s->add_option("--etas", sw.etas, "comma separated band parameters")->default_val("0,1,inf");
  s->add_option("--seed", sw.seed)->default_val(1);
  s->add_option("--jobs", sw.jobs, "worker threads");
  s->add_option("--report", sw.report, "JSON-lines report path");
  s->add_option("--cache", sw.cache, "module cache directory (GREENRING_CACHE overrides)");

  int n = 3;
  std::string expr;
  bool json = false;
  auto* du = app.add_subcommand("dual", "dual of an expression");
  auto* di = app.add_subcommand("dim", "dimension of an expression");
  for (auto* c : {du, di}) {
    c->add_option("--n", n)->default_val(3);
    c->add_option("--expr", expr)->required();
    c->add_flag("--json", json);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kParse;
  }

  if (d->parsed()) return cmd_decompose(dec, std::cout, std::cerr);
  if (s->parsed()) return cmd_verify_sweep(sw, std::cout, std::cerr);
  if (du->parsed()) return cmd_dual(n, expr, json, std::cout, std::cerr);
  return cmd_dim(n, expr, json, std::cout, std::cerr);
}
