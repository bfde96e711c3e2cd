#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "cli_lib.hpp"

using symtwist::cli::RunConfig;
using symtwist::cli::RunResult;

int main(int argc, char** argv) {
  CLI::App app{"exact checker for symplectic spinor operator calculus"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("SSL_THREADS")) {
    char* end = nullptr;
    long t = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && t >= 1 && t <= 64) cfg.threads = static_cast<int>(t);
  }
  std::string out;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--l", cfg.l, "half rank of the symplectic space");
    sub->add_option("--max-deg", cfg.max_deg, "ambient polynomial degree cap");
    sub->add_option("--buffer", cfg.buffer, "guard band kept free below the cap");
    sub->add_option("--seed", cfg.seed, "master seed for sampled data");
    sub->add_option("--out", out, "write the report to this file instead of stdout");
    sub->add_flag("--timings", cfg.timings, "add wall clock fields to records");
  };

  CLI::App* dec = app.add_subcommand("decompose", "block dimension table and adjacency graph");
  add_common(dec);
  CLI::App* ver = app.add_subcommand("verify", "operator identity suites");
  add_common(ver);
  ver->add_option("--suite", cfg.suite,
                  "clifford|squares|weights|mixed|equivariance|projections|all");
  ver->add_option("--sigma", cfg.sigma, "symmetric tensor source: zero|random|FILE");
  CLI::App* cpx = app.add_subcommand("complex", "twistor sequence vanishing checks");
  add_common(cpx);
  cpx->add_option("--sigma", cfg.sigma, "symmetric tensor source: zero|random|FILE");
  CLI::App* geo = app.add_subcommand("geometry", "checks for one polynomial connection");
  add_common(geo);
  geo->add_option("--connection", cfg.connection, "connection config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  RunResult res;
  if (dec->parsed()) res = symtwist::cli::run_decompose(cfg);
  else if (ver->parsed()) res = symtwist::cli::run_verify(cfg);
  else if (cpx->parsed()) res = symtwist::cli::run_complex(cfg);
  else res = symtwist::cli::run_geometry(cfg);

  if (out.empty()) {
    std::cout << res.report;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    file << res.report;
  }
  return res.exit_code;
}
