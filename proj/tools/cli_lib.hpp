#pragma once

#include <cstdint>
#include <string>

namespace symtwist::cli {

// Shared run parameters.  max_deg is the ambient polynomial degree cap N,
// buffer the guard band B kept free below it; sectors are probed only at
// weights q with q + min(degree, l) <= N - B so no operator in a check can
// touch the cap.  sigma selects the symmetric tensor source: "zero",
// "random", or a config file path.
struct RunConfig {
  int l = 2;
  int max_deg = 10;
  int buffer = 3;
  std::uint64_t seed = 1;
  std::string suite = "all";
  std::string sigma = "random";
  std::string connection;
  bool timings = false;
  int threads = 1;
};

// exit_code: 0 all checks pass (findings and vacuous records included),
// 1 at least one FAIL record, 2 invalid configuration
struct RunResult {
  int exit_code = 0;
  std::string report;
};

// block dimension table over the guard-band grid plus the block adjacency
// graph (nodes (i, j), arrows to (i + 1, k) for k in {j-1, j, j+1})
RunResult run_decompose(const RunConfig& cfg);

// identity suites: clifford | squares | weights | mixed | equivariance |
// projections | all
RunResult run_verify(const RunConfig& cfg);

// twistor sequence: the projected curvature action vanishes on top blocks
// at every degree except l - 1, where the obstruction is reported as a
// FINDING with a witness
RunResult run_complex(const RunConfig& cfg);

// checks for one polynomial-coefficient symplectic connection: symbol
// validation, curvature symmetries, trace symmetry, the second-derivative
// identity, the trace/trace-free split, block containment of the covariant
// derivative, the twistor composition, and the Dirac factorization
RunResult run_geometry(const RunConfig& cfg);

}  // namespace symtwist::cli
