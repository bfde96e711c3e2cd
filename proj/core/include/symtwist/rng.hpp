#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "symtwist/scalar.hpp"

namespace symtwist {

// Deterministic seeded randomness for sample generation.  Only the raw
// mt19937_64 stream is used (standard-specified output) with hand-rolled
// range reduction, so identical seeds give identical samples on every
// platform and toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform-ish integer in [lo, hi] via modulo; bias is irrelevant for
  // sampling test data and determinism is paramount
  long next_int(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // small rational or Gaussian-rational value for sample tensors
  Scalar small_scalar(bool allow_imaginary = true) {
    long re = next_int(-3, 3);
    long im = allow_imaginary ? next_int(-3, 3) : 0;
    return Scalar(mpq_class(re), mpq_class(im));
  }
  Scalar small_nonzero(bool allow_imaginary = true) {
    for (;;) {
      Scalar s = small_scalar(allow_imaginary);
      if (!s.is_zero()) return s;
    }
  }

  // stable child-stream derivation: master seed mixed with an FNV-1a label
  // hash, recorded in reports so runs are reproducible per suite
  static std::uint64_t child_seed(std::uint64_t master, std::string_view label) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : label) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    return master ^ h;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace symtwist
