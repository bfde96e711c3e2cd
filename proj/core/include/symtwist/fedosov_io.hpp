#pragma once

#include <stdexcept>
#include <string>

#include "symtwist/fedosov.hpp"
#include "symtwist/tensor.hpp"

namespace symtwist {

// invalid or inconsistent configuration input; distinct from the logic
// errors internal invariants throw
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Connection config:
//   { "l": int, "D": int,
//     "gamma": [ { "k": int, "a": int, "b": int,
//                  "monomials": [ { "exps": [int x 2l], "num": int, "den": int } ] } ] }
// Entries are completed symmetrically in (a, b) on load; giving both orders
// with different values is an error, as is exceeding the declared degree D.
// The connection invariants themselves (lower-pair symmetry, total symmetry
// of the lowered symbols) are validated on construction and reported with
// the offending index triple.
FedosovConnection parse_connection(const std::string& json_text);
FedosovConnection load_connection(const std::string& path);

// Symmetric rank-2 tensor config (lowered entries):
//   { "l": int, "entries": [ { "i": int, "j": int, "num": int, "den": int } ] }
// completed symmetrically in (i, j); expected_l must match the file.
Tensor parse_sigma(const std::string& json_text, int expected_l);
Tensor load_sigma(const std::string& path, int expected_l);

}  // namespace symtwist
