#include "symtwist/fedosov_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace symtwist {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ConfigError(std::string(what) + ": malformed JSON");
  return j;
}

long int_field(const json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw ConfigError(std::string(what) + ": missing integer field \"" + key + "\"");
  return j.at(key).get<long>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Scalar rational_fields(const json& j, const char* what) {
  long num = int_field(j, "num", what);
  long den = int_field(j, "den", what);
  if (den == 0) throw ConfigError(std::string(what) + ": zero denominator");
  return Scalar::rational(num, den);
}

}  // namespace

FedosovConnection parse_connection(const std::string& json_text) {
  const char* what = "connection config";
  json j = parse_json(json_text, what);
  long l = int_field(j, "l", what);
  if (l < 1) throw ConfigError("connection config: l must be positive");
  long degree_cap = int_field(j, "D", what);
  if (degree_cap < 0) throw ConfigError("connection config: D must be nonnegative");
  const int dim = static_cast<int>(2 * l);

  SymplecticSpace space(static_cast<int>(l));
  TensorT<BasePoly> gamma(dim, 3);
  std::set<std::vector<int>> given;

  if (!j.contains("gamma") || !j.at("gamma").is_array())
    throw ConfigError("connection config: missing \"gamma\" array");
  for (const json& entry : j.at("gamma")) {
    int k = static_cast<int>(int_field(entry, "k", what));
    int a = static_cast<int>(int_field(entry, "a", what));
    int b = static_cast<int>(int_field(entry, "b", what));
    for (int idx : {k, a, b})
      if (idx < 1 || idx > dim) {
        std::ostringstream os;
        os << "connection config: index out of range at (" << k << ", " << a << ", " << b << ")";
        throw ConfigError(os.str());
      }
    if (!given.insert({k, a, b}).second) {
      std::ostringstream os;
      os << "connection config: duplicate entry (" << k << ", " << a << ", " << b << ")";
      throw ConfigError(os.str());
    }
    if (!entry.contains("monomials") || !entry.at("monomials").is_array())
      throw ConfigError("connection config: entry missing \"monomials\" array");
    BasePoly poly;
    for (const json& mono : entry.at("monomials")) {
      if (!mono.contains("exps") || !mono.at("exps").is_array() ||
          static_cast<int>(mono.at("exps").size()) != dim)
        throw ConfigError("connection config: \"exps\" must list all 2l exponents");
      Exponents e;
      for (const json& x : mono.at("exps")) {
        if (!x.is_number_integer() || x.get<long>() < 0)
          throw ConfigError("connection config: exponents must be nonnegative integers");
        e.push_back(static_cast<int>(x.get<long>()));
      }
      if (total_degree(e) > degree_cap)
        throw ConfigError("connection config: monomial exceeds the declared degree D");
      poly.add_term(e, rational_fields(mono, what));
    }
    gamma.at({k, a, b}) = poly;
  }

  for (const std::vector<int>& kab : given) {
    std::vector<int> swapped = {kab[0], kab[2], kab[1]};
    if (kab[1] == kab[2]) continue;
    if (given.count(swapped)) {
      if (!(gamma.at(kab) == gamma.at(swapped))) {
        std::ostringstream os;
        os << "connection config: conflicting entries for (" << kab[0] << ", " << kab[1] << ", "
           << kab[2] << ") and its mirror";
        throw ConfigError(os.str());
      }
    } else {
      gamma.at(swapped) = gamma.at(kab);
    }
  }

  try {
    return FedosovConnection(space, std::move(gamma));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

FedosovConnection load_connection(const std::string& path) {
  return parse_connection(read_file(path));
}

Tensor parse_sigma(const std::string& json_text, int expected_l) {
  const char* what = "sigma config";
  json j = parse_json(json_text, what);
  long l = int_field(j, "l", what);
  if (l != expected_l) throw ConfigError("sigma config: l does not match the run configuration");
  const int dim = static_cast<int>(2 * l);
  Tensor sigma(dim, 2);
  std::set<std::pair<int, int>> given;
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw ConfigError("sigma config: missing \"entries\" array");
  for (const json& entry : j.at("entries")) {
    int i = static_cast<int>(int_field(entry, "i", what));
    int jj = static_cast<int>(int_field(entry, "j", what));
    if (i < 1 || i > dim || jj < 1 || jj > dim)
      throw ConfigError("sigma config: index out of range");
    if (!given.insert({i, jj}).second) throw ConfigError("sigma config: duplicate entry");
    sigma.at({i, jj}) = rational_fields(entry, what);
  }
  for (const auto& [i, jj] : given) {
    if (i == jj) continue;
    if (given.count({jj, i})) {
      if (!(sigma.at({i, jj}) == sigma.at({jj, i})))
        throw ConfigError("sigma config: conflicting symmetric entries");
    } else {
      sigma.at({jj, i}) = sigma.at({i, jj});
    }
  }
  return sigma;
}

Tensor load_sigma(const std::string& path, int expected_l) {
  return parse_sigma(read_file(path), expected_l);
}

}  // namespace symtwist
