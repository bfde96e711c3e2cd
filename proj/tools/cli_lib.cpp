#include "cli_lib.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symtwist/curvature.hpp"
#include "symtwist/decomposition.hpp"
#include "symtwist/fedosov.hpp"
#include "symtwist/fedosov_io.hpp"
#include "symtwist/operators.hpp"
#include "symtwist/poly_spinor.hpp"
#include "symtwist/rng.hpp"
#include "symtwist/scalar.hpp"
#include "symtwist/sector_basis.hpp"
#include "symtwist/sp_element.hpp"
#include "symtwist/spinor_form.hpp"
#include "symtwist/symplectic.hpp"
#include "symtwist/tensor.hpp"

namespace symtwist::cli {
namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

void validate(const RunConfig& cfg) {
  if (cfg.l < 2) throw ConfigError("l must be at least 2");
  if (cfg.buffer < 1) throw ConfigError("buffer must be at least 1");
  if (cfg.max_deg < cfg.buffer + 4) throw ConfigError("max-deg must be at least buffer + 4");
  if (cfg.threads < 1) throw ConfigError("threads must be at least 1");
}

ordered_json config_echo(const RunConfig& cfg) {
  ordered_json j;
  j["l"] = cfg.l;
  j["max_deg"] = cfg.max_deg;
  j["buffer"] = cfg.buffer;
  j["seed"] = cfg.seed;
  j["suite"] = cfg.suite;
  j["sigma"] = cfg.sigma;
  j["connection"] = cfg.connection;
  j["threads"] = cfg.threads;
  return j;
}

ordered_json record(const std::string& name, const std::string& anchor) {
  ordered_json j;
  j["name"] = name;
  j["anchor"] = anchor;
  j["status"] = "PASS";
  return j;
}

void fail(ordered_json& rec, ordered_json witness) {
  if (rec["status"] != "FAIL") {
    rec["status"] = "FAIL";
    rec["witness"] = std::move(witness);
  }
}

// per-record wall clock, emitted only on request so default reports stay
// byte-identical across machines
class RecordTimer {
 public:
  explicit RecordTimer(bool on) : on_(on), t0_(Clock::now()) {}
  void stamp(ordered_json& rec) {
    if (on_) {
      rec["wall_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0_).count();
    }
    t0_ = Clock::now();
  }

 private:
  bool on_;
  Clock::time_point t0_;
};

RunResult finish(const RunConfig& cfg, const std::string& command,
                 const std::vector<ordered_json>& records,
                 std::map<std::string, ordered_json> extras = {}) {
  int pass = 0, failed = 0, vacuous = 0, finding = 0;
  for (const ordered_json& r : records) {
    const std::string s = r.at("status");
    if (s == "PASS") ++pass;
    else if (s == "FAIL") ++failed;
    else if (s == "VACUOUS") ++vacuous;
    else ++finding;
  }
  ordered_json rep;
  rep["tool"] = "symtwist";
  rep["version"] = "0.1.0";
  rep["command"] = command;
  rep["config"] = config_echo(cfg);
  rep["records"] = records;
  for (auto& [key, value] : extras) rep[key] = std::move(value);
  ordered_json summary;
  summary["pass"] = pass;
  summary["fail"] = failed;
  summary["vacuous"] = vacuous;
  summary["finding"] = finding;
  summary["status"] = failed ? "FAIL" : "PASS";
  rep["summary"] = summary;
  return RunResult{failed ? 1 : 0, rep.dump(2) + "\n"};
}

template <class Fn>
RunResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    ordered_json err;
    err["error"] = e.what();
    return RunResult{2, err.dump(2) + "\n"};
  }
}

int qmax_at(const RunConfig& cfg, int degree) {
  return cfg.max_deg - cfg.buffer - std::min(degree, cfg.l);
}

struct SigmaSamples {
  std::vector<Tensor> tensors;
  bool vacuous = false;
};

SigmaSamples resolve_sigma(const RunConfig& cfg, const SymplecticSpace& V, int count) {
  SigmaSamples out;
  if (cfg.sigma == "zero") {
    out.tensors.emplace_back(V.dim(), 2);
    out.vacuous = true;
  } else if (cfg.sigma == "random") {
    Rng rng(Rng::child_seed(cfg.seed, "sigma"));
    for (int s = 0; s < count; ++s) out.tensors.push_back(random_symmetric(V, rng));
  } else {
    out.tensors.push_back(load_sigma(cfg.sigma, V.l()));
  }
  return out;
}

SpinorForm random_form(const SymplecticSpace& V, Rng& rng, int cap, int terms = 4) {
  SpinorForm out(V.l(), cap);
  for (int t = 0; t < terms; ++t) {
    FormIndex f;
    for (int k = 1; k <= V.dim(); ++k)
      if (rng.next_int(0, 2) == 0) f.push_back(k);
    Exponents e(V.l(), 0);
    int budget = static_cast<int>(rng.next_int(0, cap));
    for (int d = 0; d < budget; ++d) ++e[rng.next_int(0, V.l() - 1)];
    out.add_term(f, e, rng.small_nonzero());
  }
  return out;
}

ordered_json sector_tag(int degree, int weight) {
  ordered_json j;
  j["degree"] = degree;
  j["weight"] = weight;
  return j;
}

struct SuiteCtx {
  const SymplecticSpace& V;
  const RunConfig& cfg;
  const SigmaSamples& sig;
};

std::vector<ordered_json> suite_clifford(const SuiteCtx& ctx) {
  const SymplecticSpace& V = ctx.V;
  RecordTimer timer(ctx.cfg.timings);
  ordered_json rec =
      record("clifford_commutation", "v.(w.s) - w.(v.s) = -i omega(v, w) s on every monomial");
  const int top = ctx.cfg.max_deg - 2;
  int monomials = 0;
  bool ok = true;
  for (int d = 0; d <= top && ok; ++d) {
    for (const Exponents& e : monomials_of_degree(V.l(), d)) {
      ++monomials;
      PolySpinor s = PolySpinor::monomial(V.l(), top, e);
      for (int v = 1; v <= V.dim() && ok; ++v)
        for (int w = 1; w <= V.dim() && ok; ++w) {
          PolySpinor lhs =
              clifford_mul(v, clifford_mul(w, s)) - clifford_mul(w, clifford_mul(v, s));
          if (!(lhs == s.scaled(-Scalar::i() * V.omega(v, w)))) {
            ordered_json wit;
            wit["v"] = v;
            wit["w"] = w;
            wit["monomial"] = e;
            fail(rec, wit);
            ok = false;
          }
        }
      if (!ok) break;
    }
  }
  rec["monomials"] = monomials;
  rec["pairs"] = V.dim() * V.dim();
  timer.stamp(rec);
  return {rec};
}

std::vector<ordered_json> suite_squares(const SuiteCtx& ctx) {
  const SymplecticSpace& V = ctx.V;
  RecordTimer timer(ctx.cfg.timings);
  ordered_json rx =
      record("x_square_closed_form", "X X = -(i/2) omega_{jk} eps^j wedge eps^k wedge (.)");
  ordered_json ry =
      record("y_square_closed_form", "Y Y = -(i/2) omega^{jk} iota_j iota_k (.)");
  int units = 0;
  for (int i = 0; i <= V.dim(); ++i)
    for (int q = 0; q <= qmax_at(ctx.cfg, i); ++q) {
      SectorBasis basis(V, i, q, sector_min_cap(V, i, q));
      for (int k = 0; k < basis.size(); ++k) {
        SpinorForm u = basis.unit(k);
        ++units;
        if (!(apply_x(V, apply_x(V, u)) == apply_x_squared(V, u))) {
          ordered_json wit = sector_tag(i, q);
          wit["unit"] = k;
          fail(rx, wit);
        }
        if (!(apply_y(V, apply_y(V, u)) == apply_y_squared(V, u))) {
          ordered_json wit = sector_tag(i, q);
          wit["unit"] = k;
          fail(ry, wit);
        }
      }
    }
  rx["units"] = units;
  timer.stamp(rx);
  ry["units"] = units;
  timer.stamp(ry);
  return {rx, ry};
}

std::vector<ordered_json> suite_weights(const SuiteCtx& ctx) {
  const SymplecticSpace& V = ctx.V;
  RecordTimer timer(ctx.cfg.timings);
  ordered_json rp = record("xy_weight_preservation",
                           "X raises and Y lowers the form degree, both keep the weight");
  ordered_json rs = record("sigma_theta_weight_shifts",
                           "Sigma and Theta shift the weight by -2, 0 or +2 only");
  int units = 0;
  for (int i = 0; i <= V.dim(); ++i)
    for (int q = 0; q <= qmax_at(ctx.cfg, i); ++q) {
      SectorBasis basis(V, i, q, sector_min_cap(V, i, q));
      for (int k = 0; k < basis.size(); ++k) {
        SpinorForm u = basis.unit(k);
        ++units;
        for (const auto& [sector, part] : apply_x(V, u).sector_split()) {
          (void)part;
          if (sector != std::pair<int, int>{i + 1, q}) {
            ordered_json wit = sector_tag(i, q);
            wit["unit"] = k;
            wit["image"] = ordered_json::array({sector.first, sector.second});
            fail(rp, wit);
          }
        }
        for (const auto& [sector, part] : apply_y(V, u).sector_split()) {
          (void)part;
          if (sector != std::pair<int, int>{i - 1, q}) {
            ordered_json wit = sector_tag(i, q);
            wit["unit"] = k;
            wit["image"] = ordered_json::array({sector.first, sector.second});
            fail(rp, wit);
          }
        }
        for (std::size_t s = 0; s < ctx.sig.tensors.size(); ++s) {
          for (const auto& [sector, part] : apply_sigma(V, ctx.sig.tensors[s], u).sector_split()) {
            (void)part;
            if (sector.first != i + 1 || std::abs(sector.second - q) > 2 ||
                (sector.second - q) % 2 != 0) {
              ordered_json wit = sector_tag(i, q);
              wit["unit"] = k;
              wit["sample"] = s;
              wit["image"] = ordered_json::array({sector.first, sector.second});
              fail(rs, wit);
            }
          }
          for (const auto& [sector, part] : apply_theta(V, ctx.sig.tensors[s], u).sector_split()) {
            (void)part;
            if (sector.first != i || std::abs(sector.second - q) > 2 ||
                (sector.second - q) % 2 != 0) {
              ordered_json wit = sector_tag(i, q);
              wit["unit"] = k;
              wit["sample"] = s;
              wit["image"] = ordered_json::array({sector.first, sector.second});
              fail(rs, wit);
            }
          }
        }
      }
    }
  rp["units"] = units;
  timer.stamp(rp);
  rs["units"] = units;
  rs["samples"] = ctx.sig.tensors.size();
  if (ctx.sig.vacuous && rs["status"] == "PASS") rs["status"] = "VACUOUS";
  timer.stamp(rs);
  return {rp, rs};
}

std::vector<ordered_json> suite_mixed(const SuiteCtx& ctx) {
  const SymplecticSpace& V = ctx.V;
  RecordTimer timer(ctx.cfg.timings);
  ordered_json recs[4] = {
      record("sigma_anticommutes_x", "Sigma X + X Sigma = 0"),
      record("sigma_y_braid", "[Sigma Y + Y Sigma, Y Y] = 0"),
      record("x_theta_commutator", "X Theta - Theta X = 2i Sigma"),
      record("theta_commutes_y_square", "Theta Y Y - Y Y Theta = 0"),
  };
  Rng rng(Rng::child_seed(ctx.cfg.seed, "mixed"));
  const int cap = std::max(2, ctx.cfg.max_deg - ctx.cfg.buffer - 4);
  const int vectors = 30;
  for (int t = 0; t < vectors; ++t) {
    SpinorForm phi = random_form(V, rng, cap);
    for (std::size_t s = 0; s < ctx.sig.tensors.size(); ++s) {
      const Tensor& sg = ctx.sig.tensors[s];
      auto Sg = [&](const SpinorForm& f) { return apply_sigma(V, sg, f); };
      auto Th = [&](const SpinorForm& f) { return apply_theta(V, sg, f); };
      auto X = [&](const SpinorForm& f) { return apply_x(V, f); };
      auto Y = [&](const SpinorForm& f) { return apply_y(V, f); };
      auto Y2 = [&](const SpinorForm& f) { return apply_y_squared(V, f); };
      ordered_json wit;
      wit["vector"] = t;
      wit["sample"] = s;
      if (!(Sg(X(phi)) + X(Sg(phi))).is_zero()) fail(recs[0], wit);
      SpinorForm braid = Sg(Y(phi)) + Y(Sg(phi));
      if (!(Sg(Y(Y2(phi))) + Y(Sg(Y2(phi))) - Y2(braid)).is_zero()) fail(recs[1], wit);
      if (!(X(Th(phi)) - Th(X(phi)) == Sg(phi).scaled(Scalar(2) * Scalar::i()))) fail(recs[2], wit);
      if (!(Th(Y2(phi)) == Y2(Th(phi)))) fail(recs[3], wit);
    }
  }
  std::vector<ordered_json> out;
  for (ordered_json& r : recs) {
    r["vectors"] = vectors;
    r["samples"] = ctx.sig.tensors.size();
    if (ctx.sig.vacuous && r["status"] == "PASS") r["status"] = "VACUOUS";
    timer.stamp(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ordered_json> suite_equivariance(const SuiteCtx& ctx) {
  const SymplecticSpace& V = ctx.V;
  RecordTimer timer(ctx.cfg.timings);
  ordered_json rx = record("sp_action_commutes_x", "rho(A) X - X rho(A) = 0");
  ordered_json ry = record("sp_action_commutes_y", "rho(A) Y - Y rho(A) = 0");
  Rng rng(Rng::child_seed(ctx.cfg.seed, "equivariance"));
  const int cap = std::max(2, ctx.cfg.max_deg - ctx.cfg.buffer - 4);
  const int elements = 10, forms = 3;
  for (int a = 0; a < elements; ++a) {
    SpElement A = random_sp(V, rng);
    for (int t = 0; t < forms; ++t) {
      SpinorForm phi = random_form(V, rng, cap);
      ordered_json wit;
      wit["element"] = a;
      wit["vector"] = t;
      if (!(apply_rho(V, A, apply_x(V, phi)) == apply_x(V, apply_rho(V, A, phi)))) fail(rx, wit);
      if (!(apply_rho(V, A, apply_y(V, phi)) == apply_y(V, apply_rho(V, A, phi)))) fail(ry, wit);
    }
  }
  rx["elements"] = elements;
  timer.stamp(rx);
  ry["elements"] = elements;
  timer.stamp(ry);
  return {rx, ry};
}

std::vector<ordered_json> suite_projections(const SuiteCtx& ctx) {
  const SymplecticSpace& V = ctx.V;
  RecordTimer timer(ctx.cfg.timings);
  ordered_json rs = record("sigma_block_adjacency",
                           "Sigma maps the block (i, j) into blocks j-1, j, j+1 one degree up");
  ordered_json rt = record("theta_block_adjacency",
                           "Theta maps the block (i, j) into blocks j-1, j, j+1 at the same degree");
  DecompositionEngine engine(V);
  const std::size_t samples = std::min<std::size_t>(2, ctx.sig.tensors.size());
  int sections = 0;
  for (int i = 0; i <= V.dim(); ++i)
    for (int j = 0; j <= xi_top(ctx.cfg.l, i); ++j)
      for (int q = 0; q <= 1; ++q) {
        const SectorDecomposition& dec = engine.sector(i, q);
        for (int k = 0; k < std::min(2, dec.block_dim(j)); ++k) {
          SpinorForm u = dec.block_element(j, k);
          ++sections;
          for (std::size_t s = 0; s < samples; ++s) {
            SpinorForm si = apply_sigma(V, ctx.sig.tensors[s], u);
            SpinorForm th = apply_theta(V, ctx.sig.tensors[s], u);
            for (int b = 0; b <= xi_top(ctx.cfg.l, i + 1); ++b) {
              if (std::abs(b - j) <= 1) continue;
              if (!engine.project(si, i + 1, b).is_zero()) {
                ordered_json wit = sector_tag(i, q);
                wit["block"] = j;
                wit["image_block"] = b;
                wit["sample"] = s;
                fail(rs, wit);
              }
            }
            for (int b = 0; b <= xi_top(ctx.cfg.l, i); ++b) {
              if (std::abs(b - j) <= 1) continue;
              if (!engine.project(th, i, b).is_zero()) {
                ordered_json wit = sector_tag(i, q);
                wit["block"] = j;
                wit["image_block"] = b;
                wit["sample"] = s;
                fail(rt, wit);
              }
            }
          }
        }
      }
  rs["sections"] = sections;
  rs["samples"] = samples;
  if (ctx.sig.vacuous && rs["status"] == "PASS") rs["status"] = "VACUOUS";
  timer.stamp(rs);
  rt["sections"] = sections;
  rt["samples"] = samples;
  if (ctx.sig.vacuous && rt["status"] == "PASS") rt["status"] = "VACUOUS";
  timer.stamp(rt);
  return {rs, rt};
}

using SuiteFn = std::vector<ordered_json> (*)(const SuiteCtx&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"clifford", suite_clifford},     {"squares", suite_squares},
      {"weights", suite_weights},       {"mixed", suite_mixed},
      {"equivariance", suite_equivariance}, {"projections", suite_projections},
  };
  return table;
}

}  // namespace

RunResult run_decompose(const RunConfig& cfg) {
  return guarded([&] {
    validate(cfg);
    SymplecticSpace V(cfg.l);
    DecompositionEngine engine(V);
    RecordTimer timer(cfg.timings);
    ordered_json table = ordered_json::array();
    int sectors = 0;
    for (int i = 0; i <= V.dim(); ++i)
      for (int q = 0; q <= qmax_at(cfg, i); ++q) {
        const SectorDecomposition& dec = engine.sector(i, q);
        ordered_json dims = ordered_json::array();
        int acc = 0;
        for (int j = 0; j <= dec.top_block(); ++j) {
          dims.push_back(dec.block_dim(j));
          acc += dec.block_dim(j);
        }
        ordered_json row = sector_tag(i, q);
        row["cap"] = dec.cap();
        row["blocks"] = dims;
        row["total"] = dec.total_dim();
        table.push_back(row);
        if (acc != dec.total_dim()) throw std::logic_error("decompose: block accounting broke");
        ++sectors;
      }
    ordered_json acc = record(
        "block_accounting",
        "every probed (degree, weight) sector splits exactly into its chain of blocks");
    acc["sectors"] = sectors;
    timer.stamp(acc);

    ordered_json nodes = ordered_json::array();
    ordered_json columns = ordered_json::array();
    ordered_json arrows = ordered_json::array();
    for (int i = 0; i <= V.dim(); ++i) {
      columns.push_back(xi_top(cfg.l, i) + 1);
      for (int j = 0; j <= xi_top(cfg.l, i); ++j) {
        nodes.push_back(ordered_json::array({i, j}));
        if (i == V.dim()) continue;
        for (int k = j - 1; k <= j + 1; ++k)
          if (xi_contains(cfg.l, i + 1, k)) {
            ordered_json arrow;
            arrow["from"] = ordered_json::array({i, j});
            arrow["to"] = ordered_json::array({i + 1, k});
            arrows.push_back(arrow);
          }
      }
    }
    ordered_json graph = record(
        "block_graph", "consecutive degrees connect only between adjacent block indices");
    graph["nodes"] = nodes.size();
    graph["arrows"] = arrows.size();
    timer.stamp(graph);

    ordered_json adjacency;
    adjacency["nodes"] = nodes;
    adjacency["columns"] = columns;
    adjacency["arrows"] = arrows;
    std::map<std::string, ordered_json> extras;
    extras["adjacency"] = adjacency;
    extras["table"] = table;
    return finish(cfg, "decompose", {acc, graph}, std::move(extras));
  });
}

RunResult run_verify(const RunConfig& cfg) {
  return guarded([&] {
    validate(cfg);
    std::vector<std::pair<std::string, SuiteFn>> chosen;
    for (const auto& entry : suite_table())
      if (cfg.suite == "all" || cfg.suite == entry.first) chosen.push_back(entry);
    if (chosen.empty()) throw ConfigError("unknown suite: " + cfg.suite);
    SymplecticSpace V(cfg.l);
    SigmaSamples sig = resolve_sigma(cfg, V, 5);
    SuiteCtx ctx{V, cfg, sig};

    std::vector<std::vector<ordered_json>> results(chosen.size());
    if (cfg.threads > 1 && chosen.size() > 1) {
      for (std::size_t base = 0; base < chosen.size();
           base += static_cast<std::size_t>(cfg.threads)) {
        std::vector<std::future<std::vector<ordered_json>>> wave;
        for (std::size_t s = base;
             s < std::min(chosen.size(), base + static_cast<std::size_t>(cfg.threads)); ++s)
          wave.push_back(std::async(std::launch::async,
                                    [&, s] { return chosen[s].second(ctx); }));
        for (std::size_t s = 0; s < wave.size(); ++s) results[base + s] = wave[s].get();
      }
    } else {
      for (std::size_t s = 0; s < chosen.size(); ++s) results[s] = chosen[s].second(ctx);
    }
    std::vector<ordered_json> records;
    for (std::vector<ordered_json>& part : results)
      for (ordered_json& r : part) records.push_back(std::move(r));
    return finish(cfg, "verify", records);
  });
}

RunResult run_complex(const RunConfig& cfg) {
  return guarded([&] {
    validate(cfg);
    SymplecticSpace V(cfg.l);
    SigmaSamples sig = resolve_sigma(cfg, V, 5);
    DecompositionEngine engine(V);
    RecordTimer timer(cfg.timings);
    std::vector<ordered_json> records;

    std::vector<int> legs;
    for (int i = 0; i <= cfg.l - 2; ++i) legs.push_back(i);
    for (int i = cfg.l; i <= 2 * cfg.l - 2; ++i) legs.push_back(i);

    for (int i : legs) {
      ordered_json rec =
          record("twistor_vanishing_" + std::to_string(i),
                 "the projected trace curvature action kills the top block at this degree");
      rec["degree"] = i;
      rec["samples"] = sig.tensors.size();
      int units = 0;
      for (int q = 0; q <= 1; ++q) {
        const SectorDecomposition& dec = engine.sector(i, q);
        const int top = dec.top_block();
        for (int k = 0; k < dec.block_dim(top); ++k) {
          SpinorForm phi = dec.block_element(top, k);
          ++units;
          for (std::size_t s = 0; s < sig.tensors.size(); ++s) {
            SpinorForm image = ricci_twistor_action(V, sig.tensors[s], phi);
            if (!engine.project(image, i + 2, xi_top(cfg.l, i + 2)).is_zero()) {
              ordered_json wit = sector_tag(i, q);
              wit["unit"] = k;
              wit["sample"] = s;
              fail(rec, wit);
            }
          }
        }
      }
      rec["units"] = units;
      if (sig.vacuous && rec["status"] == "PASS") rec["status"] = "VACUOUS";
      timer.stamp(rec);
      records.push_back(std::move(rec));
    }

    {
      const int i = cfg.l - 1;
      ordered_json rec = record(
          "middle_degree_gap",
          "at the middle degree the projected trace curvature action does not vanish");
      rec["degree"] = i;
      bool nonzero = false;
      ordered_json wit;
      ordered_json per_sample = ordered_json::array();
      for (std::size_t s = 0; s < sig.tensors.size(); ++s) {
        bool sample_nonzero = false;
        for (int q = 0; q <= 1; ++q) {
          const SectorDecomposition& dec = engine.sector(i, q);
          const int top = dec.top_block();
          for (int k = 0; k < dec.block_dim(top); ++k) {
            SpinorForm phi = dec.block_element(top, k);
            SpinorForm image = ricci_twistor_action(V, sig.tensors[s], phi);
            SpinorForm obstruction = engine.project(image, i + 2, xi_top(cfg.l, i + 2));
            if (!obstruction.is_zero()) {
              sample_nonzero = true;
              if (!nonzero) {
                nonzero = true;
                wit = sector_tag(i, q);
                wit["unit"] = k;
                wit["sample"] = s;
                wit["image_terms"] = obstruction.terms().size();
              }
            }
          }
        }
        per_sample.push_back(sample_nonzero);
      }
      if (sig.vacuous) {
        rec["status"] = "VACUOUS";
      } else {
        rec["status"] = "FINDING";
        rec["nonzero"] = nonzero;
        rec["nonzero_samples"] = per_sample;
        if (nonzero) rec["witness"] = wit;
      }
      timer.stamp(rec);
      records.push_back(std::move(rec));
    }
    return finish(cfg, "complex", records);
  });
}

namespace {

FieldForm random_zero_form_field(const SymplecticSpace& V, Rng& rng, int cap) {
  FieldForm out(V.l(), cap);
  for (int t = 0; t < 2; ++t) {
    Exponents base(V.dim(), 0);
    int budget = static_cast<int>(rng.next_int(0, 2));
    for (int d = 0; d < budget; ++d) ++base[rng.next_int(0, V.dim() - 1)];
    PolySpinor s(V.l(), cap);
    for (int m = 0; m < 3; ++m) {
      Exponents e(V.l(), 0);
      int deg = static_cast<int>(rng.next_int(0, cap));
      for (int d = 0; d < deg; ++d) ++e[rng.next_int(0, V.l() - 1)];
      s.add_term(e, rng.small_scalar());
    }
    out.add_term(base, SpinorForm::from_poly({}, s));
  }
  return out;
}

FieldForm random_one_form_field(const SymplecticSpace& V, Rng& rng, int cap) {
  FieldForm out(V.l(), cap);
  Exponents base(V.dim(), 0);
  ++base[rng.next_int(0, V.dim() - 1)];
  SpinorForm value(V.l(), cap);
  for (int a = 1; a <= V.dim(); ++a) {
    Exponents e(V.l(), 0);
    int deg = static_cast<int>(rng.next_int(0, cap));
    for (int d = 0; d < deg; ++d) ++e[rng.next_int(0, V.l() - 1)];
    value.add_term({a}, e, rng.small_scalar());
  }
  out.add_term(Exponents(V.dim(), 0), value);
  out.add_term(base, value.scaled(rng.small_nonzero()));
  return out;
}

FieldForm block_section(DecompositionEngine& engine, Rng& rng, int i, int q, int j,
                        const Exponents& base) {
  const SectorDecomposition& dec = engine.sector(i, q);
  SpinorForm value(engine.space().l(), dec.cap());
  for (int k = 0; k < dec.block_dim(j); ++k)
    value += dec.block_element(j, k).scaled(rng.small_scalar());
  return FieldForm::monomial(base, value);
}

FieldForm apply_y_field(const SymplecticSpace& V, const FieldForm& psi) {
  FieldForm out(psi.l(), psi.cap() + 1);
  for (const auto& [base, value] : psi.terms()) out.add_term(base, apply_y(V, value));
  return out;
}

}  // namespace

RunResult run_geometry(const RunConfig& cfg) {
  return guarded([&] {
    validate(cfg);
    if (cfg.connection.empty()) throw ConfigError("geometry requires --connection");
    FedosovConnection conn = load_connection(cfg.connection);
    if (conn.l() != cfg.l)
      throw ConfigError("connection file has l=" + std::to_string(conn.l()) +
                        " but the run requested l=" + std::to_string(cfg.l));
    const SymplecticSpace& V = conn.space();
    DecompositionEngine engine(V);
    Rng rng(Rng::child_seed(cfg.seed, "geometry"));
    RecordTimer timer(cfg.timings);
    std::vector<ordered_json> records;

    {
      ordered_json rec = record(
          "connection_symbols",
          "symbols are symmetric in the lower pair and totally symmetric once lowered");
      rec["degree"] = conn.degree();
      rec["flat"] = conn.is_flat();
      timer.stamp(rec);
      records.push_back(std::move(rec));
    }

    TensorT<BasePoly> rlow = connection_curvature_lowered(conn);
    auto slabs = tensor_slabs(rlow);
    {
      ordered_json rec = record(
          "curvature_symmetries",
          "pair symmetry, antisymmetry and the cyclic identity hold for every coefficient slab");
      for (const auto& [mono, slab] : slabs)
        if (!curvature_symmetries(V, slab)) {
          ordered_json wit;
          wit["base_monomial"] = mono;
          fail(rec, wit);
        }
      rec["slabs"] = slabs.size();
      timer.stamp(rec);
      records.push_back(std::move(rec));
    }
    {
      ordered_json rec =
          record("trace_symmetric", "the curvature trace is a symmetric tensor field");
      TensorT<BasePoly> sigma = ricci_field(V, rlow);
      for (int a = 1; a <= V.dim(); ++a)
        for (int b = a + 1; b <= V.dim(); ++b)
          if (!(sigma.at({a, b}) == sigma.at({b, a}))) {
            ordered_json wit;
            wit["i"] = a;
            wit["j"] = b;
            fail(rec, wit);
          }
      timer.stamp(rec);
      records.push_back(std::move(rec));
    }
    {
      ordered_json rec = record(
          "second_derivative_identity",
          "the square of the covariant exterior derivative equals the curvature operator");
      const int fields = 10, one_forms = 2;
      for (int t = 0; t < fields + one_forms; ++t) {
        FieldForm psi = t < fields ? random_zero_form_field(V, rng, 3)
                                   : random_one_form_field(V, rng, 2);
        FieldForm twice =
            covariant_exterior_derivative(conn, covariant_exterior_derivative(conn, psi));
        if (!(twice == curvature_operator_field(conn, psi))) {
          ordered_json wit;
          wit["field"] = t;
          fail(rec, wit);
        }
      }
      rec["fields"] = fields + one_forms;
      timer.stamp(rec);
      records.push_back(std::move(rec));
    }
    {
      ordered_json rec = record(
          "trace_split_identity",
          "the curvature splits into a trace extension plus a trace-free remainder");
      for (const auto& [mono, slab] : slabs) {
        Tensor trace = ricci_from_curvature(V, slab);
        Tensor ext = extended_ricci(V, trace);
        Tensor weyl = weyl_part(V, slab);
        bool ok = ext + weyl == slab && ricci_from_curvature(V, ext) == trace &&
                  ricci_from_curvature(V, weyl).is_zero();
        if (!ok) {
          ordered_json wit;
          wit["base_monomial"] = mono;
          fail(rec, wit);
        }
      }
      rec["slabs"] = slabs.size();
      timer.stamp(rec);
      records.push_back(std::move(rec));
    }
    {
      ordered_json rec = record(
          "covariant_block_adjacency",
          "the covariant derivative of a block section lands in adjacent blocks one degree up");
      int sections = 0;
      for (int i = 0; i < V.dim(); ++i)
        for (int j = 0; j <= xi_top(cfg.l, i); ++j)
          for (int q = 0; q <= 1; ++q)
            for (int t = 0; t < 3; ++t) {
              Exponents base(V.dim(), 0);
              if (t > 0) ++base[rng.next_int(0, V.dim() - 1)];
              FieldForm psi = block_section(engine, rng, i, q, j, base);
              if (psi.is_zero()) continue;
              ++sections;
              FieldForm dpsi = covariant_exterior_derivative(conn, psi);
              for (int b = 0; b <= xi_top(cfg.l, i + 1); ++b) {
                if (std::abs(b - j) <= 1) continue;
                if (!project_field(engine, dpsi, i + 1, b).is_zero()) {
                  ordered_json wit = sector_tag(i, q);
                  wit["block"] = j;
                  wit["image_block"] = b;
                  fail(rec, wit);
                }
              }
            }
      rec["sections"] = sections;
      timer.stamp(rec);
      records.push_back(std::move(rec));
    }
    {
      std::vector<int> legs;
      for (int i = 0; i <= cfg.l - 2; ++i) legs.push_back(i);
      for (int i = cfg.l; i <= 2 * cfg.l - 2; ++i) legs.push_back(i);
      ordered_json rec =
          conn.is_flat()
              ? record("twistor_chain",
                       "consecutive twistor steps compose to zero away from the middle degree")
              : record("twistor_composition",
                       "consecutive twistor steps equal the projected curvature operator");
      int sections = 0;
      for (int i : legs)
        for (int q = 0; q <= 1; ++q) {
          FieldForm psi =
              block_section(engine, rng, i, q, xi_top(cfg.l, i), Exponents(V.dim(), 0));
          if (psi.is_zero()) continue;
          ++sections;
          FieldForm twice = twistor_step(engine, conn, i + 1, twistor_step(engine, conn, i, psi));
          bool ok;
          if (conn.is_flat()) {
            ok = twice.is_zero();
          } else {
            FieldForm expected =
                project_field(engine, curvature_operator_field(conn, psi), i + 2,
                              xi_top(cfg.l, i + 2));
            ok = twice == expected;
          }
          if (!ok) {
            ordered_json wit = sector_tag(i, q);
            fail(rec, wit);
          }
        }
      rec["sections"] = sections;
      timer.stamp(rec);
      records.push_back(std::move(rec));
    }
    {
      ordered_json rec = record(
          "dirac_factorization",
          "the degree contraction annihilates the top block of the covariant derivative");
      for (int t = 0; t < 3; ++t) {
        FieldForm phi = random_zero_form_field(V, rng, 3);
        FieldForm dphi = covariant_exterior_derivative(conn, phi);
        FieldForm top = project_field(engine, dphi, 1, 1);
        bool ok = apply_y_field(V, top).is_zero() &&
                  dirac_operator(conn, phi) == apply_y_field(V, dphi - top);
        if (!ok) {
          ordered_json wit;
          wit["field"] = t;
          fail(rec, wit);
        }
      }
      rec["fields"] = 3;
      timer.stamp(rec);
      records.push_back(std::move(rec));
    }
    return finish(cfg, "geometry", records);
  });
}

}  // namespace symtwist::cli
