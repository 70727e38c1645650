#pragma once

// Round-based elimination for non-persistent noise. Round r queries every
// survivor q_r = ceil((4 / eps^2) * (r + ln(1/delta))) times and drops those
// with fewer than q_r / 2 yes answers. After each round the complement of a
// 2-approximate vertex cover of G[V_r] is a candidate independent set; the
// largest candidate seen is returned. The run stops after the round in which
// the cumulative query count exceeds 30 * n / eps^2 * ln(1/delta), or once no
// survivors remain.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "lamis/errors.hpp"
#include "lamis/graph.hpp"
#include "lamis/mis.hpp"
#include "lamis/oracle.hpp"

namespace lamis {

enum class RewardMode { bernoulli, gaussian };

inline constexpr double kDeltaOneClamp = 1.0 - 1e-9;

struct BanditParams {
  double epsilon = 0.25;
  double delta = 0.1;
  double budget_coeff = 30.0;
  double schedule_coeff = 4.0;
  RewardMode reward_mode = RewardMode::bernoulli;

  static BanditParams for_oracle(const Oracle& o, double delta) {
    BanditParams p;
    p.epsilon = o.config().epsilon;
    p.delta = delta;
    p.reward_mode = o.gaussian() ? RewardMode::gaussian : RewardMode::bernoulli;
    return p;
  }

  void validate() const {
    if (!(epsilon > 0.0 && epsilon <= 0.5)) throw ConfigError("epsilon must lie in (0, 1/2]");
    if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
    if (!(budget_coeff > 0.0) || !(schedule_coeff > 0.0)) throw ConfigError("bandit coefficients must be positive");
  }

  /// ln(1/delta), floored at 0 once delta is within 1e-9 of 1.
  double log_inv_delta() const { return delta >= kDeltaOneClamp ? 0.0 : -std::log(delta); }
};

struct RoundRecord {
  std::uint32_t round = 0;
  std::uint64_t queries_per_vertex = 0;
  std::size_t survivors_before = 0;
  std::size_t survivors_after = 0;
  std::size_t cover_size = 0;
  std::size_t candidate_size = 0;
  std::uint64_t queries_before = 0;      // run total before this round
  std::uint64_t cumulative_queries = 0;  // run total after this round
};

enum class Termination { budget, survivors_empty };

inline const char* to_string(Termination t) { return t == Termination::budget ? "budget" : "survivors-empty"; }

struct BanditResult {
  VertexSet best_set;
  std::vector<RoundRecord> trace;
  std::uint64_t total_queries = 0;
  Termination terminated = Termination::survivors_empty;
  double budget = 0.0;
};

/// q_r = ceil((c / eps^2) * (r + ln(1/delta))). Strictly increasing in r.
inline std::uint64_t query_schedule(std::uint32_t round, const BanditParams& params) {
  if (round < 1) throw InputError("rounds are 1-based");
  const double q = params.schedule_coeff / (params.epsilon * params.epsilon) *
                   (static_cast<double>(round) + params.log_inv_delta());
  return static_cast<std::uint64_t>(std::ceil(q));
}

/// Query budget for `n` candidates: c * n / eps^2 * max(ln(1/delta), ln 2).
inline double query_budget(std::size_t n, const BanditParams& params) {
  return params.budget_coeff * static_cast<double>(n) / (params.epsilon * params.epsilon) *
         std::max(params.log_inv_delta(), std::log(2.0));
}

/// Queries each survivor `q` times; keeps those whose yes-count (Bernoulli) or
/// reward sum (Gaussian) is at least q / 2.
inline VertexSet elimination_round(const VertexSet& survivors, Oracle& o, std::uint64_t q) {
  if (o.persistent()) throw ModeError("elimination needs a non-persistent oracle");
  if (q < 1) throw InputError("elimination round needs q >= 1");
  const double half = static_cast<double>(q) / 2.0;
  std::vector<Vertex> kept;
  kept.reserve(survivors.size());
  for (Vertex v : survivors) {
    double score = 0.0;
    if (o.gaussian()) {
      for (std::uint64_t i = 0; i < q; ++i) score += o.query_real(v);
    } else {
      std::uint64_t yes = 0;
      for (std::uint64_t i = 0; i < q; ++i) yes += o.query_bool(v) ? 1 : 0;
      score = static_cast<double>(yes);
    }
    if (score >= half) kept.push_back(v);
  }
  return VertexSet(survivors.universe(), std::move(kept));
}

struct CoverPhase {
  VertexSet cover;      // U_r, original ids
  VertexSet candidate;  // I_r = V_r \ U_r, original ids
};

/// Vertex cover phase on G[survivors], with ids compacted and lifted back.
inline CoverPhase cover_phase(const Graph& g, const VertexSet& survivors) {
  const auto sub = induced_subgraph(g, survivors);
  CoverPhase out;
  out.cover = sub.lift(vertex_cover_2approx(sub.graph), g.num_vertices());
  out.candidate = survivors.set_difference(out.cover);
  return out;
}

/// Elimination starting from `candidates` instead of all of V. The budget is
/// computed from |candidates|. Used directly by amplification on residual sets.
inline BanditResult run_bandit(const Graph& g, const VertexSet& candidates, Oracle& o, const BanditParams& params) {
  params.validate();
  if (o.persistent()) throw ModeError("run_bandit needs a non-persistent oracle");
  if ((params.reward_mode == RewardMode::gaussian) != o.gaussian()) {
    throw ModeError("bandit reward mode does not match the oracle");
  }
  if (candidates.universe() != g.num_vertices() || o.num_vertices() != g.num_vertices()) {
    throw InputError("graph, candidate set and oracle sizes differ");
  }

  BanditResult result;
  result.best_set = VertexSet(g.num_vertices(), {});
  result.budget = query_budget(candidates.size(), params);
  const std::uint64_t start = o.total_queries();
  VertexSet survivors = candidates;
  result.terminated = Termination::survivors_empty;

  for (std::uint32_t r = 1; !survivors.empty(); ++r) {
    RoundRecord rec;
    rec.round = r;
    rec.queries_per_vertex = query_schedule(r, params);
    rec.survivors_before = survivors.size();
    rec.queries_before = o.total_queries() - start;

    survivors = elimination_round(survivors, o, rec.queries_per_vertex);
    auto phase = cover_phase(g, survivors);

    rec.survivors_after = survivors.size();
    rec.cover_size = phase.cover.size();
    rec.candidate_size = phase.candidate.size();
    rec.cumulative_queries = o.total_queries() - start;
    result.trace.push_back(rec);

    if (phase.candidate.size() > result.best_set.size()) result.best_set = std::move(phase.candidate);
    if (static_cast<double>(rec.cumulative_queries) > result.budget) {
      result.terminated = Termination::budget;
      break;
    }
  }
  result.total_queries = o.total_queries() - start;
  return result;
}

inline BanditResult run_bandit(const Graph& g, Oracle& o, const BanditParams& params) {
  return run_bandit(g, VertexSet::all(g.num_vertices()), o, params);
}

}  // namespace lamis
