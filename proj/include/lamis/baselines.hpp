#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "lamis/errors.hpp"
#include "lamis/graph.hpp"
#include "lamis/mis.hpp"
#include "lamis/oracle.hpp"
#include "lamis/random.hpp"

namespace lamis {

namespace detail {

/// True iff at least half of `q` Bernoulli queries on v answer yes.
inline bool majority_yes(Oracle& o, Vertex v, std::uint64_t q) {
  std::uint64_t yes = 0;
  for (std::uint64_t i = 0; i < q; ++i) yes += o.query_bool(v) ? 1 : 0;
  return 2 * yes >= q;
}

inline std::uint64_t ceil_at_least_one(double x) {
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(x)));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subsample-and-verify: an O(log n)-approximation with O(n / eps^2) queries.
// ---------------------------------------------------------------------------

struct SamplerParams {
  double sample_prob = 1.0;
  std::uint64_t queries_per_sampled = 1;
  std::uint64_t sample_seed = 0;

  /// sample_prob = 1 / ln n (clamped to 1), q = ceil(ln n / eps^2).
  static SamplerParams defaults(std::size_t n, double epsilon, std::uint64_t sample_seed = 0) {
    SamplerParams p;
    const double log_n = n > 1 ? std::log(static_cast<double>(n)) : 1.0;
    p.sample_prob = std::min(1.0, 1.0 / log_n);
    p.queries_per_sampled = detail::ceil_at_least_one(log_n / (epsilon * epsilon));
    p.sample_seed = sample_seed;
    return p;
  }

  void validate() const {
    if (!(sample_prob > 0.0 && sample_prob <= 1.0)) throw ConfigError("sample_prob must lie in (0, 1]");
    if (queries_per_sampled < 1) throw ConfigError("queries_per_sampled must be >= 1");
  }
};

struct SamplerResult {
  VertexSet sampled;   // U
  VertexSet selected;  // members of U with a majority of yes answers
};

/// Includes each vertex in U independently with sample_prob, queries each
/// member of U q times and keeps the majority-yes ones.
inline SamplerResult run_sampler(std::size_t n, Oracle& o, const SamplerParams& params) {
  params.validate();
  if (o.persistent() || o.gaussian()) throw ModeError("sampler needs a non-persistent Bernoulli oracle");
  if (o.num_vertices() != n) throw InputError("oracle size does not match n");
  SplitMix64 rng(params.sample_seed);
  std::vector<Vertex> sampled;
  std::vector<Vertex> selected;
  for (std::size_t v = 0; v < n; ++v) {
    if (!bernoulli(rng, params.sample_prob)) continue;
    sampled.push_back(static_cast<Vertex>(v));
    if (detail::majority_yes(o, static_cast<Vertex>(v), params.queries_per_sampled)) {
      selected.push_back(static_cast<Vertex>(v));
    }
  }
  return {VertexSet(n, std::move(sampled)), VertexSet(n, std::move(selected))};
}

// ---------------------------------------------------------------------------
// Amplification: boosts a routine that returns a 2/3-fraction of the remaining
// hidden set (w.p. 9/10) to full recovery via repeated voting rounds and a
// final direct-query sweep.
// ---------------------------------------------------------------------------

/// Called with the residual vertex set; returns a subset of it (anything
/// outside the residual is ignored).
using BaseAlgorithm = std::function<VertexSet(const VertexSet& residual, Oracle& o)>;

struct AmplifyParams {
  std::uint64_t rounds = 1;
  std::uint64_t reps_per_round = 1;
  std::uint64_t final_queries = 1;

  /// rounds = ceil(log_{3/2} ln n), reps = ceil(100 ln ln n),
  /// final = ceil(2 ln n / eps^2); each clamped to >= 1.
  static AmplifyParams defaults(std::size_t n, double epsilon) {
    AmplifyParams p;
    const double log_n = n > 1 ? std::log(static_cast<double>(n)) : 0.0;
    const double log_log_n = log_n > 1.0 ? std::log(log_n) : 0.0;
    p.rounds = detail::ceil_at_least_one(log_log_n / std::log(1.5));
    p.reps_per_round = detail::ceil_at_least_one(100.0 * log_log_n);
    p.final_queries = detail::ceil_at_least_one(2.0 * log_n / (epsilon * epsilon));
    return p;
  }

  void validate() const {
    if (rounds < 1 || reps_per_round < 1 || final_queries < 1) {
      throw ConfigError("amplification parameters must all be >= 1");
    }
  }
};

struct AmplifyResult {
  VertexSet set;
  std::vector<VertexSet> promoted_per_round;
  VertexSet final_residual;  // vertices swept by direct queries
  VertexSet final_promoted;
};

inline AmplifyResult run_amplify(const BaseAlgorithm& base, Oracle& o, std::size_t n, const AmplifyParams& params) {
  params.validate();
  if (o.persistent() || o.gaussian()) throw ModeError("amplification needs a non-persistent Bernoulli oracle");
  if (o.num_vertices() != n) throw InputError("oracle size does not match n");

  AmplifyResult result;
  VertexSet residual = VertexSet::all(n);
  VertexSet promoted_total(n, {});
  std::vector<std::uint64_t> votes(n, 0);

  for (std::uint64_t round = 0; round < params.rounds; ++round) {
    std::fill(votes.begin(), votes.end(), 0);
    const auto in_residual = residual.mask();
    for (std::uint64_t rep = 0; rep < params.reps_per_round; ++rep) {
      const VertexSet picked = base(residual, o);
      for (Vertex v : picked) {
        if (v < n && in_residual[v]) ++votes[v];
      }
    }
    std::vector<Vertex> promoted;
    for (Vertex v : residual) {
      if (2 * votes[v] >= params.reps_per_round) promoted.push_back(v);
    }
    VertexSet round_set(n, std::move(promoted));
    residual = residual.set_difference(round_set);
    promoted_total = promoted_total.set_union(round_set);
    result.promoted_per_round.push_back(std::move(round_set));
  }

  std::vector<Vertex> swept;
  for (Vertex v : residual) {
    if (detail::majority_yes(o, v, params.final_queries)) swept.push_back(v);
  }
  result.final_residual = residual;
  result.final_promoted = VertexSet(n, std::move(swept));
  result.set = promoted_total.set_union(result.final_promoted);
  return result;
}

/// Oracle-free baseline: greedy MIS in ascending id order.
inline VertexSet run_greedy_baseline(const Graph& g) { return greedy_mis(g); }

}  // namespace lamis
