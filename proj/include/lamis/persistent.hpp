#pragma once

// Neighborhood-vote filter for persistent noise. Each vertex is queried once;
// a high-degree vertex survives only if the number of its neighbors claimed to
// be in the hidden set stays below a concentration threshold. A greedy MIS on
// survivors plus low-degree vertices is the output.
//
// All logarithms are natural. The advantage used in the threshold is the
// oracle's effective (post-cap) epsilon.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "lamis/errors.hpp"
#include "lamis/graph.hpp"
#include "lamis/mis.hpp"
#include "lamis/oracle.hpp"
#include "lamis/random.hpp"

namespace lamis {

enum class GreedyOrder { ascending_id, ascending_degree, random };

inline const char* to_string(GreedyOrder order) {
  switch (order) {
    case GreedyOrder::ascending_id:
      return "ascending";
    case GreedyOrder::ascending_degree:
      return "degree";
    case GreedyOrder::random:
      return "random";
  }
  return "ascending";
}

inline GreedyOrder parse_greedy_order(const std::string& s) {
  if (s == "ascending") return GreedyOrder::ascending_id;
  if (s == "degree") return GreedyOrder::ascending_degree;
  if (s == "random") return GreedyOrder::random;
  throw ConfigError("unknown greedy order '" + s + "'");
}

/// Builds a vertex order for `g` under `policy`. Ties in degree order break by id.
inline std::vector<Vertex> make_order(const Graph& g, GreedyOrder policy, std::uint64_t seed) {
  auto order = identity_order(g.num_vertices());
  switch (policy) {
    case GreedyOrder::ascending_id:
      break;
    case GreedyOrder::ascending_degree:
      std::stable_sort(order.begin(), order.end(),
                       [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
      break;
    case GreedyOrder::random: {
      SplitMix64 rng(seed);
      shuffle(order.begin(), order.end(), rng);
      break;
    }
  }
  return order;
}

struct PersistentParams {
  double epsilon_effective = 0.25;
  double low_degree_cutoff_coeff = 36.0;
  double threshold_coeff = 6.0;
  GreedyOrder greedy_order = GreedyOrder::ascending_id;
  std::uint64_t order_seed = 0;

  static PersistentParams for_oracle(const Oracle& o) {
    PersistentParams p;
    p.epsilon_effective = o.effective_epsilon();
    return p;
  }

  void validate() const {
    if (!(epsilon_effective > 0.0 && epsilon_effective <= 0.5)) {
      throw ConfigError("effective epsilon must lie in (0, 1/2]");
    }
    // A zero cutoff leaves only isolated vertices in the low-degree set.
    if (!(low_degree_cutoff_coeff >= 0.0)) throw ConfigError("low-degree cutoff coefficient must be >= 0");
    if (!(threshold_coeff > 0.0)) throw ConfigError("threshold coefficient must be positive");
  }
};

struct PersistentStats {
  std::size_t low_degree = 0;
  std::size_t survivors = 0;
  std::size_t independent = 0;
  double runtime_ms = 0.0;
};

struct PersistentReport {
  std::vector<std::uint32_t> yes_counts;
  VertexSet low_degree;
  VertexSet survivors;
  VertexSet independent_set;
  PersistentStats stats;
};

/// s_v = (1/2 - eps) deg + c * sqrt(ln n) * (1/2 - eps) * sqrt(deg). `n` is a
/// real so that callers may pass e.g. e^16.
inline double survival_threshold(std::size_t degree, double epsilon, double n, double coeff = 6.0) {
  const double d = static_cast<double>(degree);
  const double gap = 0.5 - epsilon;
  return gap * d + coeff * std::sqrt(std::log(n)) * gap * std::sqrt(d);
}

/// Queries every vertex exactly once, then counts yes-answers among neighbors
/// in one pass over the adjacency. Throws ModeError for non-persistent oracles.
inline std::vector<std::uint32_t> neighbor_yes_counts(const Graph& g, Oracle& o) {
  if (!o.persistent()) throw ModeError("neighbor_yes_counts needs a persistent oracle");
  if (o.num_vertices() != g.num_vertices()) throw InputError("oracle and graph sizes differ");
  const std::size_t n = g.num_vertices();
  std::vector<char> answer(n);
  for (std::size_t v = 0; v < n; ++v) answer[v] = o.query_bool(static_cast<Vertex>(v)) ? 1 : 0;
  std::vector<std::uint32_t> counts(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::uint32_t c = 0;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) c += static_cast<std::uint32_t>(answer[w]);
    counts[v] = c;
  }
  return counts;
}

inline PersistentReport run_persistent(const Graph& g, Oracle& o, const PersistentParams& params) {
  params.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.num_vertices();

  PersistentReport report;
  report.yes_counts = neighbor_yes_counts(g, o);

  const double log_n = n > 0 ? std::log(static_cast<double>(n)) : 0.0;
  const double cutoff = params.low_degree_cutoff_coeff * log_n;
  std::vector<char> low(n, 0);
  std::vector<char> survive(n, 0);
  std::vector<char> keep(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t deg = g.degree(static_cast<Vertex>(v));
    if (static_cast<double>(deg) <= cutoff) {
      low[v] = keep[v] = 1;
      continue;
    }
    const double s_v =
        survival_threshold(deg, params.epsilon_effective, static_cast<double>(n), params.threshold_coeff);
    if (static_cast<double>(report.yes_counts[v]) <= s_v) survive[v] = keep[v] = 1;
  }
  report.low_degree = VertexSet::from_mask(low);
  report.survivors = VertexSet::from_mask(survive);

  const auto sub = induced_subgraph(g, VertexSet::from_mask(keep));
  const auto order = make_order(sub.graph, params.greedy_order, params.order_seed);
  report.independent_set = sub.lift(greedy_mis(sub.graph, order), n);

  report.stats.low_degree = report.low_degree.size();
  report.stats.survivors = report.survivors.size();
  report.stats.independent = report.independent_set.size();
  report.stats.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace lamis
