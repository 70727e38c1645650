#pragma once

// Planted-independent-set instance generators. The planted set plays the role
// of the fixed hidden independent set that oracles answer for and that outputs
// are scored against. It is independent by construction but is not certified
// to be maximum; all guarantees here only need it to be independent and fixed.

#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "lamis/errors.hpp"
#include "lamis/graph.hpp"
#include "lamis/mis.hpp"
#include "lamis/random.hpp"

namespace lamis {

enum class GraphModel { gnp, bounded_degree, external };

inline const char* to_string(GraphModel model) {
  switch (model) {
    case GraphModel::gnp:
      return "gnp";
    case GraphModel::bounded_degree:
      return "bounded-degree";
    case GraphModel::external:
      return "external";
  }
  return "external";
}

inline GraphModel parse_graph_model(const std::string& s) {
  if (s == "gnp") return GraphModel::gnp;
  if (s == "bounded-degree" || s == "bounded") return GraphModel::bounded_degree;
  if (s == "external") return GraphModel::external;
  throw InputError("unknown graph model '" + s + "'");
}

struct GenParams {
  GraphModel model = GraphModel::external;
  std::size_t n = 0;
  double alpha = 0.0;
  double p = 0.0;          // gnp edge probability
  std::size_t degree = 0;  // bounded-degree target non-planted degree
  std::uint64_t seed = 0;
  bool ensure_maximal = false;

  friend bool operator==(const GenParams&, const GenParams&) = default;
};

struct PlantedInstance {
  Graph graph;
  VertexSet planted;
  GenParams params;
};

inline std::size_t planted_size(std::size_t n, double alpha) {
  return static_cast<std::size_t>(std::floor(alpha * static_cast<double>(n)));
}

/// Every non-planted vertex has a planted neighbor. O(n + m).
inline bool planted_is_maximal(const PlantedInstance& inst) {
  return is_maximal_independent_set(inst.graph, inst.planted);
}

namespace detail {

inline void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0, 1)");
}

/// Seeded shuffle of [0, n); the first k entries become the planted set.
inline std::vector<char> draw_planted(std::size_t n, std::size_t k, SplitMix64& rng) {
  auto order = identity_order(n);
  shuffle(order.begin(), order.end(), rng);
  std::vector<char> planted(n, 0);
  for (std::size_t i = 0; i < k; ++i) planted[order[i]] = 1;
  return planted;
}

}  // namespace detail

/// G(n, p) restricted to allow no planted-planted edges. With `ensure_maximal`,
/// each non-planted vertex lacking a planted neighbor gets one uniformly random
/// planted neighbor (impossible, hence skipped, when the planted set is empty).
inline PlantedInstance gen_planted_gnp(std::size_t n, double alpha, double p, std::uint64_t seed,
                                       bool ensure_maximal) {
  detail::check_alpha(alpha);
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability p must lie in [0, 1]");

  SplitMix64 rng(seed);
  const std::size_t k = planted_size(n, alpha);
  const auto planted = detail::draw_planted(n, k, rng);

  std::vector<Edge> edges;
  std::vector<char> has_planted_neighbor(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (planted[u] && planted[v]) continue;
      if (!bernoulli(rng, p)) continue;
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (planted[u]) has_planted_neighbor[v] = 1;
      if (planted[v]) has_planted_neighbor[u] = 1;
    }
  }

  auto planted_set = VertexSet::from_mask(planted);
  if (ensure_maximal && k > 0) {
    const auto ids = planted_set.ids();
    for (std::size_t v = 0; v < n; ++v) {
      if (planted[v] || has_planted_neighbor[v]) continue;
      edges.emplace_back(static_cast<Vertex>(v), ids[uniform_below(rng, ids.size())]);
    }
  }

  GenParams params{GraphModel::gnp, n, alpha, p, 0, seed, ensure_maximal};
  return {build_graph(n, edges), std::move(planted_set), params};
}

/// Each non-planted vertex draws `degree` distinct neighbors uniformly from all
/// other vertices (collisions resampled). Planted vertices never pick, so no
/// planted-planted edge arises. Maximum degree concentrates near a small
/// multiple of `degree`.
inline PlantedInstance gen_planted_bounded_degree(std::size_t n, double alpha, std::size_t degree,
                                                  std::uint64_t seed) {
  detail::check_alpha(alpha);
  const double non_planted_share = 1.0 - alpha;
  if (static_cast<double>(degree) * non_planted_share > alpha * static_cast<double>(n)) {
    throw InputError("infeasible bounded-degree parameters: degree * (1 - alpha) > alpha * n");
  }
  if (degree > 0 && degree + 1 > n) throw InputError("degree must be below n");

  SplitMix64 rng(seed);
  const std::size_t k = planted_size(n, alpha);
  const auto planted = detail::draw_planted(n, k, rng);

  std::vector<Edge> edges;
  edges.reserve((n - k) * degree);
  std::unordered_set<Vertex> picked;
  for (std::size_t u = 0; u < n; ++u) {
    if (planted[u]) continue;
    picked.clear();
    while (picked.size() < degree) {
      auto w = static_cast<Vertex>(uniform_below(rng, n - 1));
      if (w >= u) ++w;
      if (picked.insert(w).second) edges.emplace_back(static_cast<Vertex>(u), w);
    }
  }

  GenParams params{GraphModel::bounded_degree, n, alpha, 0.0, degree, seed, false};
  return {build_graph(n, edges), VertexSet::from_mask(planted), params};
}

/// Wraps an arbitrary graph and planted set; throws InputError unless the
/// planted set is independent.
inline PlantedInstance make_instance(Graph graph, VertexSet planted) {
  if (planted.universe() != graph.num_vertices()) throw InputError("planted set universe does not match graph");
  if (!is_independent_set(graph, planted)) throw InputError("planted set is not independent");
  GenParams params;
  params.n = graph.num_vertices();
  params.alpha = graph.num_vertices() == 0
                     ? 0.0
                     : static_cast<double>(planted.size()) / static_cast<double>(graph.num_vertices());
  return {std::move(graph), std::move(planted), params};
}

}  // namespace lamis
