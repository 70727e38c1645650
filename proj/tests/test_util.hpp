#pragma once

#include <cstdint>
#include <vector>

#include "lamis/graph.hpp"
#include "lamis/random.hpp"

namespace testutil {

using lamis::Edge;
using lamis::Graph;
using lamis::Vertex;

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return lamis::build_graph(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return lamis::build_graph(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return lamis::build_graph(n, e);
}

inline Graph edgeless(std::size_t n) { return lamis::build_graph(n, std::vector<Edge>{}); }

inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);           // outer cycle
    e.emplace_back(i, i + 5);                 // spokes
    e.emplace_back(i + 5, (i + 2) % 5 + 5);   // inner pentagram
  }
  return lamis::build_graph(10, e);
}

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  lamis::SplitMix64 rng(seed);
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (lamis::bernoulli(rng, p)) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return lamis::build_graph(n, e);
}

/// Independence number by enumerating all 2^n subsets (n <= 20).
inline std::size_t brute_force_alpha(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> nbr(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) nbr[v] |= 1u << w;
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v)
      if ((mask >> v & 1u) && (nbr[v] & mask)) ok = false;
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

/// Minimum vertex cover size by enumeration (n <= 20).
inline std::size_t brute_force_min_cover(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const auto edges = g.edges();
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& [u, v] : edges)
      if (!(mask >> u & 1u) && !(mask >> v & 1u)) {
        ok = false;
        break;
      }
    if (ok) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

}  // namespace testutil
