#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lamis/errors.hpp"

namespace lamis {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// A set of vertex ids drawn from a universe [0, n). Stored as a sorted,
/// duplicate-free id list; immutable once built.
class VertexSet {
 public:
  VertexSet() = default;

  /// Sorts and deduplicates `ids`. Throws InputError if any id >= universe.
  VertexSet(std::size_t universe, std::vector<Vertex> ids) : universe_(universe), ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    if (!ids_.empty() && ids_.back() >= universe_) {
      throw InputError("vertex id " + std::to_string(ids_.back()) + " outside universe of size " +
                       std::to_string(universe_));
    }
  }

  static VertexSet all(std::size_t universe) {
    std::vector<Vertex> ids(universe);
    for (std::size_t v = 0; v < universe; ++v) ids[v] = static_cast<Vertex>(v);
    return from_sorted(universe, std::move(ids));
  }

  static VertexSet from_mask(std::span<const char> mask) {
    std::vector<Vertex> ids;
    for (std::size_t v = 0; v < mask.size(); ++v) {
      if (mask[v]) ids.push_back(static_cast<Vertex>(v));
    }
    return from_sorted(mask.size(), std::move(ids));
  }

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  std::span<const Vertex> ids() const noexcept { return ids_; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  bool contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

  /// Dense membership indicator of length universe().
  std::vector<char> mask() const {
    std::vector<char> m(universe_, 0);
    for (Vertex v : ids_) m[v] = 1;
    return m;
  }

  /// Size of the intersection with `other`.
  std::size_t intersection_size(const VertexSet& other) const {
    std::size_t count = 0;
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++count;
        ++a;
        ++b;
      }
    }
    return count;
  }

  bool is_subset_of(const VertexSet& other) const { return intersection_size(other) == size(); }

  VertexSet set_difference(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
    return from_sorted(universe_, std::move(out));
  }

  VertexSet set_union(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(), std::back_inserter(out));
    return from_sorted(std::max(universe_, other.universe_), std::move(out));
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.ids_ == b.ids_;
  }

 private:
  static VertexSet from_sorted(std::size_t universe, std::vector<Vertex> ids) {
    VertexSet s;
    s.universe_ = universe;
    s.ids_ = std::move(ids);
    return s;
  }

  std::size_t universe_ = 0;
  std::vector<Vertex> ids_;
};

/// Immutable undirected simple graph in CSR layout. Neighbor lists are sorted
/// ascending and adjacency is symmetric.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (std::size_t v = 0; v < num_vertices(); ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
    return best;
  }

  bool has_edge(Vertex u, Vertex v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges as (u, v) with u < v, in ascending (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (std::size_t u = 0; u < num_vertices(); ++u) {
      for (Vertex v : neighbors(static_cast<Vertex>(u))) {
        if (u < v) out.emplace_back(static_cast<Vertex>(u), v);
      }
    }
    return out;
  }

  std::span<const std::size_t> offsets() const noexcept { return offsets_; }
  std::span<const Vertex> adjacency() const noexcept { return neighbors_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
  }

  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

/// Builds a simple undirected graph. Self-loops and duplicate pairs are
/// dropped. Throws InputError naming the first edge with an endpoint >= n.
inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> degree(n + 1, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u >= n || v >= n) {
      throw InputError("edge #" + std::to_string(i) + " (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint >= n = " + std::to_string(n));
    }
    if (u == v) continue;
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];

  std::vector<Vertex> raw(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    raw[cursor[u]++] = v;
    raw[cursor[v]++] = u;
  }

  // Sort and dedupe each list, then compact.
  std::vector<std::size_t> offsets(n + 1, 0);
  std::size_t write = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) raw[write++] = *it;
    offsets[v + 1] = write;
  }
  raw.resize(write);
  raw.shrink_to_fit();
  g.offsets_ = std::move(offsets);
  g.neighbors_ = std::move(raw);
  return g;
}

inline Graph build_graph(std::size_t n, const std::vector<Edge>& edges) {
  return build_graph(n, std::span<const Edge>(edges));
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Result of restricting a graph to a vertex subset.
struct InducedSubgraph {
  Graph graph;
  /// to_original[new_id] = old id; ascending, so relative id order is preserved.
  std::vector<Vertex> to_original;

  VertexSet lift(const VertexSet& local, std::size_t original_universe) const {
    std::vector<Vertex> ids;
    ids.reserve(local.size());
    for (Vertex v : local) ids.push_back(to_original[v]);
    return VertexSet(original_universe, std::move(ids));
  }
};

/// G[U]. Cost is O(n + sum of degrees over U).
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset) {
  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(g.num_vertices(), kAbsent);
  InducedSubgraph out;
  out.to_original.assign(subset.begin(), subset.end());
  for (std::size_t i = 0; i < out.to_original.size(); ++i) local[out.to_original[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    const Vertex u = out.to_original[i];
    for (Vertex w : g.neighbors(u)) {
      if (u < w && local[w] != kAbsent) edges.emplace_back(static_cast<Vertex>(i), local[w]);
    }
  }
  out.graph = build_graph(out.to_original.size(), edges);
  return out;
}

}  // namespace lamis
