#pragma once

// Combinatorial subroutines shared by every algorithm: greedy maximal
// independent set, maximal-matching vertex cover, validators, and a small
// exact solver used as a test oracle.

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "lamis/errors.hpp"
#include "lamis/graph.hpp"

namespace lamis {

inline std::vector<Vertex> identity_order(std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  return order;
}

/// First-fit maximal independent set: scans `order` and takes each vertex with
/// no previously taken neighbor. `order` must be a permutation of [0, n).
inline VertexSet greedy_mis(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.num_vertices();
  if (order.size() != n) throw InputError("greedy order length does not match vertex count");
  std::vector<char> blocked(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> taken;
  for (Vertex v : order) {
    if (v >= n || seen[v]) throw InputError("greedy order is not a permutation");
    seen[v] = 1;
    if (blocked[v]) continue;
    taken.push_back(v);
    blocked[v] = 1;
    for (Vertex w : g.neighbors(v)) blocked[w] = 1;
  }
  return VertexSet(n, std::move(taken));
}

inline VertexSet greedy_mis(const Graph& g) {
  const auto order = identity_order(g.num_vertices());
  return greedy_mis(g, order);
}

/// Both endpoints of a greedy maximal matching, edges scanned in ascending
/// (u, then v within N(u)) order. At most twice a minimum vertex cover.
inline VertexSet vertex_cover_2approx(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> matched(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    if (matched[u]) continue;
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) {
      if (v > u && !matched[v]) {
        matched[u] = 1;
        matched[v] = 1;
        break;
      }
    }
  }
  return VertexSet::from_mask(matched);
}

inline bool is_independent_set(const Graph& g, const VertexSet& s) {
  const auto in = s.mask();
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u)) {
      if (v < in.size() && in[v]) return false;
    }
  }
  return true;
}

/// Independent and no outside vertex can be added.
inline bool is_maximal_independent_set(const Graph& g, const VertexSet& s) {
  if (!is_independent_set(g, s)) return false;
  const auto in = s.mask();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) continue;
    bool dominated = false;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      if (in[w]) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

inline bool is_vertex_cover(const Graph& g, const VertexSet& c) {
  const auto in = c.mask();
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    if (in[u]) continue;
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) {
      if (!in[v]) return false;
    }
  }
  return true;
}

inline constexpr std::size_t kExactMisMaxVertices = 30;

namespace detail {

class ExactMisSearch {
 public:
  explicit ExactMisSearch(const Graph& g) : n_(g.num_vertices()) {
    for (std::size_t v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) adj_[v] |= std::uint32_t{1} << w;
    }
  }

  void seed_incumbent(const VertexSet& s) {
    best_ = 0;
    for (Vertex v : s) best_ |= std::uint32_t{1} << v;
    best_size_ = static_cast<int>(s.size());
  }

  void run() {
    const std::uint32_t everything = n_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n_) - 1;
    search(everything, 0);
  }

  VertexSet result() const {
    std::vector<Vertex> ids;
    for (std::size_t v = 0; v < n_; ++v) {
      if (best_ >> v & 1U) ids.push_back(static_cast<Vertex>(v));
    }
    return VertexSet(n_, std::move(ids));
  }

 private:
  void search(std::uint32_t remaining, std::uint32_t chosen) {
    while (true) {
      const int chosen_size = std::popcount(chosen);
      if (remaining == 0) {
        if (chosen_size > best_size_) {
          best_size_ = chosen_size;
          best_ = chosen;
        }
        return;
      }
      if (chosen_size + std::popcount(remaining) <= best_size_) return;

      int branch = -1;
      int branch_degree = -1;
      int forced = -1;
      for (std::uint32_t rest = remaining; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int d = std::popcount(adj_[v] & remaining);
        if (d <= 1) {
          forced = v;
          break;
        }
        if (d > branch_degree) {
          branch_degree = d;
          branch = v;
        }
      }
      // A vertex of degree <= 1 belongs to some maximum independent set.
      if (forced >= 0) {
        chosen |= std::uint32_t{1} << forced;
        remaining &= ~((std::uint32_t{1} << forced) | adj_[forced]);
        continue;
      }
      const std::uint32_t bit = std::uint32_t{1} << branch;
      search(remaining & ~(bit | adj_[branch]), chosen | bit);
      remaining &= ~bit;
    }
  }

  std::size_t n_;
  std::array<std::uint32_t, 32> adj_{};
  std::uint32_t best_ = 0;
  int best_size_ = -1;
};

}  // namespace detail

/// Maximum independent set by branch-and-bound on the highest-degree vertex.
/// Test oracle only: throws CapabilityError when n > 30. Only the size is
/// contractual; which optimum is returned is unspecified.
inline VertexSet exact_mis(const Graph& g) {
  if (g.num_vertices() > kExactMisMaxVertices) {
    throw CapabilityError("exact_mis supports at most " + std::to_string(kExactMisMaxVertices) +
                          " vertices, got " + std::to_string(g.num_vertices()));
  }
  detail::ExactMisSearch search(g);
  search.seed_incumbent(greedy_mis(g));
  search.run();
  return search.result();
}

}  // namespace lamis
