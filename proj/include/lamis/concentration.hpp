#pragma once

// Monte Carlo tail estimation and the event samplers used to check the
// concentration claims behind both algorithms. Trial i draws from its own
// generator seeded with derive_seed(seed, i), so estimates do not depend on
// the worker count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <thread>
#include <vector>

#include "lamis/bandit.hpp"
#include "lamis/errors.hpp"
#include "lamis/instance.hpp"
#include "lamis/oracle.hpp"
#include "lamis/persistent.hpp"
#include "lamis/random.hpp"

namespace lamis {

inline constexpr double kZ99 = 2.58;
inline constexpr std::uint64_t kMinTailTrials = 1000;

struct TailEstimate {
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double probability = 0.0;
  double half_width = 0.0;  // Wald 99% half-width, floored at 2.58 / (2 trials)

  double upper() const { return probability + half_width; }
  double lower() const { return probability - half_width; }
};

inline double wald_half_width(double p_hat, std::uint64_t trials) {
  const double t = static_cast<double>(trials);
  return std::max(kZ99 * std::sqrt(p_hat * (1.0 - p_hat) / t), kZ99 / (2.0 * t));
}

/// Runs `event(rng)` for `trials` independent trials and returns the hit
/// frequency with its CI half-width. `event` is copied into each worker.
template <class Event>
TailEstimate estimate_tail(const Event& event, std::uint64_t trials, std::uint64_t seed, unsigned workers = 1) {
  if (trials < kMinTailTrials) throw InputError("estimate_tail needs at least 1000 trials");
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(trials, 256))));

  std::vector<std::uint64_t> hits(workers, 0);
  auto work = [&](unsigned w) {
    Event local = event;
    std::uint64_t count = 0;
    for (std::uint64_t i = w; i < trials; i += workers) {
      SplitMix64 rng(derive_seed(seed, i));
      if (local(rng)) ++count;
    }
    hits[w] = count;
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  TailEstimate est;
  est.trials = trials;
  for (auto h : hits) est.hits += h;
  est.probability = static_cast<double>(est.hits) / static_cast<double>(trials);
  est.half_width = wald_half_width(est.probability, trials);
  return est;
}

namespace detail {

/// Star with center 0 and `leaves` leaves; the first `planted_leaves` leaves
/// (or the center alone, when center_planted) form the planted set.
inline std::shared_ptr<const PlantedInstance> star_instance(std::size_t leaves, bool center_planted,
                                                            std::size_t planted_leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  std::vector<Vertex> planted;
  if (center_planted) {
    planted.push_back(0);
  } else {
    for (std::size_t i = 1; i <= planted_leaves; ++i) planted.push_back(static_cast<Vertex>(i));
  }
  Graph g = build_graph(leaves + 1, edges);
  VertexSet s(leaves + 1, std::move(planted));
  return std::make_shared<const PlantedInstance>(make_instance(std::move(g), std::move(s)));
}

}  // namespace detail

/// Yes-count of a hidden-set member's neighborhood exceeds its survival
/// threshold (the member would be wrongly filtered). The star center has
/// `degree` non-member neighbors; `n_for_log` is the n used inside ln n.
class MemberFilteredEvent {
 public:
  MemberFilteredEvent(std::size_t degree, double epsilon, double n_for_log, double threshold_coeff = 6.0)
      : instance_(detail::star_instance(degree, true, 0)),
        epsilon_(epsilon),
        threshold_(survival_threshold(degree, epsilon, n_for_log, threshold_coeff)) {}

  double threshold() const { return threshold_; }

  bool operator()(SplitMix64& rng) const {
    Oracle o(instance_->planted, {epsilon_, NoiseMode::persistent_random, 2, rng(), false});
    return static_cast<double>(neighbor_yes_counts(instance_->graph, o)[0]) > threshold_;
  }

 private:
  std::shared_ptr<const PlantedInstance> instance_;
  double epsilon_;
  double threshold_;
};

/// Minimum number of hidden-set neighbors for which a non-member is
/// guaranteed (w.h.p.) to be filtered: (3 / eps) sqrt(ln n) sqrt(deg).
inline double blocking_neighbor_threshold(std::size_t degree, double epsilon, double n_for_log) {
  return 3.0 / epsilon * std::sqrt(std::log(n_for_log)) * std::sqrt(static_cast<double>(degree));
}

/// A non-member with `planted_neighbors` hidden-set neighbors among `degree`
/// survives the filter (yes-count <= threshold).
class BlockerSurvivesEvent {
 public:
  BlockerSurvivesEvent(std::size_t degree, std::size_t planted_neighbors, double epsilon, double n_for_log,
                       double threshold_coeff = 6.0)
      : instance_(detail::star_instance(degree, false, std::min(planted_neighbors, degree))),
        epsilon_(epsilon),
        threshold_(survival_threshold(degree, epsilon, n_for_log, threshold_coeff)) {}

  double threshold() const { return threshold_; }

  bool operator()(SplitMix64& rng) const {
    Oracle o(instance_->planted, {epsilon_, NoiseMode::persistent_random, 2, rng(), false});
    return static_cast<double>(neighbor_yes_counts(instance_->graph, o)[0]) <= threshold_;
  }

 private:
  std::shared_ptr<const PlantedInstance> instance_;
  double epsilon_;
  double threshold_;
};

/// One elimination round on a single vertex: for a member, the event is being
/// eliminated; for a non-member, surviving.
class EliminationErrorEvent {
 public:
  EliminationErrorEvent(double epsilon, double delta, std::uint32_t round, bool member)
      : member_(member), epsilon_(epsilon) {
    BanditParams params;
    params.epsilon = epsilon;
    params.delta = delta;
    queries_ = query_schedule(round, params);
    truth_ = VertexSet(1, member ? std::vector<Vertex>{0} : std::vector<Vertex>{});
  }

  std::uint64_t queries() const { return queries_; }

  bool operator()(SplitMix64& rng) const {
    Oracle o(truth_, {epsilon_, NoiseMode::bandit_bernoulli, 2, rng(), false});
    const bool survived = !elimination_round(VertexSet::all(1), o, queries_).empty();
    return member_ ? !survived : survived;
  }

  /// The per-round error bound delta / (100 * 4^r).
  static double bound(double delta, std::uint32_t round) { return delta / (100.0 * std::pow(4.0, round)); }

 private:
  bool member_;
  double epsilon_;
  std::uint64_t queries_ = 0;
  VertexSet truth_;
};

}  // namespace lamis
