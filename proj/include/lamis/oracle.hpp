#pragma once

// Noisy membership oracle for a hidden independent set. Four noise modes:
//
//   persistent-random  answer fixed per vertex, drawn from a counter-based
//                      hash of (seed, vertex); fully independent across vertices
//   persistent-kwise   answer fixed per vertex, drawn from a k-wise independent
//                      polynomial hash
//   bandit-bernoulli   fresh coin per query, correct w.p. 1/2 + eps
//   bandit-gaussian    fresh sample per query from N(1/2 +/- eps, 1)
//
// Persistent modes optionally cap the advantage at 1/4 by composing the oracle
// with an independent persistent flip of probability (eps - 1/4) / (1/2 + eps).

#include <cstdint>
#include <string>
#include <vector>

#include "lamis/errors.hpp"
#include "lamis/graph.hpp"
#include "lamis/instance.hpp"
#include "lamis/kwise_hash.hpp"
#include "lamis/mis.hpp"
#include "lamis/random.hpp"

namespace lamis {

enum class NoiseMode { persistent_random, persistent_kwise, bandit_bernoulli, bandit_gaussian };

inline const char* to_string(NoiseMode mode) {
  switch (mode) {
    case NoiseMode::persistent_random:
      return "persistent-random";
    case NoiseMode::persistent_kwise:
      return "persistent-kwise";
    case NoiseMode::bandit_bernoulli:
      return "bandit-bernoulli";
    case NoiseMode::bandit_gaussian:
      return "bandit-gaussian";
  }
  return "persistent-random";
}

inline NoiseMode parse_noise_mode(const std::string& s) {
  if (s == "persistent-random") return NoiseMode::persistent_random;
  if (s == "persistent-kwise") return NoiseMode::persistent_kwise;
  if (s == "bandit-bernoulli") return NoiseMode::bandit_bernoulli;
  if (s == "bandit-gaussian") return NoiseMode::bandit_gaussian;
  throw ConfigError("unknown oracle mode '" + s + "'");
}

inline bool is_persistent(NoiseMode mode) {
  return mode == NoiseMode::persistent_random || mode == NoiseMode::persistent_kwise;
}

/// Flip probability that reduces advantage eps > 1/4 to exactly 1/4.
inline double cap_flip_probability(double epsilon) {
  return epsilon > 0.25 ? (epsilon - 0.25) / (0.5 + epsilon) : 0.0;
}

struct OracleConfig {
  double epsilon = 0.25;
  NoiseMode mode = NoiseMode::persistent_random;
  unsigned k = 2;  // only for persistent-kwise
  std::uint64_t seed = 0;
  bool apply_cap = true;  // only for persistent modes

  void validate() const {
    if (!(epsilon > 0.0 && epsilon <= 0.5)) throw ConfigError("epsilon must lie in (0, 1/2]");
    if (mode == NoiseMode::persistent_kwise && k < 2) throw ConfigError("k-wise mode needs k >= 2");
  }

  bool capped() const { return is_persistent(mode) && apply_cap && epsilon > 0.25; }

  double effective_epsilon() const { return capped() ? 0.25 : epsilon; }

  double flip_probability() const { return capped() ? cap_flip_probability(epsilon) : 0.0; }

  friend bool operator==(const OracleConfig&, const OracleConfig&) = default;
};

struct QueryLedger {
  std::vector<std::uint64_t> per_vertex;
  std::uint64_t total = 0;

  void record(Vertex v) {
    ++per_vertex[v];
    ++total;
  }
};

/// Stateful oracle confined to a single execution context (the ledger and the
/// non-persistent stream mutate on every query).
class Oracle {
 public:
  Oracle(const VertexSet& truth, const OracleConfig& config)
      : config_(config),
        truth_(truth.mask()),
        stream_(derive_seed(config.seed, kStreamNonPersistent)),
        key_correct_(derive_seed(config.seed, kStreamCorrect)),
        key_flip_(derive_seed(config.seed, kStreamFlip)),
        correct_hash_(2, 0),
        flip_hash_(2, 0) {
    config_.validate();
    ledger_.per_vertex.assign(truth_.size(), 0);
    if (config_.mode == NoiseMode::persistent_kwise) {
      correct_hash_ = KWiseHash(config_.k, derive_seed(config_.seed, kStreamCorrect));
      flip_hash_ = KWiseHash(config_.k, derive_seed(config_.seed, kStreamFlip));
    }
  }

  const OracleConfig& config() const noexcept { return config_; }
  NoiseMode mode() const noexcept { return config_.mode; }
  bool persistent() const noexcept { return is_persistent(config_.mode); }
  bool gaussian() const noexcept { return config_.mode == NoiseMode::bandit_gaussian; }
  std::size_t num_vertices() const noexcept { return truth_.size(); }
  double effective_epsilon() const noexcept { return config_.effective_epsilon(); }

  /// Membership answer for Bernoulli modes. Throws ModeError in Gaussian mode.
  bool query_bool(Vertex v) {
    if (gaussian()) throw ModeError("query_bool called on a Gaussian-reward oracle");
    check_vertex(v);
    ledger_.record(v);
    const bool member = truth_[v] != 0;
    if (!persistent()) return member != bernoulli(stream_, 0.5 - config_.epsilon);
    return member != persistent_error(v);
  }

  /// Real-valued reward for Gaussian mode. Throws ModeError otherwise.
  double query_real(Vertex v) {
    if (!gaussian()) throw ModeError("query_real called on a Bernoulli oracle");
    check_vertex(v);
    ledger_.record(v);
    const double mean = truth_[v] ? 0.5 + config_.epsilon : 0.5 - config_.epsilon;
    return mean + normal_(stream_);
  }

  std::uint64_t total_queries() const noexcept { return ledger_.total; }
  std::uint64_t queries(Vertex v) const { return ledger_.per_vertex.at(v); }
  const QueryLedger& ledger() const noexcept { return ledger_; }

 private:
  static constexpr std::uint64_t kStreamNonPersistent = 0;
  static constexpr std::uint64_t kStreamCorrect = 1;
  static constexpr std::uint64_t kStreamFlip = 2;

  void check_vertex(Vertex v) const {
    if (v >= truth_.size()) throw InputError("oracle query for vertex " + std::to_string(v) + " out of range");
  }

  // Whether the fixed answer for v is wrong. The cap flip only turns correct
  // answers wrong, so incorrectness is (1/2 - eps) + p (1/2 + eps) = 1/4.
  bool persistent_error(Vertex v) const {
    const double correct_prob = 0.5 + config_.epsilon;
    const double flip_prob = config_.flip_probability();
    if (config_.mode == NoiseMode::persistent_kwise) {
      const bool wrong = !correct_hash_.biased_bit(v, correct_prob);
      const bool flip = flip_prob > 0.0 && flip_hash_.biased_bit(v, flip_prob);
      return wrong || flip;
    }
    const double u_correct = bits_to_unit(mix64(key_correct_ ^ v));
    const bool wrong = !(u_correct < correct_prob);
    bool flip = false;
    if (flip_prob > 0.0) {
      flip = bits_to_unit(mix64(key_flip_ ^ v)) < flip_prob;
    }
    return wrong || flip;
  }

  OracleConfig config_;
  std::vector<char> truth_;
  QueryLedger ledger_;
  SplitMix64 stream_;
  std::uint64_t key_correct_;
  std::uint64_t key_flip_;
  NormalSampler normal_;
  KWiseHash correct_hash_;
  KWiseHash flip_hash_;
};

/// Oracle for `instance`. Throws ConfigError on an invalid config or if the
/// planted set is not independent.
inline Oracle make_oracle(const PlantedInstance& instance, const OracleConfig& config) {
  config.validate();
  if (!is_independent_set(instance.graph, instance.planted)) {
    throw ConfigError("planted set is not an independent set of the instance graph");
  }
  return Oracle(instance.planted, config);
}

inline std::uint64_t total_queries(const Oracle& o) { return o.total_queries(); }

}  // namespace lamis
