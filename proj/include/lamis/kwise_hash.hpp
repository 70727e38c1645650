#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "lamis/errors.hpp"
#include "lamis/random.hpp"

namespace lamis {

/// Random polynomial of degree k-1 over F_q with q = 2^31 - 1. Values at
/// distinct points are k-wise independent and uniform on [0, q).
class KWiseHash {
 public:
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 31) - 1;

  KWiseHash(unsigned k, std::uint64_t seed) {
    if (k < 2) throw ConfigError("k-wise hash needs k >= 2");
    SplitMix64 rng(seed);
    coefficients_.resize(k);
    for (auto& c : coefficients_) c = uniform_below(rng, kPrime);
  }

  unsigned independence() const noexcept { return static_cast<unsigned>(coefficients_.size()); }

  /// Horner evaluation; all intermediates stay below 2^62.
  std::uint64_t operator()(std::uint64_t x) const noexcept {
    x %= kPrime;
    std::uint64_t acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
      acc = (acc * x + *it) % kPrime;
    }
    return acc;
  }

  /// Biased bit: true iff h(x) < floor(bias * q). Realized bias is within 1/q of `bias`.
  bool biased_bit(std::uint64_t x, double bias) const noexcept { return (*this)(x) < threshold(bias); }

  static std::uint64_t threshold(double bias) noexcept {
    if (bias <= 0.0) return 0;
    if (bias >= 1.0) return kPrime;
    return static_cast<std::uint64_t>(std::floor(bias * static_cast<double>(kPrime)));
  }

 private:
  std::vector<std::uint64_t> coefficients_;
};

/// One-shot evaluation of the biased k-wise bit for vertex `v`; coefficients
/// are drawn from `seed`. Prefer holding a KWiseHash when evaluating many points.
inline bool kwise_answer(std::uint64_t seed, unsigned k, std::uint64_t v, double bias) {
  return KWiseHash(k, seed).biased_bit(v, bias);
}

}  // namespace lamis
