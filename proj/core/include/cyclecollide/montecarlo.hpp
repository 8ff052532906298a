#pragma once

// Monte Carlo estimate of the cycle-count collision probability.

#include <cstdint>
#include <string_view>
#include <vector>

#include "cyclecollide/philox.hpp"

namespace cyclecollide::mc {

enum class SamplerKind {
  /// Fisher-Yates shuffle, then count cycles by traversal.
  PermutationDirect,
  /// 1 + sum_{j=2}^n Bernoulli(1/j): the Feller coupling, a classical fact
  /// about uniform permutations used here as an independent sampler.
  BernoulliSum,
};

std::string_view to_string(SamplerKind kind);

/// Direct sampling above this n needs an n-length buffer per draw;
/// default_sampler() switches to BernoulliSum there.
inline constexpr std::uint32_t kDirectSamplerLimit = 10'000;

SamplerKind default_sampler(std::uint32_t n);

struct Seed {
  std::uint64_t value = 0;
  friend bool operator==(const Seed&, const Seed&) = default;
};

struct McEstimate {
  std::uint32_t n = 0;
  std::uint64_t samples = 0;
  std::uint64_t collisions = 0;
  double p_hat = 0.0;
  double std_err = 0.0;

  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

/// Reusable sampler state; keeps the permutation buffer between draws.
class CycleCountSampler {
 public:
  CycleCountSampler(SamplerKind kind, std::uint32_t n);

  std::uint32_t operator()(PhiloxStream& rng);

  SamplerKind kind() const noexcept { return kind_; }
  std::uint32_t n() const noexcept { return n_; }

 private:
  std::uint32_t draw_direct(PhiloxStream& rng);
  std::uint32_t draw_bernoulli(PhiloxStream& rng) const;

  SamplerKind kind_;
  std::uint32_t n_;
  std::vector<std::uint32_t> perm_;
  std::vector<std::uint8_t> seen_;
};

/// One draw of the number of cycles of a uniform permutation of n letters.
/// Throws std::domain_error for n = 0.
std::uint32_t sample_cycle_count(SamplerKind kind, std::uint32_t n, PhiloxStream& rng);

/// Trials per generator stream. Trials [c * kChunk, (c + 1) * kChunk) always
/// use stream c, whichever worker runs them.
inline constexpr std::uint64_t kChunkTrials = 8192;

/// Draws `pairs` independent ordered pairs of cycle counts and counts equal
/// pairs. workers = 0 uses the hardware concurrency. The result depends only
/// on (n, pairs, kind, seed).
McEstimate estimate_collision(std::uint32_t n, std::uint64_t pairs, SamplerKind kind,
                              Seed seed, unsigned workers = 0);

/// Histogram of `draws` cycle counts; element k - 1 counts draws equal to k.
std::vector<std::uint64_t> cycle_count_histogram(SamplerKind kind, std::uint32_t n,
                                                 std::uint64_t draws, Seed seed,
                                                 unsigned workers = 0);

struct ChiSquareResult {
  double statistic = 0.0;
  unsigned degrees_of_freedom = 0;
  double p_value = 1.0;
  unsigned bins = 0;
};

/// Pearson goodness-of-fit of `observed` against `probs`. Adjacent categories
/// are pooled until every bin expects at least 5 counts.
ChiSquareResult chi_square_gof(const std::vector<std::uint64_t>& observed,
                               const std::vector<double>& probs);

}  // namespace cyclecollide::mc
