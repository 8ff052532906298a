#include "cyclecollide/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

namespace cyclecollide::mc {

namespace {

void require_positive(std::uint32_t n, const char* what) {
  if (n == 0) {
    throw std::domain_error(std::string(what) + ": n must be >= 1");
  }
}

unsigned resolve_workers(unsigned requested, std::uint64_t chunks) {
  unsigned w = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (chunks < w) {
    w = static_cast<unsigned>(std::max<std::uint64_t>(1, chunks));
  }
  return w;
}

// Runs body(chunk_index, trials_in_chunk, accumulator&) across workers and
// merges accumulators with merge(total, part). Merge must be order-independent.
template <typename Acc, typename Body, typename Merge>
Acc run_chunks(std::uint64_t trials, unsigned workers, Acc init, Body body, Merge merge) {
  const std::uint64_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
  const unsigned w = resolve_workers(workers, chunks);
  std::atomic<std::uint64_t> next{0};
  std::vector<Acc> parts(w, init);

  auto worker = [&](unsigned id) {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks) break;
      const std::uint64_t begin = c * kChunkTrials;
      const std::uint64_t count = std::min(kChunkTrials, trials - begin);
      body(c, count, parts[id]);
    }
  };

  if (w == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(w);
    for (unsigned id = 0; id < w; ++id) {
      pool.emplace_back(worker, id);
    }
  }
  Acc total = init;
  for (const auto& p : parts) {
    merge(total, p);
  }
  return total;
}

}  // namespace

std::string_view to_string(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::PermutationDirect:
      return "permutation";
    case SamplerKind::BernoulliSum:
      return "bernoulli";
  }
  return "unknown";
}

SamplerKind default_sampler(std::uint32_t n) {
  return n > kDirectSamplerLimit ? SamplerKind::BernoulliSum : SamplerKind::PermutationDirect;
}

CycleCountSampler::CycleCountSampler(SamplerKind kind, std::uint32_t n) : kind_(kind), n_(n) {
  require_positive(n, "CycleCountSampler");
  if (kind_ == SamplerKind::PermutationDirect) {
    perm_.resize(n);
    seen_.resize(n);
  }
}

std::uint32_t CycleCountSampler::operator()(PhiloxStream& rng) {
  return kind_ == SamplerKind::PermutationDirect ? draw_direct(rng) : draw_bernoulli(rng);
}

std::uint32_t CycleCountSampler::draw_direct(PhiloxStream& rng) {
  std::iota(perm_.begin(), perm_.end(), 0u);
  for (std::uint32_t i = n_ - 1; i > 0; --i) {
    const auto j = static_cast<std::uint32_t>(rng.bounded(std::uint64_t{i} + 1));
    std::swap(perm_[i], perm_[j]);
  }
  std::fill(seen_.begin(), seen_.end(), std::uint8_t{0});
  std::uint32_t cycles = 0;
  for (std::uint32_t start = 0; start < n_; ++start) {
    if (seen_[start]) continue;
    ++cycles;
    for (std::uint32_t x = start; !seen_[x]; x = perm_[x]) {
      seen_[x] = 1;
    }
  }
  return cycles;
}

std::uint32_t CycleCountSampler::draw_bernoulli(PhiloxStream& rng) const {
  std::uint32_t cycles = 1;
  for (std::uint32_t j = 2; j <= n_; ++j) {
    cycles += rng.bounded(j) == 0 ? 1u : 0u;
  }
  return cycles;
}

std::uint32_t sample_cycle_count(SamplerKind kind, std::uint32_t n, PhiloxStream& rng) {
  CycleCountSampler sampler(kind, n);
  return sampler(rng);
}

McEstimate estimate_collision(std::uint32_t n, std::uint64_t pairs, SamplerKind kind,
                              Seed seed, unsigned workers) {
  require_positive(n, "estimate_collision");
  if (pairs == 0) {
    throw std::invalid_argument("estimate_collision: pairs must be >= 1");
  }
  const std::uint64_t collisions = run_chunks<std::uint64_t>(
      pairs, workers, 0,
      [&](std::uint64_t chunk, std::uint64_t count, std::uint64_t& acc) {
        PhiloxStream rng(seed.value, chunk);
        CycleCountSampler sampler(kind, n);
        for (std::uint64_t t = 0; t < count; ++t) {
          const std::uint32_t a = sampler(rng);
          const std::uint32_t b = sampler(rng);
          acc += a == b ? 1 : 0;
        }
      },
      [](std::uint64_t& total, std::uint64_t part) { total += part; });

  McEstimate out;
  out.n = n;
  out.samples = pairs;
  out.collisions = collisions;
  out.p_hat = static_cast<double>(collisions) / static_cast<double>(pairs);
  out.std_err = std::sqrt(out.p_hat * (1.0 - out.p_hat) / static_cast<double>(pairs));
  return out;
}

std::vector<std::uint64_t> cycle_count_histogram(SamplerKind kind, std::uint32_t n,
                                                 std::uint64_t draws, Seed seed,
                                                 unsigned workers) {
  require_positive(n, "cycle_count_histogram");
  using Hist = std::vector<std::uint64_t>;
  return run_chunks<Hist>(
      draws, workers, Hist(n, 0),
      [&](std::uint64_t chunk, std::uint64_t count, Hist& acc) {
        PhiloxStream rng(seed.value, chunk);
        CycleCountSampler sampler(kind, n);
        for (std::uint64_t t = 0; t < count; ++t) {
          ++acc[sampler(rng) - 1];
        }
      },
      [](Hist& total, const Hist& part) {
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += part[i];
      });
}

ChiSquareResult chi_square_gof(const std::vector<std::uint64_t>& observed,
                               const std::vector<double>& probs) {
  if (observed.size() != probs.size() || observed.empty()) {
    throw std::invalid_argument("chi_square_gof: size mismatch");
  }
  const double total = static_cast<double>(
      std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  if (total == 0.0) {
    throw std::invalid_argument("chi_square_gof: no observations");
  }

  std::vector<double> obs_bins;
  std::vector<double> exp_bins;
  double o = 0.0;
  double e = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    o += static_cast<double>(observed[i]);
    e += probs[i] * total;
    if (e >= 5.0) {
      obs_bins.push_back(o);
      exp_bins.push_back(e);
      o = 0.0;
      e = 0.0;
    }
  }
  if (e > 0.0 || o > 0.0) {
    if (exp_bins.empty()) {
      obs_bins.push_back(o);
      exp_bins.push_back(e);
    } else {
      obs_bins.back() += o;
      exp_bins.back() += e;
    }
  }

  ChiSquareResult out;
  out.bins = static_cast<unsigned>(obs_bins.size());
  for (std::size_t i = 0; i < obs_bins.size(); ++i) {
    const double d = obs_bins[i] - exp_bins[i];
    out.statistic += d * d / exp_bins[i];
  }
  if (out.bins < 2) {
    out.degrees_of_freedom = 0;
    out.p_value = 1.0;
    return out;
  }
  out.degrees_of_freedom = out.bins - 1;
  const boost::math::chi_squared dist(out.degrees_of_freedom);
  out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  return out;
}

}  // namespace cyclecollide::mc
