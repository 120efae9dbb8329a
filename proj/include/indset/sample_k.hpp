#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "indset/glauber.hpp"
#include "indset/graph.hpp"

namespace indset {

enum class SampleMode { general, triangle_free };

struct SamplerConfig {
  double c_loop = 3.0;    // loop length multiplier C
  double c_samples = 1.0; // per-iteration sample multiplier C'
  double epsilon = 0.05;  // target total variation distance
  uint64_t seed = 0;
  MixingSchedule mixing{};
  SampleMode mode = SampleMode::general;
  // 0 = theoretical N; any override clears the TV guarantee flag.
  uint64_t n_samples_override = 0;
  unsigned threads = 1;
  // Wall-clock budget; checked between search iterations / annealing levels.
  std::optional<std::chrono::steady_clock::time_point> deadline;

  uint64_t loop_length(uint32_t n) const;
  uint64_t n_per_iteration(uint32_t n) const;
  void check_deadline() const;  // throws resource_error when past
};

enum class SearchBranch { halt, up, down };
enum class SearchOutcome { found, fallback };

struct SearchIteration {
  double lambda = 0.0;
  double kappa = 0.0;
  SearchBranch branch = SearchBranch::halt;
  uint64_t grid_remaining = 0;
};

struct SearchTrace {
  std::vector<SearchIteration> iterations;
  SearchOutcome outcome = SearchOutcome::found;
  bool guarantee_valid = false;
  uint64_t initial_grid_size = 0;
  uint64_t loop_length = 0;
  uint64_t n_per_iteration = 0;
  double eps_prime = 0.0;
};

struct SampleKResult {
  VertexSet set;
  SearchTrace trace;
};

// Fugacity grid {t/(2n^2) : t = 0..floor(2 lambda_star n^2)}.
std::vector<double> lambda_grid(uint32_t n, double lambda_star);

// Lower median: index floor((len-1)/2) of a sorted range.
size_t median_lower_index(size_t len);
double median_lower(const std::vector<double>& sorted);

// Binary search over the fugacity grid for mean size ~= k, halting on a
// batch that contains a size-k sample; greedy fallback on exhaustion.
// Preconditions: k <= n; 0 < alpha < alpha_c(effective_delta) in general
// mode, alpha < 1/effective_delta and triangle-free input in triangle_free
// mode. k <= floor(alpha n) is the guarantee condition, not a gate: runs
// violating it proceed and come back with guarantee_valid = false.
SampleKResult sample_k(const Graph& g, uint32_t k, double alpha,
                       const SamplerConfig& cfg);

// Test seam: same search loop with the hard-core sampler replaced. The
// sampler receives (lambda, substream) and must return a set for g.
using HardcoreSampler = std::function<VertexSet(double lambda, Rng rng)>;
SampleKResult sample_k_with_sampler(const Graph& g, uint32_t k, double alpha,
                                    const SamplerConfig& cfg,
                                    const HardcoreSampler& sampler);

}  // namespace indset
