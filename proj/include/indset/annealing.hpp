#pragma once

#include <gmpxx.h>

#include "indset/graph.hpp"
#include "indset/sample_k.hpp"

namespace indset {

// Per-level budget for the telescoping estimator of i_k.
struct AnnealingPlan {
  uint32_t k = 0;
  uint64_t m = 0;           // samples per level
  double epsilon = 0.0;     // overall relative-error target
  double delta_prime = 0.0; // per-level failure budget 1/(4k)

  // m = ceil(c_anneal * eps^-2 * k^2 * ln(max(e, k))), at least 1.
  static AnnealingPlan make(uint32_t k, double epsilon, double c_anneal = 0.5);
};

struct CountEstimate {
  double log_estimate = 0.0;      // ln of the i_k estimate
  std::vector<double> levels;     // t_hat_j for j = 0..k-1
  bool guarantee_valid = false;
};

// |V - (J union N(J))| for independent J.
uint32_t free_volume(const Graph& g, const VertexSet& j_set);

// Sized sampler seam: returns an independent set of the requested size.
using SizedSampler = std::function<VertexSet(uint32_t size, Rng rng)>;

// Sample mean of free_volume(J)/(j+1) over plan.m draws of J at size j;
// level 0 is deterministic (t_hat_0 = n). Every draw is checked against the
// arithmetic range n - j(max_degree+1) <= free volume <= n.
double estimate_level(const Graph& g, uint32_t j, const AnnealingPlan& plan,
                      double alpha, const SamplerConfig& cfg,
                      const SizedSampler* injected = nullptr);

// Telescoping product estimate of i_k(G). Runs whenever every sampled level
// is in-regime (k-1 <= floor(alpha n)); guarantee_valid additionally
// requires k <= floor(alpha n). A level estimate of zero is cross-checked
// against the exact oracle when the graph is small enough.
CountEstimate count_ik(const Graph& g, uint32_t k, double alpha, double epsilon,
                       const SamplerConfig& cfg, double c_anneal = 0.5,
                       uint32_t exact_limit = 40);
CountEstimate count_ik_with_sampler(const Graph& g, uint32_t k, double alpha,
                                    double epsilon, const SamplerConfig& cfg,
                                    const SizedSampler& sampler,
                                    double c_anneal = 0.5,
                                    uint32_t exact_limit = 40);

// Exact-rational telescoping from oracle level values; equals i_k(G).
mpq_class exact_telescoping(const Graph& g, uint32_t k, uint32_t exact_limit = 40);

}  // namespace indset
