#pragma once

#include "indset/bigpoly.hpp"
#include "indset/graph.hpp"

namespace indset {

// Replicated block H_{a,b} = a K_{delta,delta} + b K_{delta+1} with the
// fugacity at which its occupancy hits the target density.
struct GadgetSpec {
  uint32_t a = 0;
  uint32_t b = 0;
  uint32_t delta = 0;
  double lambda = 0.0;  // solves alpha_H(lambda) = alpha, > lambda_c(delta)
  double alpha = 0.0;
  uint32_t n_h = 0;     // 2 a delta + b (delta + 1)
};

struct ReductionInstance {
  Graph g_prime;        // G + r copies of H
  uint64_t r = 0;
  uint64_t k = 0;       // floor(alpha N)
  uint64_t n_total = 0; // N = n + r n_h
  GadgetSpec gadget;
  double epsilon = 0.0;
};

struct ReductionReport {
  double ln_ratio = 0.0;  // ln of R = i_k(G') / (i_k(rH) Z_G(lambda))
  bool within_eps = false; // |ln R| <= eps/2
  double log_ik_g_prime = 0.0;
  double log_ik_rh = 0.0;
  double log_z_g = 0.0;
  // |ln(i_{k-j}(rH)/i_k(rH)) - j ln lambda| for j = 0..n
  std::vector<double> per_size_log_error;
  bool per_size_within = false;
};

// Exact independence polynomial of one H block, via the closed forms
// i_j(K_{d,d}) = 2 C(d,j) for j >= 1 and i_j(K_{d+1}) = (1, d+1).
IndependencePolynomial gadget_block_polynomial(uint32_t a, uint32_t b,
                                               uint32_t delta);

// Mean independent-set density of H_{a,b} at fugacity lambda.
double gadget_occupancy(uint32_t a, uint32_t b, uint32_t delta, double lambda);

// Scans the fixed pair list (0,1),(1,16),(1,6),(1,3),(2,3),(2,1),(1,0) for
// the first pair whose feasibility window alpha_H(lambda_c) < alpha <
// (a delta + b)/n_h contains alpha, then bisects lambda to the occupancy
// equation. Requires alpha in (alpha_c(delta), 1/2).
GadgetSpec find_gadget(double alpha, uint32_t delta);

// r = ceil(c_reduction * delta * n^2 / epsilon) unless r_override > 0.
ReductionInstance build_instance(const Graph& g, double alpha, double epsilon,
                                 double c_reduction = 1.0,
                                 uint64_t r_override = 0);

// Exact big-integer check of the ratio R = i_k(G')/(i_k(rH) Z_G(lambda)).
ReductionReport verify_reduction(const Graph& g, const ReductionInstance& inst,
                                 uint32_t exact_limit = 40,
                                 uint64_t degree_cap = 500000);

// Exact variance of |I| on one H block at the gadget fugacity; throws if it
// falls below the 0.00384/delta floor.
double gadget_variance_floor(const GadgetSpec& spec);

}  // namespace indset
