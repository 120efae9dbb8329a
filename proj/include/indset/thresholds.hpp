#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace indset {

// Critical fugacity (Delta-1)^(Delta-1) / (Delta-2)^Delta. Computed as
// ((Delta-1)/(Delta-2))^(Delta-1) / (Delta-2): the base stays below 2, so the
// power never overflows and no separate log-domain branch is needed.
// Delta in [3, 10^6].
double lambda_c(uint32_t delta);
mpq_class lambda_c_exact(uint32_t delta);  // Delta <= 10^4

// Critical density lambda_c / (1 + (Delta+1) lambda_c).
double alpha_c(uint32_t delta);
mpq_class alpha_c_exact(uint32_t delta);  // Delta <= 10^4

// Fugacity at which the clique K_{Delta+1} has occupancy alpha:
// alpha / (1 - alpha (Delta+1)). Requires 0 < alpha < alpha_c(Delta).
double lambda_star(double alpha, uint32_t delta);

// lambda_c(Delta) - 1/Delta^2, the triangle-free search bound.
double lambda_star_triangle_free(uint32_t delta);

// Occupancy of K_{Delta+1} at lambda: lambda / (1 + lambda (Delta+1)).
// The minimum occupancy over graphs of max degree <= Delta.
double clique_occupancy(uint32_t delta, double lambda);

// Degree argument for threshold formulas: max(3, max degree).
// Safe because alpha_c and lambda_c decrease in Delta.
uint32_t effective_delta(uint32_t max_degree);

}  // namespace indset
