#pragma once

#include <span>

#include "indset/bigpoly.hpp"
#include "indset/graph.hpp"

namespace indset {

// Exact Boltzmann distribution of |I| for I ~ mu_{G,lambda}.
struct SizeDistribution {
  double lambda = 0.0;
  std::vector<double> probabilities;  // p_k = i_k lambda^k / Z
  double mean = 0.0;
  double variance = 0.0;
};

// Exact coefficients i_0..i_M. Components with <= 25 vertices are counted by
// bitmask enumeration; larger ones by include/exclude recursion on a
// max-degree vertex with connected-component factorization. exact_limit is
// clamped at 64 (per-coefficient counts must fit 64 bits).
IndependencePolynomial independence_polynomial(const Graph& g,
                                               uint32_t exact_limit = 40);

SizeDistribution size_distribution(const IndependencePolynomial& p, double lambda);
SizeDistribution size_distribution(const Graph& g, double lambda,
                                   uint32_t exact_limit = 40);

// alpha_G(lambda) = lambda Z' / (n Z) = E|I| / n.
double exact_occupancy(const Graph& g, double lambda, uint32_t exact_limit = 40);

// Var |I| under mu_{G,lambda}.
double exact_variance(const Graph& g, double lambda, uint32_t exact_limit = 40);

// Half L1 distance between two distributions on the same support.
double exact_tv_distance(std::span<const double> p, std::span<const double> q);

}  // namespace indset
