#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "indset/errors.hpp"

namespace indset {

// Coefficient vector (i_0, ..., i_M) of an independence polynomial:
// exact non-negative integers, i_0 = 1, no trailing zero.
class IndependencePolynomial {
 public:
  explicit IndependencePolynomial(std::vector<mpz_class> coeffs);

  // Degree M = independence number of the underlying graph.
  uint32_t degree() const { return static_cast<uint32_t>(coeffs_.size() - 1); }
  const mpz_class& coeff(uint32_t k) const { return coeffs_.at(k); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  bool operator==(const IndependencePolynomial&) const = default;

 private:
  std::vector<mpz_class> coeffs_;
};

// Product polynomial; models the disjoint union of the underlying graphs.
IndependencePolynomial convolve(const IndependencePolynomial& a,
                                const IndependencePolynomial& b);

// P^r by binary exponentiation; models r disjoint copies. degree_cap bounds
// the result degree (resource guard), 0 = unlimited.
IndependencePolynomial poly_power(const IndependencePolynomial& p, uint64_t r,
                                  uint64_t degree_cap = 0);

// ln of a positive big integer, accurate to double precision.
double log_mpz(const mpz_class& z);

// Z(lambda) = sum_k i_k lambda^k in double precision; lambda >= 0.
double evaluate_partition(const IndependencePolynomial& p, double lambda);

// ln Z(lambda), log-domain (safe for huge coefficients / degrees).
double log_evaluate_partition(const IndependencePolynomial& p, double lambda);

}  // namespace indset
