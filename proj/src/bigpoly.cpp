#include "indset/bigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace indset {

IndependencePolynomial::IndependencePolynomial(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_[0] != 1)
    throw precondition_error("polynomial must have constant term 1");
  for (const auto& c : coeffs_)
    if (c < 0) throw precondition_error("negative coefficient");
  if (coeffs_.back() == 0 && coeffs_.size() > 1)
    throw precondition_error("trailing zero coefficient");
}

IndependencePolynomial convolve(const IndependencePolynomial& a,
                                const IndependencePolynomial& b) {
  std::vector<mpz_class> out(a.degree() + b.degree() + 1, mpz_class(0));
  for (uint32_t i = 0; i <= a.degree(); ++i)
    for (uint32_t j = 0; j <= b.degree(); ++j) out[i + j] += a.coeff(i) * b.coeff(j);
  return IndependencePolynomial(std::move(out));
}

IndependencePolynomial poly_power(const IndependencePolynomial& p, uint64_t r,
                                  uint64_t degree_cap) {
  if (r < 1) throw precondition_error("poly_power needs r >= 1");
  if (degree_cap != 0 && static_cast<uint64_t>(p.degree()) * r > degree_cap)
    throw resource_error("poly_power result degree exceeds cap");
  IndependencePolynomial acc({mpz_class(1)});
  IndependencePolynomial base = p;
  while (r > 0) {
    if (r & 1) acc = convolve(acc, base);
    r >>= 1;
    if (r > 0) base = convolve(base, base);
  }
  return acc;
}

double log_mpz(const mpz_class& z) {
  if (z <= 0) throw precondition_error("log of non-positive integer");
  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

double evaluate_partition(const IndependencePolynomial& p, double lambda) {
  if (lambda < 0) throw precondition_error("lambda must be >= 0");
  // Horner, highest coefficient first.
  double acc = 0.0;
  for (uint32_t k = p.degree() + 1; k-- > 0;)
    acc = acc * lambda + mpz_get_d(p.coeff(k).get_mpz_t());
  return acc;
}

double log_evaluate_partition(const IndependencePolynomial& p, double lambda) {
  if (lambda < 0) throw precondition_error("lambda must be >= 0");
  if (lambda == 0) return 0.0;
  double log_lambda = std::log(lambda);
  double max_term = -HUGE_VAL;
  std::vector<double> terms(p.degree() + 1);
  for (uint32_t k = 0; k <= p.degree(); ++k) {
    terms[k] = log_mpz(p.coeff(k)) + k * log_lambda;
    max_term = std::max(max_term, terms[k]);
  }
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - max_term);
  return max_term + std::log(sum);
}

}  // namespace indset
