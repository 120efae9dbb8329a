#include "indset/thresholds.hpp"

#include <cmath>

#include "indset/errors.hpp"

namespace indset {

namespace {

void check_delta(uint32_t delta, uint32_t cap = 1000000) {
  if (delta < 3) throw precondition_error("delta must be >= 3");
  if (delta > cap) throw precondition_error("delta too large");
}

}  // namespace

double lambda_c(uint32_t delta) {
  check_delta(delta);
  double base = static_cast<double>(delta - 1) / (delta - 2);
  return std::pow(base, static_cast<double>(delta - 1)) / (delta - 2);
}

mpq_class lambda_c_exact(uint32_t delta) {
  check_delta(delta, 10000);
  mpz_class num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), delta - 1, delta - 1);
  mpz_ui_pow_ui(den.get_mpz_t(), delta - 2, delta);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

double alpha_c(uint32_t delta) {
  double lc = lambda_c(delta);
  return lc / (1.0 + (static_cast<double>(delta) + 1.0) * lc);
}

mpq_class alpha_c_exact(uint32_t delta) {
  mpq_class lc = lambda_c_exact(delta);
  mpq_class a = lc / (1 + (delta + 1) * lc);
  a.canonicalize();
  return a;
}

double lambda_star(double alpha, uint32_t delta) {
  check_delta(delta);
  if (!(alpha > 0.0) || alpha >= alpha_c(delta))
    throw precondition_error("alpha must lie in (0, alpha_c(delta))");
  return alpha / (1.0 - alpha * (static_cast<double>(delta) + 1.0));
}

double lambda_star_triangle_free(uint32_t delta) {
  check_delta(delta);
  return lambda_c(delta) - 1.0 / (static_cast<double>(delta) * delta);
}

double clique_occupancy(uint32_t delta, double lambda) {
  check_delta(delta);
  if (lambda < 0) throw precondition_error("lambda must be >= 0");
  return lambda / (1.0 + lambda * (static_cast<double>(delta) + 1.0));
}

uint32_t effective_delta(uint32_t max_degree) {
  return max_degree < 3 ? 3 : max_degree;
}

}  // namespace indset
