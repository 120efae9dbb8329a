#include "indset/reduction.hpp"

#include <array>
#include <cmath>

#include "indset/exact_oracle.hpp"
#include "indset/thresholds.hpp"

namespace indset {

namespace {

// i_j(K_{d,d}): one side or the other, empty set counted once.
IndependencePolynomial bipartite_block_polynomial(uint32_t d) {
  std::vector<mpz_class> coeffs(d + 1);
  for (uint32_t j = 0; j <= d; ++j) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), d, j);
    coeffs[j] = j == 0 ? mpz_class(1) : mpz_class(2 * binom);
  }
  return IndependencePolynomial(std::move(coeffs));
}

IndependencePolynomial clique_block_polynomial(uint32_t d) {
  return IndependencePolynomial({mpz_class(1), mpz_class(d + 1)});
}

}  // namespace

IndependencePolynomial gadget_block_polynomial(uint32_t a, uint32_t b,
                                               uint32_t delta) {
  if (delta < 3) throw precondition_error("gadget needs delta >= 3");
  if (a == 0 && b == 0) throw precondition_error("empty gadget");
  IndependencePolynomial acc({mpz_class(1)});
  if (a > 0) acc = poly_power(bipartite_block_polynomial(delta), a);
  if (b > 0) acc = convolve(acc, poly_power(clique_block_polynomial(delta), b));
  return acc;
}

double gadget_occupancy(uint32_t a, uint32_t b, uint32_t delta, double lambda) {
  uint32_t n_h = 2 * a * delta + b * (delta + 1);
  if (n_h == 0) throw precondition_error("empty gadget");
  // Mean size of a disjoint union is the sum of block mean sizes.
  double mean = 0.0;
  if (a > 0)
    mean += a * size_distribution(bipartite_block_polynomial(delta), lambda).mean;
  if (b > 0)
    mean += b * size_distribution(clique_block_polynomial(delta), lambda).mean;
  return mean / n_h;
}

GadgetSpec find_gadget(double alpha, uint32_t delta) {
  if (delta < 3) throw precondition_error("delta must be >= 3");
  double ac = alpha_c(delta);
  if (!(alpha > ac) || !(alpha < 0.5))
    throw precondition_error("alpha must lie in (alpha_c(delta), 1/2)");

  constexpr std::array<std::pair<uint32_t, uint32_t>, 7> kPairs{
      {{0, 1}, {1, 16}, {1, 6}, {1, 3}, {2, 3}, {2, 1}, {1, 0}}};
  double lc = lambda_c(delta);
  for (auto [a, b] : kPairs) {
    uint32_t n_h = 2 * a * delta + b * (delta + 1);
    double window_lo = gadget_occupancy(a, b, delta, lc);
    double window_hi = static_cast<double>(a * delta + b) / n_h;
    if (!(window_lo < alpha && alpha < window_hi)) continue;

    // Occupancy is strictly increasing in lambda; bracket then bisect.
    double lo = lc, hi = std::max(2.0 * lc, lc + 1.0);
    int doublings = 0;
    while (gadget_occupancy(a, b, delta, hi) <= alpha) {
      hi *= 2.0;
      if (++doublings > 200) throw inconsistency_error("occupancy bracket failed");
    }
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if (gadget_occupancy(a, b, delta, mid) < alpha) lo = mid;
      else hi = mid;
    }
    double lambda = 0.5 * (lo + hi);
    if (std::fabs(gadget_occupancy(a, b, delta, lambda) - alpha) > 1e-10)
      throw inconsistency_error("occupancy equation not solved to tolerance");
    return GadgetSpec{a, b, delta, lambda, alpha, n_h};
  }
  throw inconsistency_error("no feasible gadget pair for alpha in the open window");
}

ReductionInstance build_instance(const Graph& g, double alpha, double epsilon,
                                 double c_reduction, uint64_t r_override) {
  uint32_t n = g.vertex_count();
  if (n == 0) throw precondition_error("reduction needs n >= 1");
  uint32_t delta = g.max_degree();
  if (delta < 3) throw precondition_error("reduction needs delta >= 3");
  if (!is_regular(g, delta)) throw precondition_error("input must be regular");
  if (!(epsilon > 0)) throw precondition_error("epsilon must be > 0");
  if (!(c_reduction > 0)) throw precondition_error("c_reduction must be > 0");

  ReductionInstance inst;
  inst.gadget = find_gadget(alpha, delta);
  inst.epsilon = epsilon;
  inst.r = r_override > 0
               ? r_override
               : static_cast<uint64_t>(
                     std::ceil(c_reduction * delta * static_cast<double>(n) * n /
                               epsilon));
  inst.n_total = n + inst.r * inst.gadget.n_h;
  inst.k = static_cast<uint64_t>(std::floor(alpha * static_cast<double>(inst.n_total)));
  Graph h = gen_gadget(inst.gadget.a, inst.gadget.b, delta);
  inst.g_prime = disjoint_union(g, disjoint_copies(h, inst.r));
  return inst;
}

ReductionReport verify_reduction(const Graph& g, const ReductionInstance& inst,
                                 uint32_t exact_limit, uint64_t degree_cap) {
  const GadgetSpec& spec = inst.gadget;
  auto p_g = independence_polynomial(g, exact_limit);
  auto p_h = gadget_block_polynomial(spec.a, spec.b, spec.delta);
  auto p_rh = poly_power(p_h, inst.r, degree_cap);

  if (inst.k > p_rh.degree() + static_cast<uint64_t>(p_g.degree()))
    throw precondition_error("k exceeds the independence number of G'");

  // i_k(G') = sum_j i_j(G) i_{k-j}(rH), exact.
  mpz_class ik_g_prime(0);
  for (uint32_t j = 0; j <= p_g.degree(); ++j) {
    if (j > inst.k) break;
    uint64_t rest = inst.k - j;
    if (rest > p_rh.degree()) continue;
    ik_g_prime += p_g.coeff(j) * p_rh.coeff(static_cast<uint32_t>(rest));
  }
  if (inst.k > p_rh.degree() || p_rh.coeff(static_cast<uint32_t>(inst.k)) == 0)
    throw precondition_error("i_k(rH) vanishes; r too small for this k");

  ReductionReport rep;
  rep.log_ik_g_prime = log_mpz(ik_g_prime);
  rep.log_ik_rh = log_mpz(p_rh.coeff(static_cast<uint32_t>(inst.k)));
  rep.log_z_g = log_evaluate_partition(p_g, spec.lambda);
  rep.ln_ratio = rep.log_ik_g_prime - rep.log_ik_rh - rep.log_z_g;
  rep.within_eps = std::fabs(rep.ln_ratio) <= inst.epsilon / 2.0;

  double log_lambda = std::log(spec.lambda);
  rep.per_size_within = true;
  for (uint32_t j = 0; j <= g.vertex_count() && j <= inst.k; ++j) {
    double log_coeff = log_mpz(p_rh.coeff(static_cast<uint32_t>(inst.k - j)));
    double err = std::fabs(log_coeff - rep.log_ik_rh - j * log_lambda);
    rep.per_size_log_error.push_back(err);
    if (err > inst.epsilon / 2.0) rep.per_size_within = false;
  }
  return rep;
}

double gadget_variance_floor(const GadgetSpec& spec) {
  if (spec.n_h == 0 || spec.delta < 3) throw precondition_error("invalid gadget");
  auto p_h = gadget_block_polynomial(spec.a, spec.b, spec.delta);
  double variance = size_distribution(p_h, spec.lambda).variance;
  if (variance < 0.00384 / spec.delta)
    throw inconsistency_error("gadget variance below floor");
  return variance;
}

}  // namespace indset
