#include "indset/annealing.hpp"

#include <cmath>

#include "indset/exact_oracle.hpp"
#include "indset/thresholds.hpp"

namespace indset {

AnnealingPlan AnnealingPlan::make(uint32_t k, double epsilon, double c_anneal) {
  if (k < 1) throw precondition_error("plan needs k >= 1");
  if (!(epsilon > 0)) throw precondition_error("epsilon must be > 0");
  if (!(c_anneal > 0)) throw precondition_error("c_anneal must be > 0");
  AnnealingPlan p;
  p.k = k;
  p.epsilon = epsilon;
  p.delta_prime = 1.0 / (4.0 * k);
  double raw = c_anneal * static_cast<double>(k) * k / (epsilon * epsilon) *
               std::log(std::max(std::exp(1.0), static_cast<double>(k)));
  p.m = std::max<uint64_t>(1, static_cast<uint64_t>(std::ceil(raw)));
  return p;
}

uint32_t free_volume(const Graph& g, const VertexSet& j_set) {
  if (!is_independent(g, j_set)) throw precondition_error("J must be independent");
  uint32_t n = g.vertex_count();
  std::vector<uint8_t> covered(n, 0);
  for (uint32_t v : j_set.to_sorted()) {
    covered[v] = 1;
    for (uint32_t u : g.neighbors(v)) covered[u] = 1;
  }
  uint32_t free = 0;
  for (uint32_t v = 0; v < n; ++v) free += !covered[v];
  return free;
}

double estimate_level(const Graph& g, uint32_t j, const AnnealingPlan& plan,
                      double alpha, const SamplerConfig& cfg,
                      const SizedSampler* injected) {
  uint32_t n = g.vertex_count();
  if (j >= plan.k) throw precondition_error("level must satisfy j <= k-1");
  if (j == 0) return static_cast<double>(n);  // free volume of the empty set

  // Per-level sampler accuracy: half the failure budget goes to TV distance.
  SamplerConfig level_cfg = cfg;
  level_cfg.epsilon = plan.delta_prime / 2.0;

  int64_t min_fv = static_cast<int64_t>(n) -
                   static_cast<int64_t>(j) * (static_cast<int64_t>(g.max_degree()) + 1);
  Rng level_rng = Rng(cfg.seed).child(0xA22Eull).child(j);
  uint64_t total = 0;
  for (uint64_t i = 0; i < plan.m; ++i) {
    cfg.check_deadline();
    Rng draw_rng = level_rng.child(i);
    VertexSet j_set;
    if (injected) {
      j_set = (*injected)(j, draw_rng);
    } else {
      level_cfg.seed = draw_rng.next_u64();
      j_set = sample_k(g, j, alpha, level_cfg).set;
    }
    if (j_set.size() != j) throw inconsistency_error("sampler returned wrong size");
    uint32_t fv = free_volume(g, j_set);
    if (static_cast<int64_t>(fv) < min_fv || fv > n)
      throw inconsistency_error("free volume outside arithmetic range");
    total += fv;
  }
  return static_cast<double>(total) /
         (static_cast<double>(plan.m) * (static_cast<double>(j) + 1.0));
}

namespace {

CountEstimate run_count(const Graph& g, uint32_t k, double alpha, double epsilon,
                        const SamplerConfig& cfg, const SizedSampler* injected,
                        double c_anneal, uint32_t exact_limit) {
  uint32_t n = g.vertex_count();
  if (k > n) throw precondition_error("k exceeds vertex count");
  uint32_t delta = effective_delta(g.max_degree());
  if (!(alpha > 0) || alpha >= alpha_c(delta))
    throw precondition_error("alpha must lie in (0, alpha_c(delta))");

  CountEstimate est;
  if (k == 0) {  // empty product
    est.guarantee_valid = true;
    return est;
  }
  uint64_t alpha_cap = static_cast<uint64_t>(std::floor(alpha * n));
  // Levels sample at sizes 1..k-1 only, so k-1 in-regime suffices to run.
  if (k >= 1 && static_cast<uint64_t>(k) - 1 > alpha_cap)
    throw precondition_error("k-1 exceeds floor(alpha n)");

  AnnealingPlan plan = AnnealingPlan::make(k, epsilon, c_anneal);
  est.guarantee_valid = static_cast<uint64_t>(k) <= alpha_cap &&
                        cfg.n_samples_override == 0;
  bool all_positive = true;
  for (uint32_t j = 0; j < k; ++j) {
    cfg.check_deadline();
    double t_j = estimate_level(g, j, plan, alpha, cfg, injected);
    est.levels.push_back(t_j);
    if (t_j > 0) {
      est.log_estimate += std::log(t_j);
    } else {
      all_positive = false;
      if (n <= exact_limit) {
        auto poly = independence_polynomial(g, exact_limit);
        if (j + 1 <= poly.degree() && poly.coeff(j + 1) > 0)
          throw inconsistency_error(
              "level estimate is zero but the exact count is positive");
      }
    }
  }
  if (!all_positive) {
    est.log_estimate = -HUGE_VAL;
    est.guarantee_valid = false;
  }
  return est;
}

}  // namespace

CountEstimate count_ik(const Graph& g, uint32_t k, double alpha, double epsilon,
                       const SamplerConfig& cfg, double c_anneal,
                       uint32_t exact_limit) {
  return run_count(g, k, alpha, epsilon, cfg, nullptr, c_anneal, exact_limit);
}

CountEstimate count_ik_with_sampler(const Graph& g, uint32_t k, double alpha,
                                    double epsilon, const SamplerConfig& cfg,
                                    const SizedSampler& sampler, double c_anneal,
                                    uint32_t exact_limit) {
  return run_count(g, k, alpha, epsilon, cfg, &sampler, c_anneal, exact_limit);
}

mpq_class exact_telescoping(const Graph& g, uint32_t k, uint32_t exact_limit) {
  auto poly = independence_polynomial(g, exact_limit);
  if (k > poly.degree()) return mpq_class(0);
  // t_j = f_j/(j+1) with f_j = (j+1) i_{j+1}/i_j; the product telescopes.
  mpq_class acc(1);
  for (uint32_t j = 0; j < k; ++j) {
    mpq_class f_j = mpq_class((j + 1) * poly.coeff(j + 1), poly.coeff(j));
    f_j.canonicalize();
    acc *= f_j / (j + 1);
  }
  acc.canonicalize();
  return acc;
}

}  // namespace indset
