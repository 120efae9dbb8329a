#include "indset/ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

namespace indset {

namespace {

void check_b(double b) {
  if (!(b > 0.0) || b > 1.0)
    throw precondition_error("B must lie in (0, 1]");
}

}  // namespace

IsingCoefficients ising_partition_exact(const Graph& g, double b,
                                        uint32_t exact_limit) {
  check_b(b);
  exact_limit = std::min<uint32_t>(exact_limit, 24);
  uint32_t n = g.vertex_count();
  if (n > exact_limit) throw resource_error("graph exceeds Ising exact limit");

  std::vector<uint32_t> adj(n, 0);
  for (uint32_t v = 0; v < n; ++v)
    for (uint32_t u : g.neighbors(v)) adj[v] |= 1u << u;

  uint32_t m_edges = g.edge_count();
  std::vector<double> b_pow(m_edges + 1);
  b_pow[0] = 1.0;
  for (uint32_t i = 1; i <= m_edges; ++i) b_pow[i] = b_pow[i - 1] * b;

  IsingCoefficients out;
  out.b = b;
  out.c.assign(n + 1, 0.0);
  // cut[S] = edges with exactly one endpoint in S; monochromatic = |E| - cut.
  std::vector<uint16_t> cut(1ull << n, 0);
  out.c[0] += b_pow[m_edges];
  for (uint64_t mask = 1; mask < (1ull << n); ++mask) {
    uint32_t v = static_cast<uint32_t>(std::countr_zero(mask));
    uint64_t rest = mask & (mask - 1);
    cut[mask] = static_cast<uint16_t>(
        cut[rest] + g.degree(v) -
        2 * std::popcount(adj[v] & static_cast<uint32_t>(rest)));
    out.c[std::popcount(mask)] += b_pow[m_edges - cut[mask]];
  }
  return out;
}

double ising_partition_value(const IsingCoefficients& coeffs, double lambda) {
  if (lambda < 0) throw precondition_error("lambda must be >= 0");
  double acc = 0.0;
  for (size_t k = coeffs.c.size(); k-- > 0;) acc = acc * lambda + coeffs.c[k];
  return acc;
}

double ising_occupancy(const Graph& g, double b, double lambda,
                       uint32_t exact_limit) {
  uint32_t n = g.vertex_count();
  if (n == 0) throw precondition_error("occupancy needs n >= 1");
  if (!(lambda > 0)) throw precondition_error("occupancy needs lambda > 0");
  auto coeffs = ising_partition_exact(g, b, exact_limit);
  double z = 0.0, weighted = 0.0, pow_l = 1.0;
  for (uint32_t k = 0; k <= n; ++k) {
    z += coeffs.c[k] * pow_l;
    weighted += k * coeffs.c[k] * pow_l;
    pow_l *= lambda;
  }
  return weighted / (z * n);
}

IsingChain::IsingChain(const Graph& g, double b, Rng rng)
    : g_(&g), b_(b), rng_(rng), spins_(g.vertex_count(), 0),
      plus_nbrs_(g.vertex_count(), 0) {
  check_b(b);
  b_pow_.resize(g.max_degree() + 1);
  b_pow_[0] = 1.0;
  for (size_t i = 1; i < b_pow_.size(); ++i) b_pow_[i] = b_pow_[i - 1] * b;
}

void IsingChain::reset(Rng rng) {
  rng_ = rng;
  std::fill(spins_.begin(), spins_.end(), 0);
  std::fill(plus_nbrs_.begin(), plus_nbrs_.end(), 0);
  plus_count_ = 0;
  steps_taken_ = 0;
}

void IsingChain::step(double lambda) {
  if (!(lambda > 0)) throw precondition_error("lambda must be > 0");
  uint32_t n = g_->vertex_count();
  if (n == 0) return;
  uint32_t v = rng_.next_below(n);
  uint32_t p = plus_nbrs_[v];
  uint32_t d = g_->degree(v);
  double w_plus = lambda * b_pow_[p];
  double w_minus = b_pow_[d - p];
  bool new_plus = rng_.next_unit() * (w_plus + w_minus) < w_plus;
  if (new_plus != (spins_[v] != 0)) {
    int delta = new_plus ? 1 : -1;
    spins_[v] = new_plus ? 1 : 0;
    plus_count_ += delta;
    for (uint32_t u : g_->neighbors(v))
      plus_nbrs_[u] = static_cast<uint16_t>(plus_nbrs_[u] + delta);
  }
  ++steps_taken_;
}

void IsingChain::run(uint64_t steps, double lambda) {
  for (uint64_t t = 0; t < steps; ++t) step(lambda);
}

SpinAssignment IsingChain::current() const {
  return SpinAssignment{spins_, plus_count_};
}

bool IsingChain::audit() const {
  uint32_t total = 0;
  for (uint32_t v = 0; v < g_->vertex_count(); ++v) {
    uint32_t count = 0;
    for (uint32_t u : g_->neighbors(v)) count += spins_[u];
    if (count != plus_nbrs_[v]) return false;
    total += spins_[v];
  }
  return total == plus_count_;
}

SpinAssignment sample_ising(const Graph& g, double b, double lambda, double eps,
                            const MixingSchedule& schedule, Rng rng) {
  IsingChain chain(g, b, rng);
  chain.run(schedule.steps(g.vertex_count(), eps), lambda);
  return chain.current();
}

namespace {

struct SpinBatch {
  uint64_t total_plus = 0;
  int64_t first_hit = -1;
  SpinAssignment hit;
};

SpinBatch spin_batch(const Graph& g, double b, double lambda, uint64_t steps,
                     uint32_t n_samples, uint32_t k, Rng rng, unsigned threads) {
  auto run_range = [&](uint32_t begin, uint32_t end, SpinBatch& out) {
    IsingChain chain(g, b, rng.child(begin));
    for (uint32_t i = begin; i < end; ++i) {
      if (i != begin) chain.reset(rng.child(i));
      chain.run(steps, lambda);
      out.total_plus += chain.plus_count();
      if (out.first_hit < 0 && chain.plus_count() == k) {
        out.first_hit = i;
        out.hit = chain.current();
      }
    }
  };
  std::vector<SpinBatch> parts;
  if (threads <= 1 || n_samples == 1) {
    parts.resize(1);
    run_range(0, n_samples, parts[0]);
  } else {
    uint32_t chunk = (n_samples + threads - 1) / threads;
    parts.resize((n_samples + chunk - 1) / chunk);
    std::vector<std::thread> pool;
    for (uint32_t c = 0; c * chunk < n_samples; ++c) {
      uint32_t begin = c * chunk, end = std::min(n_samples, begin + chunk);
      pool.emplace_back([&, c, begin, end] { run_range(begin, end, parts[c]); });
    }
    for (auto& t : pool) t.join();
  }
  SpinBatch out;
  for (auto& p : parts) {
    out.total_plus += p.total_plus;
    if (p.first_hit >= 0 && (out.first_hit < 0 || p.first_hit < out.first_hit)) {
      out.first_hit = p.first_hit;
      out.hit = std::move(p.hit);
    }
  }
  return out;
}

SpinAssignment all_minus(uint32_t n) {
  return SpinAssignment{std::vector<uint8_t>(n, 0), 0};
}

}  // namespace

FixedMagnetizationResult sample_fixed_magnetization(const Graph& g, uint32_t k,
                                                    double alpha, double b,
                                                    double lambda_max,
                                                    const SamplerConfig& cfg) {
  check_b(b);
  uint32_t n = g.vertex_count();
  if (k > n) throw precondition_error("k exceeds vertex count");
  if (!(alpha > 0) || !(alpha < 1))
    throw precondition_error("alpha must lie in (0, 1)");
  if (!(lambda_max > 0)) throw precondition_error("lambda_max must be > 0");

  FixedMagnetizationResult res;
  res.sigma = all_minus(n);
  if (k == 0) {  // nu is a point mass at the all-minus state
    res.trace.outcome = SearchOutcome::found;
    res.trace.guarantee_valid = true;
    return res;
  }

  // Grid over (0, lambda_max]: drop the t=0 point.
  auto grid = lambda_grid(n, lambda_max);
  grid.erase(grid.begin());
  uint64_t loop_len = cfg.loop_length(n);
  uint64_t n_samples = cfg.n_per_iteration(n);
  double eps_prime = cfg.epsilon / (2.0 * static_cast<double>(loop_len) *
                                    static_cast<double>(n_samples));
  res.trace.guarantee_valid =
      k <= static_cast<uint64_t>(std::floor(alpha * n)) &&
      cfg.n_samples_override == 0;
  res.trace.initial_grid_size = grid.size();
  res.trace.loop_length = loop_len;
  res.trace.n_per_iteration = n_samples;
  res.trace.eps_prime = eps_prime;

  uint64_t steps = cfg.mixing.steps(n, eps_prime);
  Rng root(cfg.seed);
  size_t lo = 0, hi = grid.size();
  for (uint64_t iter = 0; iter < loop_len && lo < hi; ++iter) {
    cfg.check_deadline();
    size_t mid = lo + median_lower_index(hi - lo);
    double lambda = grid[mid];
    SpinBatch batch = spin_batch(g, b, lambda, steps,
                                 static_cast<uint32_t>(n_samples), k,
                                 root.child(iter), cfg.threads);
    double kappa =
        static_cast<double>(batch.total_plus) / static_cast<double>(n_samples);
    SearchIteration rec{lambda, kappa, SearchBranch::halt, 0};
    if (std::fabs(kappa - k) <= 0.25 && batch.first_hit >= 0) {
      rec.grid_remaining = hi - lo;
      res.trace.iterations.push_back(rec);
      res.trace.outcome = SearchOutcome::found;
      res.sigma = std::move(batch.hit);
      return res;
    }
    if (kappa <= static_cast<double>(k)) {
      rec.branch = SearchBranch::up;
      lo = mid + 1;
    } else {
      rec.branch = SearchBranch::down;
      hi = mid;
    }
    rec.grid_remaining = hi - lo;
    res.trace.iterations.push_back(rec);
  }

  res.trace.outcome = SearchOutcome::fallback;
  res.sigma = all_minus(n);
  for (uint32_t v = 0; v < k; ++v) res.sigma.plus[v] = 1;
  res.sigma.plus_count = k;
  return res;
}

CountEstimate count_coefficient(const Graph& g, uint32_t k, double alpha,
                                double b, double lambda_max, double epsilon,
                                const SamplerConfig& cfg, double c_anneal,
                                uint32_t exact_limit, const SpinSampler* injected) {
  check_b(b);
  uint32_t n = g.vertex_count();
  if (k > n) throw precondition_error("k exceeds vertex count");
  if (!(alpha > 0) || !(alpha < 1))
    throw precondition_error("alpha must lie in (0, 1)");

  CountEstimate est;
  double log_b = std::log(b);
  est.log_estimate = g.edge_count() * log_b;  // c_0 = B^{|E|}
  if (k == 0) {
    est.guarantee_valid = true;
    return est;
  }
  uint64_t alpha_cap = static_cast<uint64_t>(std::floor(alpha * n));
  if (static_cast<uint64_t>(k) - 1 > alpha_cap)
    throw precondition_error("k-1 exceeds floor(alpha n)");

  AnnealingPlan plan = AnnealingPlan::make(k, epsilon, c_anneal);
  est.guarantee_valid =
      static_cast<uint64_t>(k) <= alpha_cap && cfg.n_samples_override == 0;

  // delta(v, sigma) = #plus - #minus neighbors of v; value for one draw is
  // sum over minus vertices of B^delta, divided by j+1.
  auto level_value = [&](const SpinAssignment& sigma) {
    double sum = 0.0;
    for (uint32_t v = 0; v < n; ++v) {
      if (sigma.plus[v]) continue;
      int plus = 0;
      for (uint32_t u : g.neighbors(v)) plus += sigma.plus[u];
      int delta = 2 * plus - static_cast<int>(g.degree(v));
      sum += std::pow(b, delta);
    }
    return sum;
  };

  SamplerConfig level_cfg = cfg;
  level_cfg.epsilon = plan.delta_prime / 2.0;
  bool all_positive = true;
  for (uint32_t j = 0; j < k; ++j) {
    cfg.check_deadline();
    double t_j;
    if (j == 0) {
      // nu_0 is the all-minus point mass; the level is deterministic.
      t_j = level_value(all_minus(n));
    } else {
      Rng level_rng = Rng(cfg.seed).child(0x151C0ull).child(j);
      double total = 0.0;
      for (uint64_t i = 0; i < plan.m; ++i) {
        cfg.check_deadline();
        Rng draw_rng = level_rng.child(i);
        SpinAssignment sigma;
        if (injected) {
          sigma = (*injected)(j, draw_rng);
        } else {
          level_cfg.seed = draw_rng.next_u64();
          sigma = sample_fixed_magnetization(g, j, alpha, b, lambda_max,
                                             level_cfg).sigma;
        }
        if (sigma.plus_count != j)
          throw inconsistency_error("sampler returned wrong magnetization");
        total += level_value(sigma);
      }
      t_j = total / (static_cast<double>(plan.m) * (static_cast<double>(j) + 1.0));
    }
    est.levels.push_back(t_j);
    if (t_j > 0) {
      est.log_estimate += std::log(t_j);
    } else {
      all_positive = false;
      if (n <= exact_limit) {
        auto coeffs = ising_partition_exact(g, b, exact_limit);
        if (coeffs.c[j + 1] > 0)
          throw inconsistency_error(
              "level estimate is zero but the exact coefficient is positive");
      }
    }
  }
  if (!all_positive) {
    est.log_estimate = -HUGE_VAL;
    est.guarantee_valid = false;
  }
  return est;
}

double coefficient_ratio_exact(const Graph& g, double b, uint32_t j,
                               uint32_t exact_limit) {
  auto coeffs = ising_partition_exact(g, b, exact_limit);
  if (j + 1 >= coeffs.c.size()) throw precondition_error("level out of range");
  return coeffs.c[j + 1] / coeffs.c[j];
}

double ising_clique_occupancy_conjecture(uint32_t delta, double b, double lambda) {
  if (delta < 3) throw precondition_error("delta must be >= 3");
  if (delta + 1 > 24) throw resource_error("clique exceeds Ising exact limit");
  return ising_occupancy(gen_clique(delta + 1), b, lambda, 24);
}

}  // namespace indset
