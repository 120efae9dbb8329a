#include "indset/sample_k.hpp"

#include <algorithm>
#include <cmath>

#include "indset/thresholds.hpp"

namespace indset {

uint64_t SamplerConfig::loop_length(uint32_t n) const {
  if (!(c_loop > 0)) throw precondition_error("c_loop must be > 0");
  double ln_n = n >= 2 ? std::log(static_cast<double>(n)) : 1.0;
  return static_cast<uint64_t>(std::ceil(c_loop * std::max(1.0, ln_n)));
}

uint64_t SamplerConfig::n_per_iteration(uint32_t n) const {
  if (n_samples_override > 0) return n_samples_override;
  if (!(c_samples > 0)) throw precondition_error("c_samples must be > 0");
  if (!(epsilon > 0)) throw precondition_error("epsilon must be > 0");
  double ln_n = std::log(std::max<double>(n, 1));
  double inner = std::max(std::exp(1.0), ln_n / epsilon);
  double raw = c_samples * static_cast<double>(n) * n * std::log(inner);
  return std::max<uint64_t>(1, static_cast<uint64_t>(std::ceil(raw)));
}

void SamplerConfig::check_deadline() const {
  if (deadline && std::chrono::steady_clock::now() > *deadline)
    throw resource_error("wall-clock budget exceeded");
}

std::vector<double> lambda_grid(uint32_t n, double lambda_star) {
  if (n < 1) throw precondition_error("grid needs n >= 1");
  if (!(lambda_star > 0)) throw precondition_error("grid needs lambda_star > 0");
  double denom = 2.0 * static_cast<double>(n) * n;
  uint64_t t_max = static_cast<uint64_t>(std::floor(lambda_star * denom));
  std::vector<double> grid(t_max + 1);
  for (uint64_t t = 0; t <= t_max; ++t) grid[t] = static_cast<double>(t) / denom;
  return grid;
}

size_t median_lower_index(size_t len) {
  if (len == 0) throw precondition_error("median of empty range");
  return (len - 1) / 2;
}

double median_lower(const std::vector<double>& sorted) {
  return sorted.at(median_lower_index(sorted.size()));
}

namespace {

struct SearchSetup {
  double lambda_star;
  bool guarantee_valid;
};

SearchSetup validate(const Graph& g, uint32_t k, double alpha,
                     const SamplerConfig& cfg) {
  uint32_t n = g.vertex_count();
  if (k > n) throw precondition_error("k exceeds vertex count");
  uint32_t delta = effective_delta(g.max_degree());
  SearchSetup s{};
  if (cfg.mode == SampleMode::triangle_free) {
    if (!is_triangle_free(g))
      throw precondition_error("triangle_free mode on a graph with triangles");
    if (!(alpha > 0) || alpha >= 1.0 / delta)
      throw precondition_error("alpha must lie in (0, 1/delta)");
    s.lambda_star = lambda_star_triangle_free(delta);
  } else {
    // lambda_star rejects alpha outside (0, alpha_c(delta)).
    s.lambda_star = lambda_star(alpha, delta);
  }
  s.guarantee_valid = k >= 1 && k <= static_cast<uint64_t>(std::floor(alpha * n)) &&
                      cfg.n_samples_override == 0;
  return s;
}

SampleKResult run_search(const Graph& g, uint32_t k, double alpha,
                         const SamplerConfig& cfg,
                         const HardcoreSampler* injected) {
  uint32_t n = g.vertex_count();
  SearchSetup setup = validate(g, k, alpha, cfg);

  SampleKResult res;
  res.set = VertexSet(n);
  if (k == 0) {  // the empty set is the unique size-0 independent set
    res.trace.outcome = SearchOutcome::found;
    res.trace.guarantee_valid = true;
    return res;
  }

  auto grid = lambda_grid(n, setup.lambda_star);
  uint64_t loop_len = cfg.loop_length(n);
  uint64_t n_samples = cfg.n_per_iteration(n);
  double eps_prime =
      cfg.epsilon / (2.0 * static_cast<double>(loop_len) * static_cast<double>(n_samples));

  res.trace.guarantee_valid = setup.guarantee_valid;
  res.trace.initial_grid_size = grid.size();
  res.trace.loop_length = loop_len;
  res.trace.n_per_iteration = n_samples;
  res.trace.eps_prime = eps_prime;

  Rng root(cfg.seed);
  size_t lo = 0, hi = grid.size();
  for (uint64_t iter = 0; iter < loop_len && lo < hi; ++iter) {
    cfg.check_deadline();
    size_t mid = lo + median_lower_index(hi - lo);
    double lambda = grid[mid];
    Rng iter_rng = root.child(iter);

    uint64_t total_size = 0;
    int64_t first_hit = -1;
    VertexSet hit_set(n);
    if (injected) {
      for (uint64_t j = 0; j < n_samples; ++j) {
        VertexSet s = (*injected)(lambda, iter_rng.child(j));
        total_size += s.size();
        if (first_hit < 0 && s.size() == k) {
          first_hit = static_cast<int64_t>(j);
          hit_set = std::move(s);
        }
      }
    } else {
      BatchSizes b = sample_batch_sizes(g, lambda, eps_prime,
                                        static_cast<uint32_t>(n_samples), k,
                                        cfg.mixing, iter_rng, cfg.threads);
      total_size = b.total_size;
      first_hit = b.first_hit;
      hit_set = std::move(b.hit_set);
    }

    double kappa = static_cast<double>(total_size) / static_cast<double>(n_samples);
    SearchIteration rec{lambda, kappa, SearchBranch::halt, 0};
    if (std::fabs(kappa - k) <= 0.25 && first_hit >= 0) {
      rec.grid_remaining = hi - lo;
      res.trace.iterations.push_back(rec);
      res.trace.outcome = SearchOutcome::found;
      res.set = std::move(hit_set);
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
  res.set = greedy_independent_set(g, k);
  return res;
}

}  // namespace

SampleKResult sample_k(const Graph& g, uint32_t k, double alpha,
                       const SamplerConfig& cfg) {
  return run_search(g, k, alpha, cfg, nullptr);
}

SampleKResult sample_k_with_sampler(const Graph& g, uint32_t k, double alpha,
                                    const SamplerConfig& cfg,
                                    const HardcoreSampler& sampler) {
  return run_search(g, k, alpha, cfg, &sampler);
}

}  // namespace indset
