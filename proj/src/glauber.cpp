#include "indset/glauber.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "indset/thresholds.hpp"

namespace indset {

uint64_t MixingSchedule::steps(uint32_t n, double eps) const {
  if (!(eps > 0.0)) throw precondition_error("eps must be > 0");
  if (!(c_mix > 0.0)) throw precondition_error("c_mix must be > 0");
  if (n == 0) return 0;
  double raw = c_mix * static_cast<double>(n) * std::log(n / eps);
  return raw <= 0.0 ? 0 : static_cast<uint64_t>(std::ceil(raw));
}

ChainState::ChainState(const Graph& g, Rng rng)
    : g_(&g), rng_(rng), in_set_(g.vertex_count(), 0),
      blocked_(g.vertex_count(), 0) {}

void ChainState::reset(Rng rng) {
  rng_ = rng;
  std::fill(in_set_.begin(), in_set_.end(), 0);
  std::fill(blocked_.begin(), blocked_.end(), 0);
  size_ = 0;
  steps_taken_ = 0;
}

void ChainState::step_with_threshold(uint64_t insert_threshold) {
  uint32_t v = rng_.next_below(g_->vertex_count());
  bool insert = rng_.next_below_threshold(insert_threshold);
  if (insert) {
    if (!in_set_[v] && blocked_[v] == 0) {
      in_set_[v] = 1;
      ++size_;
      for (uint32_t u : g_->neighbors(v)) ++blocked_[u];
    }
  } else if (in_set_[v]) {
    in_set_[v] = 0;
    --size_;
    for (uint32_t u : g_->neighbors(v)) --blocked_[u];
  }
  ++steps_taken_;
}

void ChainState::step(double lambda) {
  if (lambda < 0) throw precondition_error("lambda must be >= 0");
  if (g_->vertex_count() == 0) return;
  step_with_threshold(Rng::bernoulli_threshold(lambda / (1.0 + lambda)));
}

void ChainState::run(uint64_t steps, double lambda) {
  if (lambda < 0) throw precondition_error("lambda must be >= 0");
  if (g_->vertex_count() == 0) return;
  uint64_t threshold = Rng::bernoulli_threshold(lambda / (1.0 + lambda));
  for (uint64_t t = 0; t < steps; ++t) step_with_threshold(threshold);
}

VertexSet ChainState::current() const {
  VertexSet s(g_->vertex_count());
  for (uint32_t v = 0; v < g_->vertex_count(); ++v)
    if (in_set_[v]) s.insert(v);
  return s;
}

bool ChainState::audit() const {
  for (uint32_t v = 0; v < g_->vertex_count(); ++v) {
    uint32_t count = 0;
    for (uint32_t u : g_->neighbors(v)) count += in_set_[u];
    if (count != blocked_[v]) return false;
    if (in_set_[v] && count != 0) return false;
  }
  return true;
}

bool hardcore_guarantee(const Graph& g, double lambda) {
  return lambda < lambda_c(effective_delta(g.max_degree()));
}

VertexSet sample_hardcore(const Graph& g, double lambda, double eps,
                          const MixingSchedule& schedule, Rng rng) {
  ChainState state(g, rng);
  state.run(schedule.steps(g.vertex_count(), eps), lambda);
  return state.current();
}

namespace {

// Runs chains for indices [begin, end) on substreams rng.child(i).
template <typename Consume>
void run_chunk(const Graph& g, double lambda, uint64_t steps, Rng rng,
               uint32_t begin, uint32_t end, Consume&& consume) {
  ChainState state(g, rng.child(begin));
  for (uint32_t i = begin; i < end; ++i) {
    if (i != begin) state.reset(rng.child(i));
    state.run(steps, lambda);
    consume(i, state);
  }
}

}  // namespace

std::vector<VertexSet> sample_batch(const Graph& g, double lambda, double eps,
                                    uint32_t n_samples,
                                    const MixingSchedule& schedule, Rng rng,
                                    unsigned threads) {
  if (n_samples < 1) throw precondition_error("need n_samples >= 1");
  uint64_t steps = schedule.steps(g.vertex_count(), eps);
  std::vector<VertexSet> out(n_samples);
  auto consume = [&](uint32_t i, const ChainState& s) { out[i] = s.current(); };
  if (threads <= 1 || n_samples == 1) {
    run_chunk(g, lambda, steps, rng, 0, n_samples, consume);
    return out;
  }
  uint32_t chunk = (n_samples + threads - 1) / threads;
  std::vector<std::thread> pool;
  for (uint32_t begin = 0; begin < n_samples; begin += chunk) {
    uint32_t end = std::min(n_samples, begin + chunk);
    pool.emplace_back(
        [&, begin, end] { run_chunk(g, lambda, steps, rng, begin, end, consume); });
  }
  for (auto& t : pool) t.join();
  return out;
}

BatchSizes sample_batch_sizes(const Graph& g, double lambda, double eps,
                              uint32_t n_samples, uint32_t k,
                              const MixingSchedule& schedule, Rng rng,
                              unsigned threads) {
  if (n_samples < 1) throw precondition_error("need n_samples >= 1");
  uint64_t steps = schedule.steps(g.vertex_count(), eps);
  struct Partial {
    uint64_t total = 0;
    int64_t first_hit = -1;
    VertexSet hit;
  };
  auto run_range = [&](uint32_t begin, uint32_t end, Partial& p) {
    run_chunk(g, lambda, steps, rng, begin, end,
              [&](uint32_t i, const ChainState& s) {
                p.total += s.size();
                if (p.first_hit < 0 && s.size() == k) {
                  p.first_hit = i;
                  p.hit = s.current();
                }
              });
  };
  std::vector<Partial> parts;
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
  BatchSizes out;
  out.hit_set = VertexSet(g.vertex_count());
  for (const auto& p : parts) {
    out.total_size += p.total;
    if (p.first_hit >= 0 && (out.first_hit < 0 || p.first_hit < out.first_hit)) {
      out.first_hit = p.first_hit;
      out.hit_set = p.hit;
    }
  }
  return out;
}

}  // namespace indset
