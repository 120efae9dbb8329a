#pragma once

#include <cstdint>
#include <vector>

#include "indset/graph.hpp"
#include "indset/rng.hpp"

namespace indset {

// Burn-in schedule: steps(n, eps) = ceil(c_mix * n * ln(n/eps)), floored at 0.
struct MixingSchedule {
  double c_mix = 2.0;
  uint64_t steps(uint32_t n, double eps) const;
};

// Glauber dynamics state for the hard-core model on a fixed graph.
// blocked_[v] counts neighbors of v in the current set; the current set is
// independent at all times, so members always have blocked_[v] == 0.
class ChainState {
 public:
  explicit ChainState(const Graph& g, Rng rng);

  // Back to the empty set with a fresh stream; graph unchanged.
  void reset(Rng rng);

  // One transition: draw v uniformly, propose insert with prob
  // lambda/(1+lambda) else delete, insert only if unblocked.
  // Exactly one vertex draw and one Bernoulli draw.
  void step(double lambda);

  // steps transitions at fixed lambda (precomputes the Bernoulli threshold).
  void run(uint64_t steps, double lambda);

  uint32_t size() const { return size_; }
  uint64_t steps_taken() const { return steps_taken_; }
  bool contains(uint32_t v) const { return in_set_[v] != 0; }
  VertexSet current() const;

  // Recomputes the blocked counts from scratch and checks independence.
  bool audit() const;

 private:
  void step_with_threshold(uint64_t insert_threshold);

  const Graph* g_;
  Rng rng_;
  std::vector<uint8_t> in_set_;
  std::vector<uint16_t> blocked_;
  uint32_t size_ = 0;
  uint64_t steps_taken_ = 0;
};

// True when the rapid-mixing guarantee applies at this fugacity:
// lambda < lambda_c(effective_delta(max_degree)).
bool hardcore_guarantee(const Graph& g, double lambda);

// Burn-in from the empty set, return the final state.
VertexSet sample_hardcore(const Graph& g, double lambda, double eps,
                          const MixingSchedule& schedule, Rng rng);

// N independent chains on substreams rng.child(0..N-1). threads > 1 splits
// the index range; outputs are positionally deterministic either way.
std::vector<VertexSet> sample_batch(const Graph& g, double lambda, double eps,
                                    uint32_t n_samples,
                                    const MixingSchedule& schedule, Rng rng,
                                    unsigned threads = 1);

// Batch reduced to sizes plus first index with size == k (or -1), enough for
// the fixed-size search loop and cheaper than materializing N sets.
struct BatchSizes {
  uint64_t total_size = 0;
  int64_t first_hit = -1;
  VertexSet hit_set;
};
BatchSizes sample_batch_sizes(const Graph& g, double lambda, double eps,
                              uint32_t n_samples, uint32_t k,
                              const MixingSchedule& schedule, Rng rng,
                              unsigned threads = 1);

}  // namespace indset
