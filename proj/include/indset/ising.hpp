#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "indset/annealing.hpp"
#include "indset/graph.hpp"
#include "indset/rng.hpp"
#include "indset/sample_k.hpp"

namespace indset {

// Anti-ferromagnetic regime: edge weight B in (0,1), external field lambda.
struct IsingParams {
  double b = 0.0;
  double lambda = 0.0;
  uint32_t delta = 0;
  // Uniqueness threshold on the Delta-regular tree at lambda = 1.
  double b_c() const { return (static_cast<double>(delta) - 2.0) / delta; }
};

struct SpinAssignment {
  std::vector<uint8_t> plus;  // 1 = plus spin
  uint32_t plus_count = 0;
};

// Coefficients c_k(G,B) = sum over sigma with k plus spins of B^{m(sigma)},
// m = monochromatic edge count; Z(B,lambda) = sum_k c_k lambda^k.
struct IsingCoefficients {
  double b = 0.0;
  std::vector<double> c;  // k = 0..n
};

// Exact coefficient vector by subset enumeration with incremental cut
// counts; limit clamped at 24 (2^n uint16 table).
IsingCoefficients ising_partition_exact(const Graph& g, double b,
                                        uint32_t exact_limit = 22);
double ising_partition_value(const IsingCoefficients& coeffs, double lambda);

// Expected fraction of plus spins, lambda d/dlambda log Z / n.
double ising_occupancy(const Graph& g, double b, double lambda,
                       uint32_t exact_limit = 22);

// Heat-bath single-site dynamics: the chosen vertex is resampled from its
// conditional law, weights lambda B^{#plus nbrs} : B^{#minus nbrs}.
class IsingChain {
 public:
  IsingChain(const Graph& g, double b, Rng rng);

  void reset(Rng rng);  // all-minus start
  void step(double lambda);
  void run(uint64_t steps, double lambda);

  uint32_t plus_count() const { return plus_count_; }
  uint64_t steps_taken() const { return steps_taken_; }
  bool is_plus(uint32_t v) const { return spins_[v] != 0; }
  SpinAssignment current() const;
  bool audit() const;

 private:
  const Graph* g_;
  double b_;
  std::vector<double> b_pow_;  // B^0..B^maxdeg
  Rng rng_;
  std::vector<uint8_t> spins_;
  std::vector<uint16_t> plus_nbrs_;
  uint32_t plus_count_ = 0;
  uint64_t steps_taken_ = 0;
};

SpinAssignment sample_ising(const Graph& g, double b, double lambda, double eps,
                            const MixingSchedule& schedule, Rng rng);

struct FixedMagnetizationResult {
  SpinAssignment sigma;
  SearchTrace trace;
};

// Fixed-size search reused over spin systems: grid over lambda in
// (0, lambda_max], binary search on mean plus count, accept on exact k.
// Fallback assigns + to the k lowest-indexed vertices. The conditional law
// nu_{G,B,k} does not depend on which lambda accepted.
FixedMagnetizationResult sample_fixed_magnetization(const Graph& g, uint32_t k,
                                                    double alpha, double b,
                                                    double lambda_max,
                                                    const SamplerConfig& cfg);

// Telescoping estimate of c_k from c_0 = B^{|E|} and the level identity
// c_{j+1}/c_j = E_{nu_j}[ sum_{v: sigma(v)=-} B^{delta(v,sigma)} ] / (j+1),
// delta(v,sigma) = #plus-neighbors - #minus-neighbors of v.
using SpinSampler = std::function<SpinAssignment(uint32_t k, Rng rng)>;
CountEstimate count_coefficient(const Graph& g, uint32_t k, double alpha,
                                double b, double lambda_max, double epsilon,
                                const SamplerConfig& cfg, double c_anneal = 0.5,
                                uint32_t exact_limit = 22,
                                const SpinSampler* injected = nullptr);

// One level value computed exactly from the coefficient identity; test and
// cross-check path for the estimator above.
double coefficient_ratio_exact(const Graph& g, double b, uint32_t j,
                               uint32_t exact_limit = 22);

// Occupancy of the clique K_{delta+1} at (B, lambda): the conjectured
// minimizer of occupancy over max-degree-delta graphs. Reported as
// conjecture only.
double ising_clique_occupancy_conjecture(uint32_t delta, double b, double lambda);

}  // namespace indset
