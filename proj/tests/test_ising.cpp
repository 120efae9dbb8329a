#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "indset/graph.hpp"
#include "indset/ising.hpp"
#include "support/oracles.hpp"

using namespace indset;

TEST_SUITE("ising") {

TEST_CASE("exact coefficients on a triangle at B = 1/2") {
  // All eight assignments of K_3: c = (1/8, 3/2, 3/2, 1/8).
  auto co = ising_partition_exact(gen_clique(3), 0.5);
  REQUIRE(co.c.size() == 4);
  CHECK(co.c[0] == 0.125);
  CHECK(co.c[1] == 1.5);
  CHECK(co.c[2] == 1.5);
  CHECK(co.c[3] == 0.125);
  CHECK(ising_partition_value(co, 1.0) == 3.25);
}

TEST_CASE("coefficient basics") {
  // Single vertex: no edges, c = (1, 1).
  auto single = ising_partition_exact(Graph::from_edges(1, {}), 0.3);
  REQUIRE(single.c.size() == 2);
  CHECK(single.c[0] == 1.0);
  CHECK(single.c[1] == 1.0);

  // B = 1 removes the interaction: Z = (1 + lambda)^n.
  auto free3 = ising_partition_exact(gen_clique(3), 1.0);
  for (double lam : {0.5, 1.0, 2.0})
    CHECK(ising_partition_value(free3, lam) ==
          doctest::Approx(std::pow(1 + lam, 3)).epsilon(1e-13));

  CHECK_THROWS_AS(ising_partition_exact(gen_clique(3), 0.0),
                  precondition_error);
  CHECK_THROWS_AS(ising_partition_exact(gen_clique(3), 1.5),
                  precondition_error);
  CHECK_THROWS_AS(ising_partition_exact(gen_random_regular(26, 3, 1), 0.5, 24),
                  resource_error);
}

TEST_CASE("coefficients agree with the exact rational oracle") {
  Rng rng(606);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = testsupport::random_graph_max_degree(8, 4, 0.4, rng);
    // Dyadic B keeps the rational oracle exact and the double sums tight.
    auto co = ising_partition_exact(g, 0.5);
    auto exact = testsupport::ising_coefficients_exact(g, mpq_class(1, 2));
    REQUIRE(co.c.size() == exact.size());
    for (size_t k = 0; k < exact.size(); ++k)
      CHECK(co.c[k] == doctest::Approx(exact[k].get_d()).epsilon(1e-12));
  }
}

TEST_CASE("plus-minus symmetry of the coefficients") {
  // Flipping every spin preserves monochromatic edges: c_k = c_{n-k}.
  Rng rng(607);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = testsupport::random_graph_max_degree(9, 4, 0.4, rng);
    for (double b : {0.37, 0.5, 0.9}) {
      auto co = ising_partition_exact(g, b);
      uint32_t n = g.vertex_count();
      for (uint32_t k = 0; k <= n; ++k)
        CHECK(co.c[k] == doctest::Approx(co.c[n - k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("field inversion symmetry of the partition value") {
  // Z(B, lambda) = lambda^n Z(B, 1/lambda) via the same flip.
  Graph g = gen_petersen();
  auto co = ising_partition_exact(g, 0.6);
  for (double lam : {0.5, 2.0, 3.0}) {
    double lhs = ising_partition_value(co, lam);
    double rhs = std::pow(lam, 10) * ising_partition_value(co, 1.0 / lam);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("occupancy derivative identity") {
  // ising_occupancy = lambda (d/dlambda) ln Z / n, checked by central
  // differences on ln Z.
  Graph g = gen_clique(3);
  const double h = 1e-6;
  for (double b : {0.4, 0.8}) {
    auto co = ising_partition_exact(g, b);
    for (double lam : {0.5, 1.0, 2.5}) {
      double fd = (std::log(ising_partition_value(co, lam + h)) -
                   std::log(ising_partition_value(co, lam - h))) /
                  (2 * h);
      CHECK(ising_occupancy(g, b, lam) ==
            doctest::Approx(lam * fd / 3.0).epsilon(1e-7));
    }
  }
  // B = 1: independent spins, occupancy lambda/(1+lambda).
  CHECK(ising_occupancy(gen_petersen(), 1.0, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("uniqueness threshold constant") {
  CHECK(IsingParams{0.5, 1.0, 3}.b_c() == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(IsingParams{0.5, 1.0, 4}.b_c() == 0.5);
}

TEST_CASE("heat-bath chain on an isolated vertex") {
  // Conditional law with no neighbors: plus with odds lambda : 1.
  Graph g = Graph::from_edges(1, {});
  Rng root(1);
  int plus = 0;
  const int trials = 40000;
  for (int i = 0; i < trials; ++i) {
    IsingChain chain(g, 0.5, root.child(i));
    chain.step(1.0);
    plus += chain.plus_count();
  }
  CHECK(std::abs(plus / double(trials) - 0.5) < 0.01);
}

TEST_CASE("chain time averages match the stationary law on an edge") {
  // K_2 at B = 1/2, lambda = 1: state weights (B, 1, 1, B), Z = 3.
  Graph g = gen_clique(2);
  IsingChain chain(g, 0.5, Rng(2));
  uint64_t counts[4] = {0, 0, 0, 0};
  const int steps = 600000;
  for (int i = 0; i < steps; ++i) {
    chain.step(1.0);
    counts[(chain.is_plus(0) ? 1 : 0) | (chain.is_plus(1) ? 2 : 0)] += 1;
  }
  CHECK(std::abs(counts[0] / double(steps) - 1.0 / 6) < 0.01);
  CHECK(std::abs(counts[1] / double(steps) - 1.0 / 3) < 0.01);
  CHECK(std::abs(counts[2] / double(steps) - 1.0 / 3) < 0.01);
  CHECK(std::abs(counts[3] / double(steps) - 1.0 / 6) < 0.01);
  CHECK(chain.audit());
  CHECK(chain.steps_taken() == steps);
}

TEST_CASE("burned-in magnetization matches the exact law") {
  Graph g = gen_clique(3);
  auto co = ising_partition_exact(g, 0.5);
  double z = ising_partition_value(co, 1.0);
  std::vector<double> probs(4);
  for (int k = 0; k <= 3; ++k) probs[k] = co.c[k] / z;
  MixingSchedule sched;
  std::vector<uint64_t> counts(4, 0);
  Rng root(3);
  const int n_samples = 20000;
  for (int i = 0; i < n_samples; ++i) {
    SpinAssignment s = sample_ising(g, 0.5, 1.0, 0.01, sched, root.child(i));
    ++counts[s.plus_count];
  }
  CHECK(testsupport::tv_from_counts(counts, probs) < 0.02);
}

TEST_CASE("fixed magnetization sampler basics") {
  Graph g = gen_clique(3);
  SamplerConfig cfg;
  cfg.seed = 4;

  auto zero = sample_fixed_magnetization(g, 0, 0.34, 0.5, 1.0, cfg);
  CHECK(zero.sigma.plus_count == 0);
  CHECK(zero.trace.outcome == SearchOutcome::found);

  auto one = sample_fixed_magnetization(g, 1, 0.34, 0.5, 1.0, cfg);
  CHECK(one.sigma.plus_count == 1);

  CHECK_THROWS_AS(sample_fixed_magnetization(g, 4, 0.34, 0.5, 1.0, cfg),
                  precondition_error);
  CHECK_THROWS_AS(sample_fixed_magnetization(g, 1, 0.34, 0.5, 0.0, cfg),
                  precondition_error);
  CHECK_THROWS_AS(sample_fixed_magnetization(g, 1, 0.34, 1.5, 1.0, cfg),
                  precondition_error);
}

TEST_CASE("fixed magnetization on a symmetric triangle is uniform") {
  // K_3 at B = 1/2, k = 1: by symmetry each vertex is equally likely.
  Graph g = gen_clique(3);
  SamplerConfig cfg;
  cfg.epsilon = 0.05;
  std::map<uint32_t, uint64_t> counts;
  const int runs = 3000;
  for (int i = 0; i < runs; ++i) {
    cfg.seed = 7000 + i;
    auto res = sample_fixed_magnetization(g, 1, 0.34, 0.5, 1.0, cfg);
    REQUIRE(res.sigma.plus_count == 1);
    for (uint32_t v = 0; v < 3; ++v)
      if (res.sigma.plus[v]) counts[v] += 1;
  }
  CHECK(testsupport::tv_uniform(counts, 3) < 0.05);
}

TEST_CASE("fixed magnetization on the path matches the conditional law") {
  // P_3 with B = 1/2, k = 1: conditional law (1/4, 1/2, 1/4) because the
  // middle vertex breaks fewer edges.
  Graph g = gen_path(3);
  SamplerConfig cfg;
  cfg.epsilon = 0.05;
  std::vector<uint64_t> counts(3, 0);
  const int runs = 4000;
  for (int i = 0; i < runs; ++i) {
    cfg.seed = 8000 + i;
    auto res = sample_fixed_magnetization(g, 1, 0.3, 0.5, 1.0, cfg);
    REQUIRE(res.sigma.plus_count == 1);
    for (uint32_t v = 0; v < 3; ++v)
      if (res.sigma.plus[v]) ++counts[v];
  }
  CHECK(testsupport::tv_from_counts(counts, {0.25, 0.5, 0.25}) < 0.05);
}

TEST_CASE("fallback assigns the lowest-indexed vertices") {
  // lambda_max below the grid spacing empties the search grid, so the
  // search falls through immediately.
  Graph g = gen_petersen();
  SamplerConfig cfg;
  cfg.seed = 5;
  auto res = sample_fixed_magnetization(g, 5, 0.51, 0.5, 1e-9, cfg);
  CHECK(res.trace.outcome == SearchOutcome::fallback);
  CHECK(res.trace.iterations.empty());
  CHECK(res.sigma.plus_count == 5);
  for (uint32_t v = 0; v < 5; ++v) CHECK(res.sigma.plus[v] == 1);
  for (uint32_t v = 5; v < 10; ++v) CHECK(res.sigma.plus[v] == 0);
}

TEST_CASE("ratio identity against enumeration") {
  // c_{j+1}/c_j = E_{nu_j}[sum over minus vertices of B^{(plus - minus)
  // neighbors}] / (j + 1), checked exactly on small graphs.
  Rng rng(608);
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = testsupport::random_graph_max_degree(7, 4, 0.4, rng);
    for (double b : {0.4, 0.7}) {
      auto co = ising_partition_exact(g, b);
      for (uint32_t j = 0; j + 1 <= g.vertex_count(); ++j) {
        double expect = testsupport::ising_level_expectation(g, b, j) / (j + 1);
        CHECK(coefficient_ratio_exact(g, b, j) ==
              doctest::Approx(expect).epsilon(1e-10));
        CHECK(co.c[j + 1] / co.c[j] ==
              doctest::Approx(expect).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("triangle ratio in closed form") {
  // K_3, B = 1/2: c_1/c_0 = (3/2)/(1/8) = 12 and the all-minus level value
  // is 3 B^{-2} = 12.
  CHECK(coefficient_ratio_exact(gen_clique(3), 0.5, 0) ==
        doctest::Approx(12.0).epsilon(1e-13));
}

TEST_CASE("coefficient counting gates and exact low levels") {
  Graph g = gen_clique(3);
  SamplerConfig cfg;
  cfg.seed = 6;

  auto zero = count_coefficient(g, 0, 0.34, 0.5, 1.0, 0.3, cfg);
  CHECK(zero.log_estimate ==
        doctest::Approx(3 * std::log(0.5)).epsilon(1e-13));
  CHECK(zero.guarantee_valid);

  // k = 1 needs only the deterministic all-minus level: c_1 = 3/2.
  auto one = count_coefficient(g, 1, 0.34, 0.5, 1.0, 0.3, cfg);
  CHECK(one.log_estimate == doctest::Approx(std::log(1.5)).epsilon(1e-12));
  REQUIRE(one.levels.size() == 1);
  CHECK(one.levels[0] == doctest::Approx(12.0 / 1.0).epsilon(1e-12));

  CHECK_THROWS_AS(count_coefficient(g, 3, 0.34, 0.5, 1.0, 0.3, cfg),
                  precondition_error);
  CHECK_THROWS_AS(count_coefficient(g, 1, 0.0, 0.5, 1.0, 0.3, cfg),
                  precondition_error);
  CHECK_THROWS_AS(count_coefficient(g, 1, 0.34, 0.0, 1.0, 0.3, cfg),
                  precondition_error);
}

TEST_CASE("estimated coefficients track the exact values with the seam") {
  // P_4 at B = 1/2, k = 2: exact c_2 from the rational oracle; the exact
  // conditional-law seam removes chain error.
  Graph g = gen_path(4);
  auto exact = testsupport::ising_coefficients_exact(g, mpq_class(1, 2));
  auto seam = testsupport::exact_spin_sampler(g, 0.5);
  int within = 0;
  const int trials = 10;
  for (int t = 0; t < trials; ++t) {
    SamplerConfig cfg;
    cfg.seed = 1900 + t;
    SpinSampler injected = seam;
    auto est = count_coefficient(g, 2, 0.49, 0.5, 1.0, 0.3, cfg, 0.5, 22,
                                 &injected);
    REQUIRE(est.levels.size() == 2);
    if (std::abs(est.log_estimate - std::log(exact[2].get_d())) < 0.3)
      ++within;
  }
  CHECK(within >= 9);
}

TEST_CASE("wrong-size spin draws are an inconsistency") {
  Graph g = gen_path(4);
  SpinSampler bad = [](uint32_t, Rng) {
    SpinAssignment s;
    s.plus.assign(4, 0);
    return s;
  };
  SamplerConfig cfg;
  CHECK_THROWS_AS(
      count_coefficient(g, 2, 0.49, 0.5, 1.0, 0.3, cfg, 0.5, 22, &bad),
      inconsistency_error);
}

TEST_CASE("clique occupancy conjecture value") {
  // At B = 1 the clique spins decouple: occupancy lambda/(1+lambda).
  CHECK(ising_clique_occupancy_conjecture(3, 1.0, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ising_clique_occupancy_conjecture(3, 0.5, 1.0) ==
        doctest::Approx(ising_occupancy(gen_clique(4), 0.5, 1.0))
            .epsilon(1e-12));
  CHECK_THROWS_AS(ising_clique_occupancy_conjecture(2, 0.5, 1.0),
                  precondition_error);
}

TEST_CASE("determinism of the spin search") {
  Graph g = gen_path(3);
  SamplerConfig cfg;
  cfg.seed = 12345;
  auto a = sample_fixed_magnetization(g, 1, 0.3, 0.5, 1.0, cfg);
  auto b = sample_fixed_magnetization(g, 1, 0.3, 0.5, 1.0, cfg);
  CHECK(a.sigma.plus == b.sigma.plus);
  CHECK(a.trace.iterations.size() == b.trace.iterations.size());
}

}  // TEST_SUITE
