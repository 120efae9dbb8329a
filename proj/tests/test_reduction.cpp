#include <doctest.h>

#include <cmath>

#include "indset/exact_oracle.hpp"
#include "indset/graph.hpp"
#include "indset/reduction.hpp"
#include "indset/thresholds.hpp"

using namespace indset;

TEST_SUITE("reduction") {

TEST_CASE("block polynomial closed forms") {
  // One K_4 clique: 1 + 4x.
  auto clique = gadget_block_polynomial(0, 1, 3);
  REQUIRE(clique.degree() == 1);
  CHECK(clique.coeff(1) == 4);

  // One K_{3,3}: (1, 6, 6, 2).
  auto bip = gadget_block_polynomial(1, 0, 3);
  REQUIRE(bip.degree() == 3);
  CHECK(bip.coeff(1) == 6);
  CHECK(bip.coeff(2) == 6);
  CHECK(bip.coeff(3) == 2);

  CHECK_THROWS_AS(gadget_block_polynomial(0, 0, 3), precondition_error);
}

TEST_CASE("block polynomial matches the graph oracle") {
  for (auto [a, b, d] : {std::tuple<uint32_t, uint32_t, uint32_t>{1, 3, 3},
                         {2, 1, 3},
                         {1, 6, 3},
                         {1, 0, 4},
                         {2, 3, 4}}) {
    CHECK(gadget_block_polynomial(a, b, d) ==
          independence_polynomial(gen_gadget(a, b, d), 64));
  }
}

TEST_CASE("gadget occupancy matches the graph oracle") {
  for (double lam : {0.5, 2.0, 4.5, 6.0}) {
    CHECK(gadget_occupancy(1, 3, 3, lam) ==
          doctest::Approx(exact_occupancy(gen_gadget(1, 3, 3), lam))
              .epsilon(1e-12));
    CHECK(gadget_occupancy(0, 1, 3, lam) ==
          doctest::Approx(exact_occupancy(gen_clique(4), lam)).epsilon(1e-12));
  }
}

TEST_CASE("find_gadget solves the occupancy equation inside the window") {
  for (double alpha : {0.24, 0.27, 0.3, 0.36, 0.42, 0.45, 0.49}) {
    GadgetSpec spec = find_gadget(alpha, 3);
    CHECK(spec.n_h == 2 * spec.a * 3 + spec.b * 4);
    CHECK(spec.lambda > lambda_c(3));
    CHECK(gadget_occupancy(spec.a, spec.b, 3, spec.lambda) ==
          doctest::Approx(alpha).epsilon(1e-9));
    // The target density stays below the gadget's independence ratio.
    double ratio = double(spec.a * 3 + spec.b) / spec.n_h;
    CHECK(alpha < ratio);
  }
  for (double alpha : {0.19, 0.24, 0.3}) {
    GadgetSpec spec = find_gadget(alpha, 4);
    CHECK(spec.lambda > lambda_c(4));
    CHECK(gadget_occupancy(spec.a, spec.b, 4, spec.lambda) ==
          doctest::Approx(alpha).epsilon(1e-9));
  }
}

TEST_CASE("pure clique gadget solves in closed form") {
  // For (a,b) = (0,1) occupancy is lambda/(1 + 4 lambda) = alpha, so
  // alpha = 0.24 gives lambda = 6.
  GadgetSpec spec = find_gadget(0.24, 3);
  CHECK(spec.a == 0);
  CHECK(spec.b == 1);
  CHECK(spec.lambda == doctest::Approx(6.0).epsilon(1e-9));
}

TEST_CASE("find_gadget rejects out-of-range densities") {
  CHECK_THROWS_AS(find_gadget(alpha_c(3), 3), precondition_error);
  CHECK_THROWS_AS(find_gadget(0.1, 3), precondition_error);
  CHECK_THROWS_AS(find_gadget(0.5, 3), precondition_error);
  CHECK_THROWS_AS(find_gadget(0.55, 3), precondition_error);
}

TEST_CASE("instance construction") {
  Graph k4 = gen_clique(4);
  ReductionInstance inst = build_instance(k4, 0.3, 1.0);
  CHECK(inst.r == uint64_t(std::ceil(1.0 * 3 * 16 / 1.0)));
  CHECK(inst.n_total == 4 + inst.r * inst.gadget.n_h);
  CHECK(inst.k == uint64_t(std::floor(0.3 * double(inst.n_total))));
  CHECK(inst.g_prime.vertex_count() == inst.n_total);
  CHECK(is_regular(inst.g_prime, 3));

  // Override cuts the replica count.
  ReductionInstance small = build_instance(k4, 0.3, 1.0, 1.0, 7);
  CHECK(small.r == 7);

  CHECK_THROWS_AS(build_instance(gen_path(3), 0.3, 1.0), precondition_error);
  CHECK_THROWS_AS(build_instance(k4, 0.3, 0.0), precondition_error);
  CHECK_THROWS_AS(build_instance(Graph::from_edges(0, {}), 0.3, 1.0),
                  precondition_error);
}

TEST_CASE("verification on an empty input graph is exact") {
  // With G empty, i_k(G') = i_k(rH) and Z_G = 1: the ratio is exactly 1.
  Graph empty = Graph::from_edges(0, {});
  ReductionInstance inst;
  inst.gadget = find_gadget(0.3, 3);
  inst.r = 5;
  inst.n_total = 5 * inst.gadget.n_h;
  inst.k = uint64_t(std::floor(0.3 * double(inst.n_total)));
  inst.epsilon = 0.5;
  inst.g_prime = disjoint_copies(gen_gadget(inst.gadget.a, inst.gadget.b, 3),
                                 inst.r);
  ReductionReport rep = verify_reduction(empty, inst);
  CHECK(std::abs(rep.ln_ratio) < 1e-12);
  CHECK(rep.within_eps);
}

TEST_CASE("ratio error shrinks as replicas grow") {
  Graph k4 = gen_clique(4);
  double prev = HUGE_VAL;
  for (uint64_t r : {10, 50}) {
    ReductionInstance inst = build_instance(k4, 0.3, 1.0, 1.0, r);
    ReductionReport rep = verify_reduction(k4, inst);
    CHECK(std::abs(rep.ln_ratio) < prev);
    CHECK(rep.per_size_log_error.size() == size_t(k4.vertex_count() + 1));
    prev = std::abs(rep.ln_ratio);
  }
  CHECK(prev < 0.5);
}

TEST_CASE("verification refuses oversized replica counts") {
  Graph k4 = gen_clique(4);
  ReductionInstance inst = build_instance(k4, 0.3, 1.0, 1.0, 50);
  CHECK_THROWS_AS(verify_reduction(k4, inst, 40, 100), resource_error);
}

TEST_CASE("variance floor holds at solved gadgets") {
  for (double alpha : {0.24, 0.3, 0.45}) {
    GadgetSpec spec = find_gadget(alpha, 3);
    double var = gadget_variance_floor(spec);
    CHECK(var >= 0.00384 / 3);
  }
  // Handmade spec at the clique's critical point: variance is 16/289.
  GadgetSpec crit{0, 1, 3, 4.0, 4.0 / 17, 4};
  CHECK(gadget_variance_floor(crit) ==
        doctest::Approx(16.0 / 289).epsilon(1e-12));
}

}  // TEST_SUITE
