#include "indset/exact_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace indset {

namespace {

// Counting on one graph of <= 64 vertices via vertex-subset masks.
// Per-coefficient counts fit uint64: i_k <= C(64,32) < 2^64.
struct MaskCounter {
  std::vector<uint64_t> adj;  // adj[v] = neighbor mask

  std::vector<uint64_t> count(uint64_t sub) {
    if (sub == 0) return {1};
    uint64_t comp = component_of_lowest(sub);
    auto head = connected_count(comp);
    if (comp == sub) return head;
    return convolve_u64(head, count(sub ^ comp));
  }

  uint64_t component_of_lowest(uint64_t sub) const {
    uint64_t frontier = sub & (~sub + 1);
    uint64_t comp = 0;
    while (frontier) {
      comp |= frontier;
      uint64_t next = 0;
      while (frontier) {
        uint32_t v = static_cast<uint32_t>(std::countr_zero(frontier));
        frontier &= frontier - 1;
        next |= adj[v] & sub;
      }
      frontier = next & ~comp;
    }
    return comp;
  }

  // Connected subgraph: branch on a max-degree vertex.
  // Z(S) = Z(S - v) + x * Z(S - N[v]).
  std::vector<uint64_t> connected_count(uint64_t sub) {
    uint32_t size = static_cast<uint32_t>(std::popcount(sub));
    if (size == 1) return {1, 1};
    if (size == 2) return {1, 2};  // connected on 2 vertices = an edge
    uint32_t best = 0;
    int best_deg = -1;
    for (uint64_t rest = sub; rest;) {
      uint32_t v = static_cast<uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      int deg = std::popcount(adj[v] & sub);
      if (deg > best_deg) {
        best_deg = deg;
        best = v;
      }
    }
    uint64_t vbit = 1ull << best;
    auto excl = count(sub & ~vbit);
    auto incl = count(sub & ~(adj[best] | vbit));
    std::vector<uint64_t> out(std::max(excl.size(), incl.size() + 1), 0);
    for (size_t k = 0; k < excl.size(); ++k) out[k] += excl[k];
    for (size_t k = 0; k < incl.size(); ++k) out[k + 1] += incl[k];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
  }

  static std::vector<uint64_t> convolve_u64(const std::vector<uint64_t>& a,
                                            const std::vector<uint64_t>& b) {
    std::vector<uint64_t> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
  }
};

// Direct enumeration of all 2^n subsets; independence checked incrementally
// from the subset without its lowest bit.
std::vector<uint64_t> enumerate_counts(const std::vector<uint64_t>& adj) {
  uint32_t n = static_cast<uint32_t>(adj.size());
  std::vector<uint8_t> ok(1ull << n);
  std::vector<uint64_t> counts(n + 1, 0);
  ok[0] = 1;
  counts[0] = 1;
  for (uint64_t mask = 1; mask < (1ull << n); ++mask) {
    uint32_t v = static_cast<uint32_t>(std::countr_zero(mask));
    uint64_t rest = mask & (mask - 1);
    uint8_t good = ok[rest] && (adj[v] & rest) == 0;
    ok[mask] = good;
    if (good) ++counts[std::popcount(mask)];
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

std::vector<uint64_t> adjacency_masks(const Graph& g,
                                      const std::vector<uint32_t>& verts) {
  std::vector<uint32_t> local(g.vertex_count(), UINT32_MAX);
  for (uint32_t i = 0; i < verts.size(); ++i) local[verts[i]] = i;
  std::vector<uint64_t> adj(verts.size(), 0);
  for (uint32_t i = 0; i < verts.size(); ++i)
    for (uint32_t u : g.neighbors(verts[i]))
      if (local[u] != UINT32_MAX) adj[i] |= 1ull << local[u];
  return adj;
}

std::vector<std::vector<uint32_t>> connected_components(const Graph& g) {
  uint32_t n = g.vertex_count();
  std::vector<uint8_t> seen(n, 0);
  std::vector<std::vector<uint32_t>> comps;
  for (uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<uint32_t> comp{s};
    seen[s] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
      for (uint32_t u : g.neighbors(comp[i]))
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

IndependencePolynomial independence_polynomial(const Graph& g,
                                               uint32_t exact_limit) {
  exact_limit = std::min<uint32_t>(exact_limit, 64);
  if (g.vertex_count() > exact_limit)
    throw resource_error("graph exceeds exact-oracle size limit");
  IndependencePolynomial acc({mpz_class(1)});
  for (const auto& comp : connected_components(g)) {
    auto adj = adjacency_masks(g, comp);
    std::vector<uint64_t> counts;
    if (comp.size() <= 25) {
      counts = enumerate_counts(adj);
    } else {
      MaskCounter counter{adj};
      counts = counter.count(comp.size() == 64 ? ~0ull : (1ull << comp.size()) - 1);
    }
    std::vector<mpz_class> coeffs(counts.size());
    for (size_t k = 0; k < counts.size(); ++k) {
      mpz_class c(static_cast<unsigned long>(counts[k] >> 32));
      c <<= 32;
      c += static_cast<unsigned long>(counts[k] & 0xFFFFFFFFull);
      coeffs[k] = c;
    }
    acc = convolve(acc, IndependencePolynomial(std::move(coeffs)));
  }
  return acc;
}

SizeDistribution size_distribution(const IndependencePolynomial& p, double lambda) {
  if (lambda < 0) throw precondition_error("lambda must be >= 0");
  SizeDistribution d;
  d.lambda = lambda;
  uint32_t m = p.degree();
  d.probabilities.assign(m + 1, 0.0);
  if (lambda == 0) {
    d.probabilities[0] = 1.0;
    return d;
  }
  double log_lambda = std::log(lambda);
  std::vector<double> terms(m + 1);
  double max_term = -HUGE_VAL;
  for (uint32_t k = 0; k <= m; ++k) {
    terms[k] = log_mpz(p.coeff(k)) + k * log_lambda;
    max_term = std::max(max_term, terms[k]);
  }
  double z = 0.0;
  for (double t : terms) z += std::exp(t - max_term);
  double mean = 0.0, second = 0.0;
  for (uint32_t k = 0; k <= m; ++k) {
    double pk = std::exp(terms[k] - max_term) / z;
    d.probabilities[k] = pk;
    mean += k * pk;
    second += static_cast<double>(k) * k * pk;
  }
  d.mean = mean;
  d.variance = std::max(0.0, second - mean * mean);
  return d;
}

SizeDistribution size_distribution(const Graph& g, double lambda,
                                   uint32_t exact_limit) {
  return size_distribution(independence_polynomial(g, exact_limit), lambda);
}

double exact_occupancy(const Graph& g, double lambda, uint32_t exact_limit) {
  if (g.vertex_count() == 0) throw precondition_error("occupancy needs n >= 1");
  return size_distribution(g, lambda, exact_limit).mean / g.vertex_count();
}

double exact_variance(const Graph& g, double lambda, uint32_t exact_limit) {
  if (g.vertex_count() == 0) throw precondition_error("variance needs n >= 1");
  return size_distribution(g, lambda, exact_limit).variance;
}

double exact_tv_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw precondition_error("mismatched supports");
  double sum = 0.0;
  for (size_t i = 0; i < p.size(); ++i) sum += std::fabs(p[i] - q[i]);
  return sum / 2.0;
}

}  // namespace indset
