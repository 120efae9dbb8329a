#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "indset/errors.hpp"
#include "indset/rng.hpp"

namespace indset {

// Immutable simple undirected graph on vertices 0..n-1, CSR adjacency.
// Self-loops and duplicate edges are rejected at construction.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(uint32_t n,
                          const std::vector<std::pair<uint32_t, uint32_t>>& edges);

  uint32_t vertex_count() const { return n_; }
  uint32_t edge_count() const { return static_cast<uint32_t>(adj_.size() / 2); }
  uint32_t max_degree() const { return max_degree_; }

  uint32_t degree(uint32_t v) const { return offsets_[v + 1] - offsets_[v]; }

  // Neighbors in increasing order.
  std::span<const uint32_t> neighbors(uint32_t v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  bool adjacent(uint32_t u, uint32_t v) const;

  // Sorted edge list with u < v, for serialization.
  std::vector<std::pair<uint32_t, uint32_t>> edges() const;

 private:
  uint32_t n_ = 0;
  uint32_t max_degree_ = 0;
  std::vector<uint32_t> offsets_{0};
  std::vector<uint32_t> adj_;
};

// Subset of {0..n-1} with O(1) membership and cached size.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(uint32_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static VertexSet of(uint32_t n, std::initializer_list<uint32_t> vs);

  uint32_t universe_size() const { return n_; }
  uint32_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(uint32_t v) const {
    return (words_[v >> 6] >> (v & 63)) & 1;
  }

  void insert(uint32_t v) {
    check(v);
    uint64_t bit = 1ull << (v & 63);
    if (!(words_[v >> 6] & bit)) {
      words_[v >> 6] |= bit;
      ++size_;
    }
  }

  void erase(uint32_t v) {
    check(v);
    uint64_t bit = 1ull << (v & 63);
    if (words_[v >> 6] & bit) {
      words_[v >> 6] &= ~bit;
      --size_;
    }
  }

  std::vector<uint32_t> to_sorted() const;

  bool operator==(const VertexSet&) const = default;

 private:
  void check(uint32_t v) const {
    if (v >= n_) throw precondition_error("vertex out of range");
  }

  uint32_t n_ = 0;
  uint32_t size_ = 0;
  std::vector<uint64_t> words_;
};

bool is_independent(const Graph& g, const VertexSet& s);
bool is_regular(const Graph& g, uint32_t d);
bool is_triangle_free(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph disjoint_copies(const Graph& g, uint64_t copies);

Graph gen_clique(uint32_t m);
Graph gen_complete_bipartite(uint32_t s, uint32_t t);
Graph gen_path(uint32_t n);
Graph gen_cycle(uint32_t n);
Graph gen_petersen();

// Gadget a * K_{delta,delta} + b * K_{delta+1} (disjoint union).
Graph gen_gadget(uint32_t a, uint32_t b, uint32_t delta);

// Uniform d-regular graph via pairing-model retries: propose a perfect
// matching on n*d half-edge stubs, reject on loops/multi-edges. Requires
// n*d even and d < n; gives up after max_attempts (default 10*n*d) rejects.
Graph gen_random_regular(uint32_t n, uint32_t d, uint64_t seed,
                         uint64_t max_attempts = 0);

// Greedy max-degree-deletion independent set of size exactly k; throws
// precondition_error if the greedy run yields fewer than k vertices.
VertexSet greedy_independent_set(const Graph& g, uint32_t k);

}  // namespace indset
