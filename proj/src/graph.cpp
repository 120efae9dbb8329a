#include "indset/graph.hpp"

#include <algorithm>
#include <numeric>

namespace indset {

Graph Graph::from_edges(uint32_t n,
                        const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
  Graph g;
  g.n_ = n;
  std::vector<uint32_t> deg(n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw precondition_error("edge endpoint out of range");
    if (u == v) throw precondition_error("self-loop");
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (uint32_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(2 * edges.size());
  std::vector<uint32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }
  for (uint32_t v = 0; v < n; ++v) {
    auto begin = g.adj_.begin() + g.offsets_[v];
    auto end = g.adj_.begin() + g.offsets_[v + 1];
    std::sort(begin, end);
    if (std::adjacent_find(begin, end) != end)
      throw precondition_error("duplicate edge");
    g.max_degree_ = std::max(g.max_degree_, deg[v]);
  }
  return g;
}

bool Graph::adjacent(uint32_t u, uint32_t v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<uint32_t, uint32_t>> Graph::edges() const {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  out.reserve(edge_count());
  for (uint32_t u = 0; u < n_; ++u)
    for (uint32_t v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet VertexSet::of(uint32_t n, std::initializer_list<uint32_t> vs) {
  VertexSet s(n);
  for (uint32_t v : vs) s.insert(v);
  return s;
}

std::vector<uint32_t> VertexSet::to_sorted() const {
  std::vector<uint32_t> out;
  out.reserve(size_);
  for (uint32_t w = 0; w < words_.size(); ++w) {
    uint64_t bits = words_[w];
    while (bits) {
      out.push_back(64 * w + static_cast<uint32_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  if (s.universe_size() != g.vertex_count())
    throw precondition_error("set universe does not match graph");
  for (uint32_t v : s.to_sorted())
    for (uint32_t u : g.neighbors(v))
      if (u > v && s.contains(u)) return false;
  return true;
}

bool is_regular(const Graph& g, uint32_t d) {
  for (uint32_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

bool is_triangle_free(const Graph& g) {
  for (uint32_t u = 0; u < g.vertex_count(); ++u)
    for (uint32_t v : g.neighbors(u)) {
      if (v <= u) continue;
      for (uint32_t w : g.neighbors(v))
        if (w > v && g.adjacent(u, w)) return false;
    }
  return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  uint32_t off = a.vertex_count();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + off, v + off);
  return Graph::from_edges(off + b.vertex_count(), edges);
}

Graph disjoint_copies(const Graph& g, uint64_t copies) {
  uint64_t n = copies * g.vertex_count();
  if (n > (1ull << 31)) throw resource_error("disjoint_copies too large");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  auto base = g.edges();
  edges.reserve(base.size() * copies);
  for (uint64_t c = 0; c < copies; ++c) {
    uint32_t off = static_cast<uint32_t>(c * g.vertex_count());
    for (auto [u, v] : base) edges.emplace_back(u + off, v + off);
  }
  return Graph::from_edges(static_cast<uint32_t>(n), edges);
}

Graph gen_clique(uint32_t m) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < m; ++u)
    for (uint32_t v = u + 1; v < m; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(m, edges);
}

Graph gen_complete_bipartite(uint32_t s, uint32_t t) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < s; ++u)
    for (uint32_t v = 0; v < t; ++v) edges.emplace_back(u, s + v);
  return Graph::from_edges(s + t, edges);
}

Graph gen_path(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph gen_cycle(uint32_t n) {
  if (n < 3) throw precondition_error("cycle needs n >= 3");
  auto edges = gen_path(n).edges();
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges);
}

Graph gen_petersen() {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spoke
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

Graph gen_gadget(uint32_t a, uint32_t b, uint32_t delta) {
  if (delta < 3) throw precondition_error("gadget needs delta >= 3");
  if (a == 0 && b == 0) throw precondition_error("empty gadget");
  Graph g = Graph::from_edges(0, {});
  for (uint32_t i = 0; i < a; ++i)
    g = disjoint_union(g, gen_complete_bipartite(delta, delta));
  for (uint32_t i = 0; i < b; ++i) g = disjoint_union(g, gen_clique(delta + 1));
  return g;
}

Graph gen_random_regular(uint32_t n, uint32_t d, uint64_t seed,
                         uint64_t max_attempts) {
  if (d >= n && !(n == 0 && d == 0)) throw precondition_error("need d < n");
  if ((static_cast<uint64_t>(n) * d) % 2 != 0)
    throw precondition_error("n*d must be even");
  if (max_attempts == 0) max_attempts = 10ull * n * d + 10;
  Rng rng(seed);
  std::vector<uint32_t> stubs(static_cast<size_t>(n) * d);
  for (uint32_t v = 0; v < n; ++v)
    for (uint32_t j = 0; j < d; ++j) stubs[static_cast<size_t>(v) * d + j] = v;

  for (uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    Rng r = rng.child(attempt);
    // Fisher-Yates; pairs are (stubs[2i], stubs[2i+1]).
    for (size_t i = stubs.size(); i > 1; --i) {
      size_t j = r.next_below(static_cast<uint32_t>(i));
      std::swap(stubs[i - 1], stubs[j]);
    }
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(stubs.size() / 2);
    bool ok = true;
    for (size_t i = 0; ok && i < stubs.size(); i += 2) {
      uint32_t u = stubs[i], v = stubs[i + 1];
      if (u == v) ok = false;
      else edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph::from_edges(n, edges);
  }
  throw resource_error("pairing model: retry budget exhausted");
}

VertexSet greedy_independent_set(const Graph& g, uint32_t k) {
  uint32_t n = g.vertex_count();
  VertexSet out(n);
  if (k == 0) return out;
  if (k > n) throw precondition_error("greedy cannot reach k");
  std::vector<uint8_t> removed(n, 0);
  for (uint32_t v = 0; v < n && out.size() < k; ++v) {
    if (removed[v]) continue;
    out.insert(v);
    removed[v] = 1;
    for (uint32_t u : g.neighbors(v)) removed[u] = 1;
  }
  if (out.size() < k) throw precondition_error("greedy cannot reach k");
  return out;
}

}  // namespace indset
