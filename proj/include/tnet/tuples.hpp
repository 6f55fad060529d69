#pragma once

#include <numeric>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "tnet/hypergraph.hpp"

namespace tnet {

// A cyclic vertex order with its per-edge crossing counts.
struct SpanningCycle {
  std::vector<Index> order;
  std::vector<std::size_t> crossings;  // parallel to the hypergraph's edges
  std::size_t max_crossing = 0;
};

// A hypergraph whose vertices stand for t-subsets of a base hypergraph.
struct TupleHypergraph {
  std::size_t base_n = 0;
  std::size_t t = 0;
  Hypergraph hyper;
  std::vector<VertexSubset> back_map;     // tuple-vertex -> t-subset of the base
  std::vector<std::size_t> base_edge_map;  // base edge -> tuple edge (after dedup)
  std::optional<SpanningCycle> cycle;      // set for the low-crossing variant
};

// Number of cyclically consecutive pairs of `order` split by each edge.
inline std::vector<std::size_t> cycle_crossings(const Hypergraph& h, std::span<const Index> order) {
  std::vector<std::size_t> out(h.num_edges(), 0);
  const std::size_t n = order.size();
  if (n < 2) return out;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edge(i);
    for (std::size_t k = 0; k < n; ++k)
      if (e.test(order[k]) != e.test(order[(k + 1) % n])) ++out[i];
  }
  return out;
}

namespace detail {

// Maps each tuple-vertex set to its containing-edge masks and deduplicates.
inline TupleHypergraph make_tuple_hypergraph(const Hypergraph& h, std::size_t t,
                                             std::vector<VertexSubset> blocks) {
  TupleHypergraph out;
  out.base_n = h.n();
  out.t = t;
  const std::size_t m = blocks.size();
  require(m <= max_vertices(), ErrorCode::TooLarge,
          std::to_string(m) + " tuple-vertices exceeds the cap of " + std::to_string(max_vertices()));
  std::vector<VertexSubset> edges;
  std::unordered_map<VertexSubset, std::size_t, SubsetHash> seen;
  out.base_edge_map.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    VertexSubset te(m);
    if (e.card() >= t)
      for (std::size_t j = 0; j < m; ++j)
        if (blocks[j].is_subset_of(e)) te.set(static_cast<Index>(j));
    auto [it, inserted] = seen.try_emplace(te, edges.size());
    if (inserted) edges.push_back(std::move(te));
    out.base_edge_map.push_back(it->second);
  }
  out.hyper = Hypergraph(m, std::move(edges));
  out.back_map = std::move(blocks);
  return out;
}

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

inline constexpr std::uint64_t kMaxTupleVertices = 1'000'000;

// H^t: all t-subsets in lexicographic order; each base edge e yields the
// tuple-edge of t-subsets contained in e.
inline TupleHypergraph build_Ht(const Hypergraph& h, std::size_t t) {
  require(t >= 1, ErrorCode::DomainError, "t must be at least 1");
  require(binomial(h.n(), t) <= std::min<std::uint64_t>(kMaxTupleVertices, max_vertices()),
          ErrorCode::TooLarge, "C(n, t) tuple-vertices exceeds the limit");
  std::vector<VertexSubset> blocks;
  for_each_combination(h.n(), t, [&](std::span<const Index> c) {
    blocks.push_back(VertexSubset::from_indices(h.n(), c));
  });
  return detail::make_tuple_hypergraph(h, t, std::move(blocks));
}

// Low-crossing spanning cycle by iterative reweighting.
//
// Every edge starts with weight 1. The forest grows by the pair of vertices in
// different components whose crossing weight (total weight of edges containing
// exactly one of them) is smallest; every edge it crosses then doubles its
// weight. The resulting tree becomes a cycle through its depth-first preorder,
// which at most doubles each crossing count.
//
// Crossing weights only grow, so a lazy heap of stale lower bounds finds the
// minimum without rescanning all pairs after each join. Ties are broken by a
// seed-keyed hash of the pair, then by lowest vertex indices.
inline SpanningCycle build_spanning_cycle(const Hypergraph& h, std::uint64_t seed) {
  const std::size_t n = h.n();
  require(n >= 3, ErrorCode::TooSmall, "spanning cycle needs at least 3 vertices");
  require(h.is_dedup(), ErrorCode::NeedsDedup, "spanning cycle requires pairwise distinct edges");

  const std::size_t m = h.num_edges();
  const std::size_t words = (m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> inc(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < m; ++i)
    h.edge(i).for_each([&](Index v) { inc[v][i / 64] |= std::uint64_t{1} << (i % 64); });
  std::vector<double> weight(m, 1.0);

  auto pair_weight = [&](Index u, Index v) {
    double s = 0.0;
    for (std::size_t k = 0; k < words; ++k) {
      std::uint64_t x = inc[u][k] ^ inc[v][k];
      while (x) {
        s += weight[k * 64 + static_cast<std::size_t>(std::countr_zero(x))];
        x &= x - 1;
      }
    }
    return s;
  };

  struct Entry {
    double key;
    std::uint64_t tie;
    Index u, v;
    bool operator>(const Entry& o) const {
      if (key != o.key) return key > o.key;
      if (tie != o.tie) return tie > o.tie;
      if (u != o.u) return u > o.u;
      return v > o.v;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v) {
      std::size_t c = 0;
      for (std::size_t k = 0; k < words; ++k) c += std::popcount(inc[u][k] ^ inc[v][k]);
      const std::uint64_t tie = detail::mix64(seed ^ detail::mix64((std::uint64_t{u} << 32) | v));
      heap.push({static_cast<double>(c), tie, u, v});
    }

  detail::DisjointSets comps(n);
  std::vector<std::vector<Index>> adj(n);
  std::size_t joined = 0;
  while (joined + 1 < n && !heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    if (comps.find(top.u) == comps.find(top.v)) continue;
    const double actual = pair_weight(top.u, top.v);
    if (actual > top.key) {
      top.key = actual;
      heap.push(top);
      continue;
    }
    comps.unite(top.u, top.v);
    adj[top.u].push_back(top.v);
    adj[top.v].push_back(top.u);
    ++joined;
    for (std::size_t k = 0; k < words; ++k) {
      std::uint64_t x = inc[top.u][k] ^ inc[top.v][k];
      while (x) {
        weight[k * 64 + static_cast<std::size_t>(std::countr_zero(x))] *= 2.0;
        x &= x - 1;
      }
    }
  }

  SpanningCycle cycle;
  cycle.order.reserve(n);
  std::vector<bool> visited(n, false);
  std::vector<Index> stack{0};
  for (auto& a : adj) std::sort(a.begin(), a.end(), std::greater<>());
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    if (visited[v]) continue;
    visited[v] = true;
    cycle.order.push_back(v);
    for (Index w : adj[v])
      if (!visited[w]) stack.push_back(w);
  }

  // Walk the cycle once, accumulating crossings edge-by-edge through the
  // incidence rows.
  cycle.crossings.assign(m, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const Index a = cycle.order[k];
    const Index b = cycle.order[(k + 1) % n];
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t x = inc[a][w] ^ inc[b][w];
      while (x) {
        ++cycle.crossings[w * 64 + static_cast<std::size_t>(std::countr_zero(x))];
        x &= x - 1;
      }
    }
  }
  cycle.max_crossing =
      cycle.crossings.empty() ? 0 : *std::max_element(cycle.crossings.begin(), cycle.crossings.end());
  return cycle;
}

// H^t_lc: floor(n/t) consecutive disjoint blocks along a low-crossing cycle;
// leftover vertices are dropped. Tuple-edges keep the blocks fully inside each
// base edge.
inline TupleHypergraph build_Ht_lc(const Hypergraph& h, std::size_t t, std::uint64_t seed) {
  require(t >= 1, ErrorCode::DomainError, "t must be at least 1");
  require(h.n() >= t, ErrorCode::TooSmall, "H^t_lc needs at least t vertices");
  SpanningCycle cycle;
  if (h.n() >= 3) {
    cycle = build_spanning_cycle(h.is_dedup() ? h : h.dedup(), seed);
    cycle.crossings = cycle_crossings(h, cycle.order);
    cycle.max_crossing =
        cycle.crossings.empty() ? 0 : *std::max_element(cycle.crossings.begin(), cycle.crossings.end());
  } else {
    cycle.order.resize(h.n());
    std::iota(cycle.order.begin(), cycle.order.end(), Index{0});
    cycle.crossings = cycle_crossings(h, cycle.order);
    cycle.max_crossing =
        cycle.crossings.empty() ? 0 : *std::max_element(cycle.crossings.begin(), cycle.crossings.end());
  }
  std::vector<VertexSubset> blocks;
  const std::size_t count = h.n() / t;
  for (std::size_t k = 0; k < count; ++k) {
    VertexSubset b(h.n());
    for (std::size_t j = 0; j < t; ++j) b.set(cycle.order[k * t + j]);
    blocks.push_back(std::move(b));
  }
  auto out = detail::make_tuple_hypergraph(h, t, std::move(blocks));
  out.cycle = std::move(cycle);
  return out;
}

}  // namespace tnet
