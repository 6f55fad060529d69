#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tnet/geometry.hpp"
#include "tnet/hypergraph.hpp"

namespace tnet::gen {

// All nonempty intervals {i..j} of 0..n-1.
inline Hypergraph intervals(std::size_t n) {
  std::vector<VertexSubset> edges;
  for (std::size_t i = 0; i < n; ++i) {
    VertexSubset s(n);
    for (std::size_t j = i; j < n; ++j) {
      s.set(static_cast<Index>(j));
      edges.push_back(s);
    }
  }
  return Hypergraph(n, std::move(edges));
}

// Disjoint chains: vertices are split into `chains` consecutive groups, each
// group shuffled, and every nonempty prefix of a group is an edge.
// VC-dimension 1 when some chain has >= 1 vertex.
inline Hypergraph chains(std::size_t n, std::size_t chains, std::uint64_t seed) {
  require(chains >= 1 && chains <= n, ErrorCode::BadInput, "need 1 <= chains <= n");
  std::mt19937_64 rng(seed);
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<VertexSubset> edges;
  std::size_t start = 0;
  for (std::size_t c = 0; c < chains; ++c) {
    const std::size_t len = n / chains + (c < n % chains ? 1 : 0);
    VertexSubset s(n);
    for (std::size_t j = 0; j < len; ++j) {
      s.set(perm[start + j]);
      edges.push_back(s);
    }
    start += len;
  }
  return Hypergraph(n, std::move(edges));
}

// Random laminar family: recursive random splits of a shuffled vertex range.
inline Hypergraph laminar(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<VertexSubset> edges;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, n}};
  while (!stack.empty()) {
    const auto [lo, hi] = stack.back();
    stack.pop_back();
    if (hi <= lo) continue;
    VertexSubset s(n);
    for (std::size_t j = lo; j < hi; ++j) s.set(perm[j]);
    edges.push_back(std::move(s));
    if (hi - lo < 2) continue;
    const std::size_t cut = lo + 1 + rng() % (hi - lo - 1);
    stack.emplace_back(lo, cut);
    stack.emplace_back(cut, hi);
  }
  return Hypergraph(n, std::move(edges)).dedup();
}

struct Instance {
  std::string name;
  Hypergraph hyper;
  std::size_t vc_bound = 1;  // known upper bound on the VC-dimension
};

// Keeps at most `cap` edges, chosen uniformly, in their original order.
inline Hypergraph subsample_edges(const Hypergraph& h, std::size_t cap, std::mt19937_64& rng) {
  if (h.num_edges() <= cap) return h;
  std::vector<std::size_t> idx(h.num_edges());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<std::size_t> pick;
  std::sample(idx.begin(), idx.end(), std::back_inserter(pick), static_cast<std::ptrdiff_t>(cap), rng);
  std::vector<VertexSubset> edges;
  for (std::size_t i : pick) edges.push_back(h.edge(i));
  return Hypergraph(h.n(), std::move(edges));
}

// Seeded mix of structured families with small VC-dimension: intervals,
// halfplanes and disks on random points, disjoint chains and laminar sets.
// n ranges over [n_min, n_max], at most max_edges edges, all deduplicated.
inline std::vector<Instance> random_suite(std::size_t count, std::uint64_t seed, std::size_t n_min = 8,
                                          std::size_t n_max = 40, std::size_t max_edges = 300) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = n_min + rng() % (n_max - n_min + 1);
    const std::uint64_t sub = rng();
    const std::string tag = "#" + std::to_string(i) + " n=" + std::to_string(n);
    Instance inst;
    switch (i % 5) {
      case 0:
        inst = {"intervals " + tag, intervals(n), 2};
        break;
      case 1:
        inst = {"halfplanes " + tag, geo::compile(geo::random_uniform(n, sub), geo::RangeKind::Halfplane).hyper, 3};
        break;
      case 2:
        inst = {"disks " + tag, geo::compile(geo::random_uniform(n, sub), geo::RangeKind::Disk).hyper, 3};
        break;
      case 3:
        inst = {"chains " + tag, chains(n, 1 + sub % 3, sub), 1};
        break;
      default:
        inst = {"laminar " + tag, laminar(n, sub), 2};
        break;
    }
    inst.hyper = subsample_edges(inst.hyper, max_edges, rng).dedup();
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace tnet::gen
