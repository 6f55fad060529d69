#pragma once

// Brute-force reference implementations over plain uint32 bitmasks. They
// share no code with the library beyond converting a Hypergraph to masks.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "tnet/hypergraph.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline std::vector<Mask> masks(const tnet::Hypergraph& h) {
  std::vector<Mask> out;
  for (const auto& e : h.edges()) {
    Mask m = 0;
    e.for_each([&](tnet::Index v) { m |= Mask{1} << v; });
    out.push_back(m);
  }
  return out;
}

inline tnet::Hypergraph from_masks(std::size_t n, const std::vector<Mask>& ms) {
  std::vector<std::vector<tnet::Index>> lists;
  for (Mask m : ms) {
    std::vector<tnet::Index> l;
    for (std::size_t v = 0; v < n; ++v)
      if (m >> v & 1U) l.push_back(static_cast<tnet::Index>(v));
    lists.push_back(l);
  }
  return tnet::Hypergraph::from_lists(n, lists);
}

inline std::set<Mask> trace(const std::vector<Mask>& edges, Mask a) {
  std::set<Mask> out;
  for (Mask e : edges) out.insert(e & a);
  return out;
}

inline bool shattered(const std::vector<Mask>& edges, Mask a) {
  return trace(edges, a).size() == (std::size_t{1} << std::popcount(a));
}

inline int vc(std::size_t n, const std::vector<Mask>& edges) {
  if (edges.empty()) return 0;
  int best = 0;
  for (Mask a = 0; a < (Mask{1} << n); ++a)
    if (std::popcount(a) > best && shattered(edges, a)) best = std::popcount(a);
  return best;
}

// Every T' ⊆ T has some S ⊆ T, |S| < t, with T' ∪ S in the trace.
inline bool t_shattered(const std::vector<Mask>& edges, Mask tset, int t) {
  const auto tr = trace(edges, tset);
  for (Mask sub = tset;; sub = (sub - 1) & tset) {
    bool ok = false;
    for (Mask p : tr)
      if ((p & sub) == sub && std::popcount(p & ~sub) < t) {
        ok = true;
        break;
      }
    if (!ok) return false;
    if (sub == 0) break;
  }
  return true;
}

inline int t_vc(std::size_t n, const std::vector<Mask>& edges, int t) {
  if (edges.empty()) return 0;
  int best = 0;
  for (Mask a = 0; a < (Mask{1} << n); ++a)
    if (std::popcount(a) > best && t_shattered(edges, a, t)) best = std::popcount(a);
  return best;
}

inline std::size_t shatter_function(std::size_t n, const std::vector<Mask>& edges, std::size_t m) {
  std::size_t best = 0;
  for (Mask a = 0; a < (Mask{1} << n); ++a)
    if (static_cast<std::size_t>(std::popcount(a)) <= m) best = std::max(best, edges.empty() ? 0 : trace(edges, a).size());
  return best;
}

inline bool heavy(Mask e, double eps, std::size_t n) {
  return std::popcount(e) >= eps * static_cast<double>(n) - 1e-9;
}

inline bool is_net(std::size_t n, const std::vector<Mask>& edges, double eps, const std::vector<Mask>& family) {
  for (Mask e : edges) {
    if (!heavy(e, eps, n)) continue;
    if (std::none_of(family.begin(), family.end(), [&](Mask s) { return (s & e) == s; })) return false;
  }
  return true;
}

// Smallest eps-t-net by trying every family of increasing size over the
// t-subsets lying in some heavy edge. Only for tiny pools.
inline std::size_t min_net_size(std::size_t n, const std::vector<Mask>& edges, double eps, int t) {
  std::vector<Mask> heavy_edges;
  for (Mask e : edges)
    if (heavy(e, eps, n)) heavy_edges.push_back(e);
  if (heavy_edges.empty()) return 0;
  std::vector<Mask> pool;
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (std::popcount(s) == t &&
        std::any_of(heavy_edges.begin(), heavy_edges.end(), [&](Mask e) { return (s & e) == s; }))
      pool.push_back(s);
  for (std::size_t size = 1; size <= pool.size(); ++size) {
    std::vector<bool> pick(pool.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<Mask> fam;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (pick[i]) fam.push_back(pool[i]);
      if (is_net(n, heavy_edges, eps, fam)) return size;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return SIZE_MAX;
}

// T(n,k,t) by scanning every family of t-subsets (C(n,t) <= 20).
inline std::size_t turan(int n, int k, int t) {
  std::vector<Mask> tsets, ksets;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (std::popcount(s) == t) tsets.push_back(s);
    if (std::popcount(s) == k) ksets.push_back(s);
  }
  std::size_t best = 0;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << tsets.size()); ++f) {
    const auto size = static_cast<std::size_t>(std::popcount(f));
    if (size <= best) continue;
    bool ok = true;
    for (Mask ks : ksets) {
      bool all = true;
      for (std::size_t i = 0; i < tsets.size() && all; ++i)
        if ((tsets[i] & ks) == tsets[i] && !(f >> i & 1U)) all = false;
      if (all) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

// Random hypergraph on n <= 31 vertices with m distinct edges (fewer if the
// space is small), each vertex kept with probability p.
inline std::vector<Mask> random_edges(std::size_t n, std::size_t m, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::set<Mask> seen;
  std::vector<Mask> out;
  for (std::size_t tries = 0; out.size() < m && tries < 50 * m + 50; ++tries) {
    Mask e = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (coin(rng)) e |= Mask{1} << v;
    if (seen.insert(e).second) out.push_back(e);
  }
  return out;
}

inline double binary_entropy(double x) { return -x * std::log2(x) - (1 - x) * std::log2(1 - x); }

}  // namespace oracle
