#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tnet/nets.hpp"

namespace tnet {

inline constexpr std::uint64_t kMaxTuranTSubsets = 40;

struct TuranResult {
  std::size_t n = 0, k = 0, t = 0;
  std::uint64_t turan_number = 0;
  std::uint64_t min_net_size = 0;
  bool identity_holds = false;
};

namespace detail {

inline void check_turan_params(std::size_t n, std::size_t k, std::size_t t) {
  require(t >= 2 && k > t && n >= k, ErrorCode::DomainError, "need n >= k > t >= 2");
  require(binomial(n, t) <= kMaxTuranTSubsets, ErrorCode::TooLarge,
          "C(n,t) = " + std::to_string(binomial(n, t)) + " exceeds the search guard of " +
              std::to_string(kMaxTuranTSubsets));
}

// Maximum number of t-subsets with no k-set having all its t-subsets chosen.
// Decides t-subsets in lexicographic order, include-first. The bound is the
// undecided count minus a packing of k-sets that still need an exclusion
// among pairwise disjoint undecided t-subsets.
class TuranSearch {
 public:
  TuranSearch(std::size_t n, std::size_t k, std::size_t t) {
    std::vector<std::vector<Index>> tsets;
    for_each_combination(n, t, [&](std::span<const Index> c) { tsets.emplace_back(c.begin(), c.end()); });
    m_ = tsets.size();
    containing_.assign(m_, {});
    for_each_combination(n, k, [&](std::span<const Index> c) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < m_; ++i)
        if (std::includes(c.begin(), c.end(), tsets[i].begin(), tsets[i].end())) mask |= std::uint64_t{1} << i;
      for (std::size_t i = 0; i < m_; ++i)
        if (mask >> i & 1U) containing_[i].push_back(kmasks_.size());
      kmasks_.push_back(mask);
    });
  }

  std::uint64_t run() {
    // Greedy incumbent, then search with the first t-subset fixed as chosen:
    // any nonempty extremal family can be relabelled to contain it.
    std::uint64_t inc = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (can_add(inc, i)) inc |= std::uint64_t{1} << i;
    best_ = static_cast<std::uint64_t>(std::popcount(inc));
    search(1, 1, 0);
    return best_;
  }

 private:
  bool can_add(std::uint64_t chosen, std::size_t i) const {
    const std::uint64_t with = chosen | (std::uint64_t{1} << i);
    return std::none_of(containing_[i].begin(), containing_[i].end(),
                        [&](std::size_t q) { return (kmasks_[q] & ~with) == 0; });
  }

  std::uint64_t upper_bound(std::size_t next, std::uint64_t chosen, std::uint64_t excluded) const {
    const std::uint64_t all = m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
    const std::uint64_t undecided = all & ~((std::uint64_t{1} << next) - 1);
    std::uint64_t used = 0, packing = 0;
    for (std::uint64_t ks : kmasks_) {
      if (ks & excluded) continue;
      const std::uint64_t avail = ks & undecided;
      if (avail && !(avail & used)) {
        used |= avail;
        ++packing;
      }
    }
    return static_cast<std::uint64_t>(std::popcount(chosen)) + static_cast<std::uint64_t>(std::popcount(undecided)) -
           packing;
  }

  void search(std::size_t next, std::uint64_t chosen, std::uint64_t excluded) {
    const auto count = static_cast<std::uint64_t>(std::popcount(chosen));
    if (next == m_) {
      best_ = std::max(best_, count);
      return;
    }
    if (upper_bound(next, chosen, excluded) <= best_) return;
    if (can_add(chosen, next)) search(next + 1, chosen | (std::uint64_t{1} << next), excluded);
    search(next + 1, chosen, excluded | (std::uint64_t{1} << next));
  }

  std::size_t m_ = 0;
  std::vector<std::uint64_t> kmasks_;
  std::vector<std::vector<std::size_t>> containing_;
  std::uint64_t best_ = 0;
};

}  // namespace detail

// T(n,k,t) by exact maximization.
inline std::uint64_t turan_exact(std::size_t n, std::size_t k, std::size_t t) {
  detail::check_turan_params(n, k, t);
  return detail::TuranSearch(n, k, t).run();
}

inline Hypergraph complete_uniform(std::size_t n, std::size_t k) {
  std::vector<VertexSubset> edges;
  for_each_combination(n, k, [&](std::span<const Index> c) { edges.push_back(VertexSubset::from_indices(n, c)); });
  return Hypergraph(n, std::move(edges));
}

// Smallest (k/n)-t-net of the complete k-uniform hypergraph, via the
// hitting-set minimization.
inline std::uint64_t min_net_complete(std::size_t n, std::size_t k, std::size_t t) {
  detail::check_turan_params(n, k, t);
  const double eps = static_cast<double>(k) / static_cast<double>(n);
  return min_net_exact(complete_uniform(n, k), eps, t).size();
}

inline TuranResult check_turan_identity(std::size_t n, std::size_t k, std::size_t t) {
  TuranResult r{n, k, t, turan_exact(n, k, t), min_net_complete(n, k, t), false};
  r.identity_holds = r.min_net_size == binomial(n, t) - r.turan_number;
  return r;
}

// ---------------------------------------------------------------------------
// Rainbow pair colouring

inline std::size_t pair_index(std::size_t n, Index u, Index v) {
  if (u > v) std::swap(u, v);
  // Pairs in lexicographic order: row u starts after sum_{a<u} (n-1-a).
  return static_cast<std::size_t>(u) * (2 * n - u - 1) / 2 + (v - u - 1);
}

struct PairColoring {
  std::size_t n = 0;
  std::vector<std::uint32_t> colors;  // indexed by pair_index
  std::size_t num_colors = 0;
  std::size_t rounds = 0;  // rounds before the stopping rule fired

  std::uint32_t color(Index u, Index v) const { return colors.at(pair_index(n, u, v)); }
};

inline constexpr std::uint64_t kRainbowNodeBudget = 2'000;

namespace detail {

inline VertexSubset internal_pairs(const VertexSubset& e, std::size_t n) {
  VertexSubset s(n * (n - 1) / 2);
  const auto v = e.indices();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) s.set(static_cast<Index>(pair_index(n, v[a], v[b])));
  return s;
}

}  // namespace detail

// Colours the pairs of V so every heavy edge holds a pair of every colour.
//
// Each round takes a small hitting set of the uncoloured pairs of every edge
// whose uncoloured pairs are (eps^2/4)-heavy among all pairs, and gives those
// pairs the round's colour. Rounds continue while every heavy edge still has
// at least ceil(eps^2 n^2 / 4) uncoloured pairs, which keeps each heavy edge in
// every round's hitting set. Leftover pairs get colour 0.
inline PairColoring rainbow_pair_coloring(const Hypergraph& h, double eps, std::uint64_t seed = 0,
                                          std::uint64_t node_budget = kRainbowNodeBudget) {
  (void)seed;  // the inner hitting sets are deterministic
  const std::size_t n = h.n();
  require(n >= 2 && eps * static_cast<double>(n) > 2.0, ErrorCode::TooSmall, "rainbow colouring needs eps > 2/n");
  check_eps(eps);
  const auto heavy_idx = heavy_edges(h, eps);
  require(!heavy_idx.empty(), ErrorCode::TooSmall, "rainbow colouring needs a heavy edge");
  const std::size_t num_pairs = n * (n - 1) / 2;
  const auto keep = static_cast<std::size_t>(std::ceil(eps * eps * static_cast<double>(n * n) / 4.0 - 1e-9));
  const double pair_threshold = eps * eps / 4.0 * static_cast<double>(num_pairs);

  std::vector<VertexSubset> pair_sets;
  std::vector<bool> heavy;
  {
    std::unordered_set<VertexSubset, SubsetHash> seen;
    for (std::size_t i = 0; i < h.num_edges(); ++i)
      if (seen.insert(h.edge(i)).second) {
        pair_sets.push_back(detail::internal_pairs(h.edge(i), n));
        heavy.push_back(is_heavy(h.edge(i), eps, n));
      }
  }

  PairColoring out;
  out.n = n;
  out.colors.assign(num_pairs, 0);
  VertexSubset colored(num_pairs);
  for (;;) {
    bool room = true;
    std::vector<VertexSubset> targets;
    for (std::size_t i = 0; i < pair_sets.size(); ++i) {
      VertexSubset rest = pair_sets[i] - colored;
      if (heavy[i] && rest.card() < keep) {
        room = false;
        break;
      }
      if (static_cast<double>(rest.card()) >= pair_threshold - 1e-9 && !rest.empty()) targets.push_back(std::move(rest));
    }
    if (!room || targets.empty()) break;
    const auto net = min_hitting_set(num_pairs, targets, node_budget).net;
    for (const auto& m : net.members()) {
      const Index p = m.indices().front();
      out.colors[p] = static_cast<std::uint32_t>(out.rounds);
      colored.set(p);
    }
    ++out.rounds;
  }
  out.num_colors = std::max<std::size_t>(out.rounds, 1);
  return out;
}

// Every heavy edge holds a pair of each colour 0..num_colors-1.
inline bool verify_rainbow(const Hypergraph& h, double eps, const PairColoring& c) {
  if (c.n != h.n() || c.colors.size() != h.n() * (h.n() - (h.n() > 0 ? 1 : 0)) / 2) return false;
  for (std::size_t i : heavy_edges(h, eps)) {
    std::vector<bool> seen(c.num_colors, false);
    std::size_t distinct = 0;
    const auto v = h.edge(i).indices();
    for (std::size_t a = 0; a < v.size() && distinct < c.num_colors; ++a)
      for (std::size_t b = a + 1; b < v.size(); ++b) {
        const auto col = c.color(v[a], v[b]);
        if (col < c.num_colors && !seen[col]) {
          seen[col] = true;
          ++distinct;
        }
      }
    if (distinct < c.num_colors) return false;
  }
  return true;
}

}  // namespace tnet
