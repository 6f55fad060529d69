#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_set>
#include <vector>

#include "tnet/subset.hpp"

namespace tnet {

// Hitting-set instance: each constraint must contain a chosen candidate.
// constraint_cands[j] is a mask over candidates; cand_constraints[c] over
// constraints.
struct CoverProblem {
  std::size_t num_candidates = 0;
  std::vector<VertexSubset> constraint_cands;
  std::vector<VertexSubset> cand_constraints;

  static CoverProblem from_constraints(std::size_t num_candidates,
                                       std::vector<VertexSubset> constraint_cands) {
    CoverProblem p;
    p.num_candidates = num_candidates;
    p.constraint_cands = std::move(constraint_cands);
    const std::size_t m = p.constraint_cands.size();
    p.cand_constraints.assign(num_candidates, VertexSubset(m));
    for (std::size_t j = 0; j < m; ++j)
      p.constraint_cands[j].for_each([&](Index c) { p.cand_constraints[c].set(static_cast<Index>(j)); });
    return p;
  }
};

struct CoverSolution {
  std::vector<Index> chosen;  // ascending candidate indices
  bool optimal = false;
  bool feasible = true;
  std::uint64_t nodes = 0;
};

// Greedy: repeatedly take the candidate hitting the most open constraints.
inline CoverSolution greedy_cover(const CoverProblem& p) {
  CoverSolution sol;
  VertexSubset open = VertexSubset::full(p.constraint_cands.size());
  while (!open.empty()) {
    std::size_t best_gain = 0;
    Index best = 0;
    for (Index c = 0; c < p.num_candidates; ++c) {
      const std::size_t gain = p.cand_constraints[c].intersection_card(open);
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best_gain == 0) {
      sol.feasible = false;
      break;
    }
    sol.chosen.push_back(best);
    open -= p.cand_constraints[best];
  }
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

namespace detail {

class CoverSearch {
 public:
  CoverSearch(const CoverProblem& p, std::uint64_t budget) : p_(p), budget_(budget) {}

  CoverSolution run() {
    CoverSolution greedy = greedy_cover(p_);
    if (!greedy.feasible) return greedy;
    best_ = greedy.chosen;
    std::vector<Index> chosen;
    search(VertexSubset::full(p_.constraint_cands.size()), VertexSubset(p_.num_candidates), chosen);
    CoverSolution sol;
    sol.chosen = best_;
    std::sort(sol.chosen.begin(), sol.chosen.end());
    sol.optimal = !aborted_;
    sol.nodes = nodes_;
    return sol;
  }

 private:
  // Size of a family of open constraints with pairwise disjoint available
  // candidates; each needs its own pick.
  std::size_t packing_bound(const VertexSubset& open, const VertexSubset& excluded) const {
    std::vector<std::pair<std::size_t, Index>> order;
    open.for_each([&](Index j) {
      order.emplace_back(p_.constraint_cands[j].card() - p_.constraint_cands[j].intersection_card(excluded), j);
    });
    std::sort(order.begin(), order.end());
    VertexSubset used(p_.num_candidates);
    std::size_t count = 0;
    for (const auto& [sz, j] : order) {
      const VertexSubset avail = p_.constraint_cands[j] - excluded;
      if (!avail.intersects(used)) {
        ++count;
        used |= avail;
      }
    }
    return count;
  }

  void search(const VertexSubset& open, VertexSubset excluded, std::vector<Index>& chosen) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (open.empty()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + 1 >= best_.size()) return;
    if (chosen.size() + packing_bound(open, excluded) >= best_.size()) return;

    Index pick = 0;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    open.for_each([&](Index j) {
      const std::size_t avail = p_.constraint_cands[j].card() - p_.constraint_cands[j].intersection_card(excluded);
      if (avail < fewest) {
        fewest = avail;
        pick = j;
      }
    });
    if (fewest == 0) return;

    std::vector<std::pair<std::size_t, Index>> branches;
    (p_.constraint_cands[pick] - excluded).for_each([&](Index c) {
      branches.emplace_back(p_.cand_constraints[c].intersection_card(open), c);
    });
    std::stable_sort(branches.begin(), branches.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [gain, c] : branches) {
      chosen.push_back(c);
      search(open - p_.cand_constraints[c], excluded, chosen);
      chosen.pop_back();
      if (aborted_) return;
      excluded.set(c);
    }
  }

  const CoverProblem& p_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<Index> best_;
};

}  // namespace detail

// Drops constraints whose candidate set contains another constraint's set;
// hitting the smaller one hits the larger. Returns the kept indices.
inline std::vector<std::size_t> minimal_constraints(const std::vector<VertexSubset>& sets) {
  std::vector<std::size_t> order(sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sets[a].card() < sets[b].card(); });
  std::vector<std::size_t> kept;
  std::unordered_set<VertexSubset, SubsetHash> seen;
  std::uint64_t work = 0;
  for (std::size_t i : order) {
    if (!seen.insert(sets[i]).second) continue;
    bool dominated = false;
    // Past the work cap only exact repeats are dropped.
    if (work < 50'000'000) {
      work += kept.size();
      for (std::size_t k : kept)
        if (sets[k].is_subset_of(sets[i])) {
          dominated = true;
          break;
        }
    }
    if (!dominated) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

inline constexpr std::uint64_t kUnlimitedNodes = std::numeric_limits<std::uint64_t>::max();

// Minimum hitting set by branch-and-bound: branch on the open constraint with
// fewest available candidates, prune with the disjoint-packing bound, seed the
// incumbent with greedy. With a finite node budget the incumbent is returned
// and `optimal` reports whether the search finished.
inline CoverSolution solve_cover(const CoverProblem& p, std::uint64_t node_budget = kUnlimitedNodes) {
  if (p.constraint_cands.empty()) return CoverSolution{{}, true, true, 0};
  for (const auto& c : p.constraint_cands)
    if (c.empty()) return CoverSolution{{}, true, false, 0};
  const auto kept = minimal_constraints(p.constraint_cands);
  std::vector<VertexSubset> reduced;
  reduced.reserve(kept.size());
  for (std::size_t j : kept) reduced.push_back(p.constraint_cands[j]);
  const CoverProblem q = CoverProblem::from_constraints(p.num_candidates, std::move(reduced));
  return detail::CoverSearch(q, node_budget).run();
}

}  // namespace tnet
