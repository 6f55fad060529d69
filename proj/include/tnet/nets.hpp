#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tnet/cover.hpp"
#include "tnet/hypergraph.hpp"
#include "tnet/tuples.hpp"

namespace tnet {

// A family of t-element vertex subsets, kept free of repeats.
class TSubsetFamily {
 public:
  TSubsetFamily() = default;
  explicit TSubsetFamily(std::size_t t, std::string provenance = {})
      : t(t), provenance(std::move(provenance)) {}

  std::size_t t = 1;
  std::string provenance;
  std::size_t iterations = 0;

  // Returns false if s was already present.
  bool add(VertexSubset s) {
    require(s.card() == t, ErrorCode::BadInput,
            "member has " + std::to_string(s.card()) + " vertices, expected " + std::to_string(t));
    if (!index_.insert(s).second) return false;
    members_.push_back(std::move(s));
    return true;
  }

  const std::vector<VertexSubset>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const VertexSubset& s) const { return index_.contains(s); }

 private:
  std::vector<VertexSubset> members_;
  std::unordered_set<VertexSubset, SubsetHash> index_;
};

struct NetReport {
  std::string instance;
  std::string method;
  double eps = 0.0;
  std::size_t t = 1;
  std::size_t size = 0;
  bool valid = false;
  std::optional<std::size_t> witness;  // first heavy edge left uncovered
  double runtime_ms = 0.0;
};

inline std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string net_report_header() { return "instance,method,eps,t,size,valid,runtime_ms"; }

inline std::string to_csv_row(const NetReport& r) {
  char ms[32];
  std::snprintf(ms, sizeof(ms), "%.3f", r.runtime_ms);
  return csv_escape(r.instance) + "," + csv_escape(r.method) + "," + format_real(r.eps) + "," +
         std::to_string(r.t) + "," + std::to_string(r.size) + "," + (r.valid ? "true" : "false") + "," + ms;
}

inline std::vector<std::size_t> heavy_edges(const Hypergraph& h, double eps) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    if (is_heavy(h.edge(i), eps, h.n())) out.push_back(i);
  return out;
}

// S is an eps-t-net iff every edge with |e| >= eps*n contains a member.
inline NetReport verify_net(const Hypergraph& h, double eps, std::size_t t, const TSubsetFamily& s) {
  NetReport r;
  r.eps = eps;
  r.t = t;
  r.size = s.size();
  r.valid = true;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edge(i);
    if (!is_heavy(e, eps, h.n())) continue;
    const bool covered = std::any_of(s.members().begin(), s.members().end(), [&](const VertexSubset& m) {
      return m.card() == t && m.is_subset_of(e);
    });
    if (!covered) {
      r.valid = false;
      r.witness = i;
      break;
    }
  }
  return r;
}

// Keeps one vertex (the smallest) of every member: an eps-t-net becomes an
// eps-net.
inline TSubsetFamily downgrade_to_vertices(const TSubsetFamily& s) {
  TSubsetFamily out(1, s.provenance + "+downgrade");
  for (const auto& m : s.members()) {
    if (m.empty()) continue;
    VertexSubset v(m.width());
    v.set(m.indices().front());
    out.add(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact minimum

inline constexpr std::size_t kMaxExactPool = 10'000;
inline constexpr std::size_t kMaxExactConstraints = 10'000;
inline constexpr std::uint64_t kMaxExactEnumeration = 5'000'000;

struct ExactNet {
  TSubsetFamily net;
  bool optimal = true;
  std::uint64_t nodes = 0;
};

// Smallest vertex set meeting every given set (budgeted; see ExactNet::optimal).
inline ExactNet min_hitting_set(std::size_t n, const std::vector<VertexSubset>& sets,
                                std::uint64_t node_budget = kUnlimitedNodes) {
  for (const auto& s : sets)
    require(!s.empty(), ErrorCode::Infeasible, "an empty set cannot be hit");
  const CoverSolution sol = solve_cover(CoverProblem::from_constraints(n, sets), node_budget);
  ExactNet out;
  out.net = TSubsetFamily(1, "exact");
  for (Index v : sol.chosen) out.net.add(VertexSubset::from_indices(n, {v}));
  out.optimal = sol.optimal;
  out.nodes = sol.nodes;
  return out;
}

// Minimum family of t-subsets such that every constraint set contains one.
// Candidates are the t-subsets lying inside at least one constraint.
inline ExactNet min_cover_family(std::size_t n, std::vector<VertexSubset> constraints, std::size_t t,
                                 std::uint64_t node_budget = kUnlimitedNodes) {
  require(t >= 1, ErrorCode::DomainError, "t must be at least 1");
  {
    std::unordered_set<VertexSubset, SubsetHash> seen;
    std::erase_if(constraints, [&](const VertexSubset& c) { return !seen.insert(c).second; });
  }
  require(constraints.size() <= kMaxExactConstraints, ErrorCode::TooLarge,
          std::to_string(constraints.size()) + " constraints exceeds the exact-search limit");
  std::uint64_t work = 0;
  for (const auto& c : constraints) {
    work += binomial(c.card(), t);
    require(work <= kMaxExactEnumeration, ErrorCode::TooLarge, "candidate enumeration exceeds the exact-search limit");
  }
  std::unordered_map<VertexSubset, Index, SubsetHash> pool_index;
  std::vector<VertexSubset> pool;
  std::vector<std::vector<Index>> constraint_members(constraints.size());
  for (std::size_t j = 0; j < constraints.size(); ++j) {
    require(constraints[j].card() >= t, ErrorCode::Infeasible,
            "a constraint has fewer than t vertices; no t-subset fits inside");
    const auto verts = constraints[j].indices();
    for_each_combination(verts.size(), t, [&](std::span<const Index> c) {
      VertexSubset s(n);
      for (Index k : c) s.set(verts[k]);
      auto [it, inserted] = pool_index.try_emplace(s, static_cast<Index>(pool.size()));
      if (inserted) {
        require(pool.size() < kMaxExactPool, ErrorCode::TooLarge,
                "candidate pool exceeds " + std::to_string(kMaxExactPool));
        pool.push_back(std::move(s));
      }
      constraint_members[j].push_back(it->second);
    });
  }
  std::vector<VertexSubset> masks;
  masks.reserve(constraints.size());
  for (const auto& cm : constraint_members) {
    VertexSubset m(pool.size());
    for (Index c : cm) m.set(c);
    masks.push_back(std::move(m));
  }
  const CoverSolution sol = solve_cover(CoverProblem::from_constraints(pool.size(), std::move(masks)), node_budget);
  ExactNet out;
  out.net = TSubsetFamily(t, "exact");
  for (Index c : sol.chosen) out.net.add(pool[c]);
  out.optimal = sol.optimal;
  out.nodes = sol.nodes;
  return out;
}

inline std::vector<VertexSubset> heavy_edge_sets(const Hypergraph& h, double eps) {
  std::unordered_set<VertexSubset, SubsetHash> seen;
  std::vector<VertexSubset> out;
  for (std::size_t i : heavy_edges(h, eps))
    if (seen.insert(h.edge(i)).second) out.push_back(h.edge(i));
  return out;
}

// A minimum-cardinality eps-t-net by branch-and-bound over the hitting-set
// formulation.
inline TSubsetFamily min_net_exact(const Hypergraph& h, double eps, std::size_t t) {
  return min_cover_family(h.n(), heavy_edge_sets(h, eps), t).net;
}

// ---------------------------------------------------------------------------
// Random sampling baseline

inline constexpr int kRandomNetRounds = 10;

inline std::size_t ceil_eps_n(double eps, std::size_t n) {
  // |e| >= eps*n for integral |e| is |e| >= ceil(eps*n); the small slack keeps
  // 0.3*10 = 3.0000000000000004 from rounding up to 4.
  return static_cast<std::size_t>(std::ceil(eps * static_cast<double>(n) - 1e-9));
}

inline void check_eps(double eps) {
  require(eps > 0.0 && eps <= 1.0, ErrorCode::DomainError, "eps must lie in (0, 1], got " + format_real(eps));
}

// Uniform random t-subsets, ceil(oversample * (d/eps) * log2(1/eps)) of them,
// doubling the sample until the result verifies.
inline TSubsetFamily random_net(const Hypergraph& h, double eps, std::size_t t, std::uint64_t seed,
                                double oversample, std::size_t d) {
  check_eps(eps);
  require(t >= 1, ErrorCode::DomainError, "t must be at least 1");
  require(eps * static_cast<double>(h.n()) >= static_cast<double>(t) - 1e-9, ErrorCode::DomainError,
          "random_net needs eps*n >= t");
  const double base = oversample * (static_cast<double>(std::max<std::size_t>(d, 1)) / eps) * std::log2(1.0 / eps);
  std::size_t draws = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(base)));
  std::mt19937_64 rng(seed);
  std::vector<Index> all(h.n());
  std::iota(all.begin(), all.end(), Index{0});
  const std::uint64_t limit = binomial(h.n(), t);
  for (int round = 0; round < kRandomNetRounds; ++round) {
    TSubsetFamily s(t, "random");
    for (std::size_t k = 0; k < draws && s.size() < limit; ++k) {
      std::vector<Index> pick;
      std::sample(all.begin(), all.end(), std::back_inserter(pick), static_cast<std::ptrdiff_t>(t), rng);
      s.add(VertexSubset::from_indices(h.n(), pick));
    }
    s.iterations = static_cast<std::size_t>(round) + 1;
    if (verify_net(h, eps, t, s).valid) return s;
    draws *= 2;
  }
  fail(ErrorCode::GaveUp, "random_net failed to verify after " + std::to_string(kRandomNetRounds) + " rounds");
}

// ---------------------------------------------------------------------------
// Stabbing constructions

// Thrown when some (d+1)-set X inside a target is met in >= t vertices by
// every edge; the t-subsets of X then cover every edge.
class TransversalFoundError : public Error {
 public:
  TransversalFoundError(TSubsetFamily transversal, const std::string& what)
      : Error(ErrorCode::TransversalFound, what), transversal_(std::move(transversal)) {}
  const TSubsetFamily& transversal() const noexcept { return transversal_; }

 private:
  TSubsetFamily transversal_;
};

// Upper limit on (A, B) candidate pairs scanned in a single iteration.
inline constexpr std::uint64_t kStabBudget = 40'000'000;

namespace detail {

using EdgeBits = std::vector<std::uint64_t>;

inline std::vector<EdgeBits> incidence_rows(const Hypergraph& h) {
  const std::size_t words = (h.num_edges() + 63) / 64;
  std::vector<EdgeBits> inc(h.n(), EdgeBits(words, 0));
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    h.edge(i).for_each([&](Index v) { inc[v][i / 64] |= std::uint64_t{1} << (i % 64); });
  return inc;
}

inline std::uint64_t stab_scan_cost(std::size_t k, std::size_t t, std::size_t d) {
  std::uint64_t total = 0;
  for (std::size_t i = t; i <= d; ++i) {
    const std::uint64_t a = binomial(k, i);
    const std::uint64_t b = binomial(k - std::min(i, k), d + 1 - i);
    if (b != 0 && a > kStabBudget / b) return kStabBudget + 1;
    total += a * b;
    if (total > kStabBudget) return total;
  }
  return total;
}

// Edges holding at least t vertices of `a`, by saturating bit-sliced counters.
inline EdgeBits edges_with_at_least(const std::vector<EdgeBits>& inc, std::span<const Index> a, std::size_t t,
                                    std::size_t words) {
  std::vector<EdgeBits> ge(t + 1, EdgeBits(words, 0));
  std::fill(ge[0].begin(), ge[0].end(), ~std::uint64_t{0});
  for (Index v : a)
    for (std::size_t k = t; k >= 1; --k)
      for (std::size_t w = 0; w < words; ++w) ge[k][w] |= ge[k - 1][w] & inc[v][w];
  return ge[t];
}

struct LocalSet {
  std::uint64_t local = 0;  // positions inside the current target
  EdgeBits containing;      // edges containing the set
};

// The shared loop of the deterministic eps-net (t = 1, types 1..d) and the
// direct eps-t-net (types t..d): while a target holds no member, pick the
// i-subset A of it that t-stabs the most (d+1-i)-subsets B of target \ A and
// add every t-subset of A. Stabbing is checked against all edges of h.
inline TSubsetFamily stabbing_construction(const Hypergraph& h, const std::vector<VertexSubset>& targets,
                                           std::size_t t, std::size_t d, const std::string& tag) {
  TSubsetFamily net(t, tag);
  if (targets.empty()) return net;
  const std::size_t words = (h.num_edges() + 63) / 64;
  const auto inc = incidence_rows(h);
  std::uint64_t all_tail = 0;  // mask of valid bits in the last word
  if (h.num_edges() % 64 == 0)
    all_tail = ~std::uint64_t{0};
  else
    all_tail = (std::uint64_t{1} << (h.num_edges() % 64)) - 1;

  auto covered = [&](const VertexSubset& s) {
    return std::any_of(net.members().begin(), net.members().end(),
                       [&](const VertexSubset& m) { return m.is_subset_of(s); });
  };

  for (;;) {
    const auto open = std::find_if(targets.begin(), targets.end(), [&](const VertexSubset& s) { return !covered(s); });
    if (open == targets.end()) break;
    const auto verts = open->indices();
    const std::size_t k = verts.size();
    require(k >= d + 1, ErrorCode::BadDimension,
            "a heavy edge has " + std::to_string(k) + " vertices after truncation, fewer than d+1 = " +
                std::to_string(d + 1));
    require(k <= 64, ErrorCode::TooLarge, "truncated heavy edges are limited to 64 vertices");
    require(stab_scan_cost(k, t, d) <= kStabBudget, ErrorCode::TooLarge,
            "stabbing scan for |S| = " + std::to_string(k) + ", d = " + std::to_string(d) + " exceeds the budget");

    // All candidate B sets by size, with the edges containing each.
    std::vector<std::vector<LocalSet>> bsets(d + 2 - t);
    for (std::size_t j = 1; j + t <= d + 1; ++j) {
      for_each_combination(k, j, [&](std::span<const Index> c) {
        LocalSet b;
        b.containing.assign(words, ~std::uint64_t{0});
        if (words) b.containing.back() &= all_tail;
        for (Index p : c) {
          b.local |= std::uint64_t{1} << p;
          for (std::size_t w = 0; w < words; ++w) b.containing[w] &= inc[verts[p]][w];
        }
        bsets[j].push_back(std::move(b));
      });
    }

    std::uint64_t best_count = 0;
    std::vector<Index> best_a;
    for (std::size_t i = t; i <= d; ++i) {
      const auto& blist = bsets[d + 1 - i];
      for_each_combination(k, i, [&](std::span<const Index> c) {
        std::uint64_t amask = 0;
        std::vector<Index> a(c.size());
        for (std::size_t q = 0; q < c.size(); ++q) {
          amask |= std::uint64_t{1} << c[q];
          a[q] = verts[c[q]];
        }
        const EdgeBits good = edges_with_at_least(inc, a, t, words);
        std::uint64_t count = 0;
        for (const auto& b : blist) {
          if (b.local & amask) continue;
          bool stabbed = true;
          for (std::size_t w = 0; w < words; ++w)
            if (b.containing[w] & ~good[w]) {
              stabbed = false;
              break;
            }
          if (stabbed) ++count;
        }
        if (count > best_count) {
          best_count = count;
          best_a = std::move(a);
        }
      });
    }

    if (best_count == 0) {
      // Either some (d+1)-subset meets every edge in >= t vertices, or d is
      // below the relevant dimension.
      std::optional<std::vector<Index>> transversal;
      for_each_combination(k, d + 1, [&](std::span<const Index> c) {
        std::vector<Index> x;
        for (Index p : c) x.push_back(verts[p]);
        const EdgeBits good = edges_with_at_least(inc, x, t, words);
        bool all = true;
        for (std::size_t w = 0; w < words; ++w) {
          const std::uint64_t want = (w + 1 == words) ? all_tail : ~std::uint64_t{0};
          if ((good[w] & want) != want) {
            all = false;
            break;
          }
        }
        if (all) {
          transversal = std::move(x);
          return false;
        }
        return true;
      });
      if (transversal) {
        TSubsetFamily tr(t, tag + "+transversal");
        for_each_combination(transversal->size(), t, [&](std::span<const Index> c) {
          VertexSubset s(h.n());
          for (Index p : c) s.set((*transversal)[p]);
          tr.add(std::move(s));
        });
        throw TransversalFoundError(std::move(tr), "a (d+1)-subset of a heavy edge is a transversal");
      }
      fail(ErrorCode::NoProgress,
           "no stabbing pair found; d = " + std::to_string(d) + " is below the hypergraph's dimension");
    }

    for_each_combination(best_a.size(), t, [&](std::span<const Index> c) {
      VertexSubset s(h.n());
      for (Index p : c) s.set(best_a[p]);
      net.add(std::move(s));
    });
    ++net.iterations;
  }
  return net;
}

// The first `size` vertices (by index) of s.
inline VertexSubset truncate(const VertexSubset& s, std::size_t size) {
  VertexSubset out(s.width());
  std::size_t taken = 0;
  s.for_each([&](Index v) {
    if (taken < size) {
      out.set(v);
      ++taken;
    }
  });
  return out;
}

inline std::vector<VertexSubset> truncated_heavy(const Hypergraph& h, double eps) {
  const std::size_t keep = std::max<std::size_t>(1, ceil_eps_n(eps, h.n()));
  std::vector<VertexSubset> out;
  std::unordered_set<VertexSubset, SubsetHash> seen;
  for (std::size_t i : heavy_edges(h, eps)) {
    VertexSubset s = truncate(h.edge(i), keep);
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

// Deterministic eps-net of size O_d(1/eps^d) via stabbing.
inline TSubsetFamily det_eps_net(const Hypergraph& h, double eps, std::size_t d) {
  check_eps(eps);
  require(d >= 1, ErrorCode::BadDimension, "d must be at least 1");
  require(h.is_dedup(), ErrorCode::NeedsDedup, "det_eps_net requires pairwise distinct edges");
  return detail::stabbing_construction(h, detail::truncated_heavy(h, eps), 1, d,
                                       "det(d=" + std::to_string(d) + ")");
}

// Direct eps-t-net of size O(1/eps^{d+1-t}) via t-stabbing; d is the
// t-VC-dimension (or an upper bound on it).
inline TSubsetFamily direct_eps_t_net(const Hypergraph& h, double eps, std::size_t t, std::size_t d) {
  check_eps(eps);
  require(t >= 2, ErrorCode::DomainError, "direct construction needs t >= 2");
  require(d >= t, ErrorCode::BadDimension, "direct construction needs d >= t");
  require(eps * static_cast<double>(h.n()) >= static_cast<double>(t) - 1e-9, ErrorCode::DomainError,
          "direct construction needs eps*n >= t");
  require(h.is_dedup(), ErrorCode::NeedsDedup, "direct_eps_t_net requires pairwise distinct edges");
  return detail::stabbing_construction(h, detail::truncated_heavy(h, eps), t, d,
                                       "direct(t=" + std::to_string(t) + ",d=" + std::to_string(d) + ")");
}

// ---------------------------------------------------------------------------
// Constructions built from eps-nets

inline constexpr std::uint64_t kInnerNodeBudget = 200'000;
inline constexpr std::uint64_t kMaxProductFamily = 1'000'000;

// t pairwise disjoint eps-nets N_1..N_t, then every t-subset taking one vertex
// from each. N_j must hit every originally heavy edge outside N_1..N_{j-1}.
// With d given the nets come from the stabbing construction, otherwise from a
// budgeted exact search.
inline TSubsetFamily trivial_eps_t_net(const Hypergraph& h, double eps, std::size_t t,
                                       std::optional<std::size_t> d = std::nullopt) {
  check_eps(eps);
  require(t >= 1, ErrorCode::DomainError, "t must be at least 1");
  require(eps * static_cast<double>(h.n()) >= static_cast<double>(t) - 1e-9, ErrorCode::DomainError,
          "trivial construction needs eps*n >= t");
  const auto heavy = heavy_edge_sets(h, eps);
  VertexSubset removed(h.n());
  std::vector<std::vector<Index>> nets;
  std::size_t iterations = 0;
  for (std::size_t j = 0; j < t; ++j) {
    std::vector<VertexSubset> targets;
    std::unordered_set<VertexSubset, SubsetHash> seen;
    for (const auto& e : heavy) {
      VertexSubset r = e - removed;
      require(r.card() >= t - j, ErrorCode::Infeasible,
              "a heavy edge has too few vertices left outside the earlier nets");
      if (seen.insert(r).second) targets.push_back(std::move(r));
    }
    std::vector<Index> layer;
    if (d) {
      std::size_t keep = std::numeric_limits<std::size_t>::max();
      for (const auto& r : targets) keep = std::min(keep, r.card());
      std::vector<VertexSubset> truncated;
      for (const auto& r : targets) truncated.push_back(detail::truncate(r, keep));
      std::vector<VertexSubset> rest;
      std::unordered_set<VertexSubset, SubsetHash> rest_seen;
      for (const auto& e : h.edges())
        if (rest_seen.insert(e - removed).second) rest.push_back(e - removed);
      const Hypergraph residual(h.n(), std::move(rest));
      const auto net = detail::stabbing_construction(residual, truncated, 1, *d, "det");
      iterations += net.iterations;
      for (const auto& m : net.members()) layer.push_back(m.indices().front());
    } else {
      const auto exact = min_hitting_set(h.n(), targets, kInnerNodeBudget);
      for (const auto& m : exact.net.members()) layer.push_back(m.indices().front());
    }
    std::sort(layer.begin(), layer.end());
    for (Index v : layer) removed.set(v);
    nets.push_back(std::move(layer));
  }
  std::uint64_t product = 1;
  for (const auto& n : nets) {
    product *= std::max<std::size_t>(n.size(), 1);
    require(product <= kMaxProductFamily, ErrorCode::TooLarge, "product family too large");
  }
  TSubsetFamily out(t, d ? "trivial(det,d=" + std::to_string(*d) + ")" : "trivial(exact)");
  out.iterations = iterations;
  if (heavy.empty()) return out;
  std::vector<std::size_t> pos(t, 0);
  for (;;) {
    VertexSubset s(h.n());
    for (std::size_t j = 0; j < t; ++j) s.set(nets[j][pos[j]]);
    out.add(std::move(s));
    std::size_t j = t;
    while (j-- > 0) {
      if (++pos[j] < nets[j].size()) break;
      pos[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

enum class LcInner { Det, Random };

struct LcOptions {
  LcInner inner = LcInner::Random;
  std::size_t d = 2;        // dimension passed to the inner builder
  double oversample = 1.0;  // random inner builder only
};

struct LcMargin {
  std::size_t edge = 0;          // heavy edge of the base hypergraph
  std::size_t blocks_inside = 0;  // cycle blocks fully inside the edge
  double required = 0.0;         // (eps/2) * number of blocks
  std::size_t crossings = 0;     // of the edge along the cycle
};

struct LcResult {
  TSubsetFamily net;
  NetReport report;
  TupleHypergraph tuple;
  std::vector<LcMargin> margins;
};

// An (eps/2)-net of H^t_lc, read back as t-subsets of H. Validity needs n
// large compared to the cycle's crossing number, so the result is verified
// and reported rather than certified.
inline LcResult lc_eps_t_net(const Hypergraph& h, double eps, std::size_t t, std::uint64_t seed,
                             const LcOptions& opt = {}) {
  check_eps(eps);
  require(t >= 1, ErrorCode::DomainError, "t must be at least 1");
  require(h.n() >= t, ErrorCode::TooSmall, "lc construction needs n >= t");
  LcResult out;
  out.tuple = build_Ht_lc(h, t, seed);
  const double inner_eps = eps / 2.0;
  TSubsetFamily inner;
  if (heavy_edges(out.tuple.hyper, inner_eps).empty()) {
    inner = TSubsetFamily(1);
  } else if (opt.inner == LcInner::Det) {
    inner = det_eps_net(out.tuple.hyper, inner_eps, opt.d);
  } else {
    inner = random_net(out.tuple.hyper, inner_eps, 1, seed, opt.oversample, opt.d);
  }
  out.net = TSubsetFamily(t, std::string("lc(") + (opt.inner == LcInner::Det ? "det" : "random") +
                                 ",d=" + std::to_string(opt.d) + ")");
  out.net.iterations = inner.iterations;
  for (const auto& m : inner.members()) out.net.add(out.tuple.back_map[m.indices().front()]);
  const double required = inner_eps * static_cast<double>(out.tuple.hyper.n());
  for (std::size_t i : heavy_edges(h, eps))
    out.margins.push_back({i, out.tuple.hyper.edge(out.tuple.base_edge_map[i]).card(), required,
                           out.tuple.cycle->crossings[i]});
  out.report = verify_net(h, eps, t, out.net);
  return out;
}

inline std::size_t ceil_inverse(double eps) {
  return static_cast<std::size_t>(std::ceil(1.0 / eps - 1e-9));
}

// True iff some k-subset is shattered (k <= 2 keeps this cheap for any n).
inline bool shatters_some(const Hypergraph& h, std::size_t k) {
  bool found = false;
  for_each_combination(h.n(), k, [&](std::span<const Index> c) {
    found = is_shattered(h, VertexSubset::from_indices(h.n(), c));
    return !found;
  });
  return found;
}

// eps-t-net of size <= t*ceil(1/eps) + 1 for VC-dimension-1 hypergraphs.
//
// Layer i+1 adds a minimum hitting set of the heavy edges met exactly i times
// so far, restricted to the unused vertices; after t layers every heavy edge
// meets N in >= t vertices, and one t-subset per distinct trace e ∩ N suffices.
inline TSubsetFamily vc1_eps_t_net(const Hypergraph& h, double eps, std::size_t t) {
  require(eps > 0.0 && eps <= 0.5, ErrorCode::DomainError, "vc1 construction needs 0 < eps <= 1/2");
  require(t >= 1, ErrorCode::DomainError, "t must be at least 1");
  const std::size_t layer_cap = ceil_inverse(eps);
  require(h.n() >= t * layer_cap, ErrorCode::TooSmall, "vc1 construction needs n >= t * ceil(1/eps)");
  require(shatters_some(h, 1) && !shatters_some(h, 2), ErrorCode::WrongDimension,
          "vc1 construction needs VC-dimension exactly 1");
  const auto heavy = heavy_edge_sets(h, eps);
  VertexSubset net_vertices(h.n());
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<VertexSubset> targets;
    for (const auto& e : heavy)
      if (e.intersection_card(net_vertices) == i) targets.push_back(e - net_vertices);
    if (targets.empty()) continue;
    const auto layer = min_hitting_set(h.n(), targets, kInnerNodeBudget);
    require(layer.net.size() <= layer_cap, ErrorCode::SizeExceeded,
            "layer " + std::to_string(i + 1) + " needs " + std::to_string(layer.net.size()) +
                " vertices, more than ceil(1/eps) = " + std::to_string(layer_cap));
    for (const auto& m : layer.net.members()) net_vertices |= m;
  }
  TSubsetFamily out(t, "vc1");
  out.iterations = t;
  std::unordered_set<VertexSubset, SubsetHash> traces;
  for (const auto& e : heavy) {
    VertexSubset tr = e & net_vertices;
    if (tr.card() < t || !traces.insert(tr).second) continue;
    out.add(detail::truncate(tr, t));
  }
  return out;
}

}  // namespace tnet
