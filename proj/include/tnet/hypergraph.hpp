#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tnet/subset.hpp"

namespace tnet {

inline constexpr std::size_t kDefaultMaxVertices = 1024;

// Mask-width cap. TNET_MAX_VERTICES overrides the default.
inline std::size_t max_vertices() {
  if (const char* env = std::getenv("TNET_MAX_VERTICES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxVertices;
}

// A finite hypergraph on vertices 0..n-1. Immutable after construction.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(std::size_t n, std::vector<VertexSubset> edges,
             std::vector<std::string> labels = {})
      : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    require(n_ <= max_vertices(), ErrorCode::TooLarge,
            std::to_string(n_) + " vertices exceeds the cap of " + std::to_string(max_vertices()));
    for (const auto& e : edges_)
      require(e.width() == n_, ErrorCode::BadInput, "edge mask width does not match vertex count");
    require(labels_.empty() || labels_.size() == n_, ErrorCode::BadInput, "label count mismatch");
    std::unordered_set<VertexSubset, SubsetHash> seen(edges_.begin(), edges_.end());
    dedup_ = seen.size() == edges_.size();
  }

  static Hypergraph from_lists(std::size_t n, const std::vector<std::vector<Index>>& lists) {
    std::vector<VertexSubset> edges;
    edges.reserve(lists.size());
    for (const auto& l : lists) edges.push_back(VertexSubset::from_indices(n, l));
    return Hypergraph(n, std::move(edges));
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<VertexSubset>& edges() const noexcept { return edges_; }
  const VertexSubset& edge(std::size_t i) const { return edges_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool is_dedup() const noexcept { return dedup_; }

  VertexSubset empty_subset() const { return VertexSubset(n_); }
  VertexSubset all_vertices() const { return VertexSubset::full(n_); }
  VertexSubset subset(std::initializer_list<Index> idx) const {
    return VertexSubset::from_indices(n_, idx);
  }

  // Copy with repeated edges removed; first occurrence wins.
  Hypergraph dedup() const {
    std::unordered_set<VertexSubset, SubsetHash> seen;
    std::vector<VertexSubset> out;
    for (const auto& e : edges_)
      if (seen.insert(e).second) out.push_back(e);
    return Hypergraph(n_, std::move(out), labels_);
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<VertexSubset> edges_;
  std::vector<std::string> labels_;
  bool dedup_ = true;
};

// An edge is heavy when |e| >= eps * n (real threshold, no rounding). The
// 1e-9 slack keeps eps = k/n from losing size-k edges to rounding.
inline bool is_heavy(const VertexSubset& e, double eps, std::size_t n) {
  return static_cast<double>(e.card()) >= eps * static_cast<double>(n) - 1e-9;
}

// Pi_H(A): the distinct intersections A ∩ e, sorted by mask order.
inline std::vector<VertexSubset> trace(const Hypergraph& h, const VertexSubset& a) {
  std::unordered_set<VertexSubset, SubsetHash> seen;
  for (const auto& e : h.edges()) seen.insert(e & a);
  std::vector<VertexSubset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Encodes A ∩ e as a |A|-bit pattern, bit j <-> j-th smallest index of A.
inline std::uint32_t pattern(const VertexSubset& e, std::span<const Index> a) {
  std::uint32_t p = 0;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (e.test(a[j])) p |= (1U << j);
  return p;
}

// Marks every pattern realized on `a` by an edge of h.
inline std::vector<bool> realized_patterns(const Hypergraph& h, std::span<const Index> a) {
  std::vector<bool> seen(std::size_t{1} << a.size(), false);
  for (const auto& e : h.edges()) seen[pattern(e, a)] = true;
  return seen;
}

}  // namespace detail

inline constexpr std::size_t kMaxShatterCheck = 25;

inline bool is_shattered(const Hypergraph& h, const VertexSubset& a) {
  require(a.card() <= kMaxShatterCheck, ErrorCode::TooLarge,
          "shatter check limited to " + std::to_string(kMaxShatterCheck) + " vertices");
  const auto idx = a.indices();
  const std::size_t need = std::size_t{1} << idx.size();
  if (h.num_edges() < need) return false;
  const auto seen = detail::realized_patterns(h, idx);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// H*: vertex i <-> edge i of h, one edge {i : v in e_i} per vertex v,
// deduplicated.
inline Hypergraph dual(const Hypergraph& h) {
  require(h.is_dedup(), ErrorCode::NeedsDedup, "dual requires pairwise distinct edges");
  const std::size_t m = h.num_edges();
  std::vector<VertexSubset> rows(h.n(), VertexSubset(m));
  for (std::size_t i = 0; i < m; ++i)
    h.edge(i).for_each([&](Index v) { rows[v].set(static_cast<Index>(i)); });
  return Hypergraph(m, std::move(rows)).dedup();
}

// Work allowed for exhaustive C(n, m) enumerations beyond the n <= 25 / m <= 3
// guard.
inline constexpr std::uint64_t kEnumerationBudget = 2'000'000;

// pi_H(m) by exhaustive enumeration. Trace size is monotone under supersets,
// so only subsets of size min(m, n) are scanned.
inline std::size_t shatter_function(const Hypergraph& h, std::size_t m) {
  const std::size_t n = h.n();
  const std::size_t k = std::min(m, n);
  require(n <= 25 || m <= 3 || binomial(n, k) <= kEnumerationBudget, ErrorCode::TooLarge,
          "shatter_function enumeration C(" + std::to_string(n) + "," + std::to_string(k) +
              ") too large");
  if (h.num_edges() == 0) return 0;
  std::size_t best = 0;
  std::vector<std::uint64_t> stamp;
  std::uint64_t round = 0;
  for_each_combination(n, k, [&](std::span<const Index> a) {
    if (k <= 20) {
      if (stamp.empty()) stamp.assign(std::size_t{1} << k, 0);
      ++round;
      std::size_t distinct = 0;
      for (const auto& e : h.edges()) {
        auto& s = stamp[detail::pattern(e, a)];
        if (s != round) {
          s = round;
          ++distinct;
        }
      }
      best = std::max(best, distinct);
    } else {
      best = std::max(best, trace(h, VertexSubset::from_indices(n, a)).size());
    }
    return best < (std::size_t{1} << std::min<std::size_t>(k, 62)) &&
           best < h.num_edges();
  });
  return best;
}

struct InducedHypergraph {
  Hypergraph hyper;
  std::vector<Index> vertex_map;  // new index -> original index
};

// Restriction to `keep`, reindexed in increasing order, deduplicated.
inline InducedHypergraph induced(const Hypergraph& h, const VertexSubset& keep) {
  InducedHypergraph out;
  out.vertex_map = keep.indices();
  const std::size_t m = out.vertex_map.size();
  std::vector<VertexSubset> edges;
  edges.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    VertexSubset r(m);
    for (std::size_t j = 0; j < m; ++j)
      if (e.test(out.vertex_map[j])) r.set(static_cast<Index>(j));
    edges.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (!h.labels().empty())
    for (Index v : out.vertex_map) labels.push_back(h.labels()[v]);
  out.hyper = Hypergraph(m, std::move(edges), std::move(labels)).dedup();
  return out;
}

}  // namespace tnet
