#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "tnet/hypergraph.hpp"

namespace tnet {

inline constexpr std::size_t kVcExactMaxVertices = 25;
inline constexpr std::size_t kTvcExactMaxVertices = 16;
inline constexpr std::size_t kMaxTShatterCheck = 20;

namespace detail {

// Walks subsets level by level, keeping only those accepted by `accepts`.
// A (k+1)-set is tested only if all of its k-subsets were accepted, which is
// sound whenever the accepted family is closed under taking subsets.
// Returns the largest accepted cardinality (0 when only the empty set is).
template <typename Accepts>
std::size_t largest_hereditary(std::size_t n, Accepts&& accepts) {
  std::vector<VertexSubset> level{VertexSubset(n)};
  if (!accepts(level.front())) return 0;
  std::size_t size = 0;
  while (!level.empty()) {
    std::unordered_set<VertexSubset, SubsetHash> members(level.begin(), level.end());
    std::vector<VertexSubset> next;
    for (const auto& s : level) {
      const auto idx = s.indices();
      const Index start = idx.empty() ? 0 : idx.back() + 1;
      for (Index v = start; v < n; ++v) {
        VertexSubset cand = s;
        cand.set(v);
        bool all_in = true;
        for (Index u : idx) {
          VertexSubset sub = cand;
          sub.reset(u);
          if (!members.contains(sub)) {
            all_in = false;
            break;
          }
        }
        if (all_in && accepts(cand)) next.push_back(std::move(cand));
      }
    }
    if (next.empty()) break;
    ++size;
    level = std::move(next);
  }
  return size;
}

}  // namespace detail

// Largest shattered set, by pruned exhaustive search. Edgeless hypergraphs
// and hypergraphs realizing only the empty set have dimension 0.
inline std::size_t vc_dimension(const Hypergraph& h, std::size_t max_vertices = kVcExactMaxVertices) {
  require(h.n() <= max_vertices, ErrorCode::TooLarge,
          "exact VC-dimension limited to " + std::to_string(max_vertices) + " vertices");
  if (h.num_edges() == 0) return 0;
  const Hypergraph distinct = h.is_dedup() ? h : h.dedup();
  return detail::largest_hereditary(h.n(), [&](const VertexSubset& s) {
    return s.card() <= kMaxShatterCheck && is_shattered(distinct, s);
  });
}

// True iff every T' ⊆ T is t-realized: T' ∪ S ∈ Pi_H(T) for some S ⊆ T with
// |S| < t.
inline bool is_t_shattered(const Hypergraph& h, const VertexSubset& t_set, std::size_t t) {
  require(t >= 1, ErrorCode::DomainError, "t must be at least 1");
  require(t_set.card() <= kMaxTShatterCheck, ErrorCode::TooLarge,
          "t-shatter check limited to " + std::to_string(kMaxTShatterCheck) + " vertices");
  const auto idx = t_set.indices();
  const std::size_t k = idx.size();
  const auto realized = detail::realized_patterns(h, idx);
  std::vector<bool> covered(realized.size(), false);
  for (std::uint32_t p = 0; p < realized.size(); ++p) {
    if (!realized[p]) continue;
    // Every T' ⊆ p with |p \ T'| < t.
    std::vector<Index> bits;
    for (std::size_t j = 0; j < k; ++j)
      if (p & (1U << j)) bits.push_back(static_cast<Index>(j));
    const std::size_t max_drop = std::min(t - 1, bits.size());
    for (std::size_t drop = 0; drop <= max_drop; ++drop) {
      for_each_combination(bits.size(), drop, [&](std::span<const Index> c) {
        std::uint32_t q = p;
        for (Index j : c) q &= ~(1U << bits[j]);
        covered[q] = true;
      });
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

// Largest t-shattered set. t-shattering is hereditary, so the same pruned
// level search as vc_dimension applies.
inline std::size_t t_vc_dimension(const Hypergraph& h, std::size_t t,
                                  std::size_t max_vertices = kTvcExactMaxVertices) {
  require(t >= 1, ErrorCode::DomainError, "t must be at least 1");
  require(h.n() <= max_vertices, ErrorCode::TooLarge,
          "exact t-VC-dimension limited to " + std::to_string(max_vertices) + " vertices");
  if (h.num_edges() == 0) return 0;
  const Hypergraph distinct = h.is_dedup() ? h : h.dedup();
  return detail::largest_hereditary(h.n(), [&](const VertexSubset& s) {
    return s.card() <= kMaxTShatterCheck && is_t_shattered(distinct, s, t);
  });
}

struct DualShatterFit {
  double c = 0.0;
  double d_star = 0.0;
  std::vector<std::size_t> samples;  // pi*(m) for m = 2..m_max
};

// Least-squares fit of log pi*_H(m) against log m over m = 2..m_max. The
// exponent is the fitted slope; C is the smallest constant with
// pi*(m) <= C m^{d*} on the sampled range. A diagnostic, not a bound.
inline DualShatterFit dual_shatter_fit(const Hypergraph& h, std::size_t m_max) {
  require(m_max >= 3, ErrorCode::DomainError, "dual_shatter_fit needs m_max >= 3");
  const Hypergraph d = dual(h);
  DualShatterFit fit;
  std::vector<double> xs, ys;
  for (std::size_t m = 2; m <= m_max; ++m) {
    const std::size_t v = shatter_function(d, m);
    fit.samples.push_back(v);
    if (v == 0) continue;
    xs.push_back(std::log(static_cast<double>(m)));
    ys.push_back(std::log(static_cast<double>(v)));
  }
  if (xs.size() < 2) return fit;
  const double nx = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  fit.d_star = (nx * sxy - sx * sy) / (nx * sxx - sx * sx);
  for (std::size_t m = 2; m <= m_max; ++m) {
    const double v = static_cast<double>(fit.samples[m - 2]);
    fit.c = std::max(fit.c, v / std::pow(static_cast<double>(m), fit.d_star));
  }
  return fit;
}

struct DimensionReport {
  std::size_t vc = 0;
  std::uint64_t dual_vc_bound = 0;  // Assouad: VC(H*) <= 2^{d+1}
  std::map<std::size_t, std::size_t> t_vc;
  std::optional<DualShatterFit> dual_fit;
};

inline DimensionReport dimension_report(const Hypergraph& h, const std::vector<std::size_t>& ts,
                                        std::optional<std::size_t> fit_m_max = std::nullopt,
                                        std::size_t vc_max_vertices = kVcExactMaxVertices,
                                        std::size_t tvc_max_vertices = kTvcExactMaxVertices) {
  DimensionReport r;
  r.vc = vc_dimension(h, vc_max_vertices);
  r.dual_vc_bound = std::uint64_t{1} << std::min<std::size_t>(r.vc + 1, 63);
  for (std::size_t t : ts) r.t_vc[t] = t_vc_dimension(h, t, tvc_max_vertices);
  if (fit_m_max) r.dual_fit = dual_shatter_fit(h.is_dedup() ? h : h.dedup(), *fit_m_max);
  return r;
}

}  // namespace tnet
