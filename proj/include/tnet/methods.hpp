#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tnet/geometry.hpp"
#include "tnet/nets.hpp"

namespace tnet {

struct MethodParams {
  std::string method;
  double eps = 0.25;
  std::size_t t = 1;
  std::optional<std::size_t> d;
  std::uint64_t seed = 0;
  double oversample = 1.0;
  const geo::PointSet* points = nullptr;  // frames / rects only
};

inline const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names{"random", "det",  "direct", "trivial", "lc",
                                              "vc1",    "exact", "frames", "rects"};
  return names;
}

// Range family a geometric method is verified against.
inline std::optional<geo::RangeKind> method_family(const std::string& method) {
  if (method == "frames") return geo::RangeKind::Frame;
  if (method == "rects") return geo::RangeKind::Rect;
  return std::nullopt;
}

// Runs one construction. A TransversalFound outcome is accepted: its subsets
// form a valid net and are returned as such.
inline TSubsetFamily run_method(const Hypergraph& h, const MethodParams& p) {
  auto need_d = [&] {
    require(p.d.has_value(), ErrorCode::BadInput, "method '" + p.method + "' needs a dimension (-d)");
    return *p.d;
  };
  auto need_t = [&](std::size_t t) {
    require(p.t == t, ErrorCode::BadInput, "method '" + p.method + "' builds " + std::to_string(t) + "-subsets");
  };
  try {
    if (p.method == "random") return random_net(h, p.eps, p.t, p.seed, p.oversample, p.d.value_or(2));
    if (p.method == "det") {
      need_t(1);
      return det_eps_net(h, p.eps, need_d());
    }
    if (p.method == "direct") return direct_eps_t_net(h, p.eps, p.t, need_d());
    if (p.method == "trivial") return trivial_eps_t_net(h, p.eps, p.t, p.d);
    if (p.method == "lc") {
      LcOptions opt;
      opt.inner = p.d ? LcInner::Det : LcInner::Random;
      opt.d = p.d.value_or(2);
      opt.oversample = p.oversample;
      return lc_eps_t_net(h, p.eps, p.t, p.seed, opt).net;
    }
    if (p.method == "vc1") return vc1_eps_t_net(h, p.eps, p.t);
    if (p.method == "exact") return min_net_exact(h, p.eps, p.t);
    if (p.method == "frames" || p.method == "rects") {
      require(p.points != nullptr, ErrorCode::BadInput, "method '" + p.method + "' needs a point set");
      need_t(2);
      return p.method == "frames" ? geo::frames_eps2net(*p.points, p.eps)
                                  : geo::rectangles_eps2net(*p.points, p.eps, p.seed);
    }
  } catch (const TransversalFoundError& e) {
    return e.transversal();
  }
  fail(ErrorCode::BadInput, "unknown method '" + p.method + "'");
}

}  // namespace tnet
