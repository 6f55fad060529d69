#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tnet/hypergraph.hpp"
#include "tnet/io.hpp"
#include "tnet/nets.hpp"

namespace tnet::geo {

using Rational = boost::rational<std::int64_t>;

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Points with pairwise distinct exact coordinates.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
    std::set<std::pair<Rational, Rational>> seen;
    for (const auto& p : pts_)
      require(seen.emplace(p.x, p.y).second, ErrorCode::BadInput, "points must be pairwise distinct");
  }
  std::size_t size() const noexcept { return pts_.size(); }
  const Point& operator[](std::size_t i) const { return pts_.at(i); }
  const std::vector<Point>& points() const noexcept { return pts_; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }
  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> pts_;
};

// "a", "-a/b" or a decimal such as "0.125", read exactly.
inline Rational parse_rational(std::string_view tok) {
  auto bad = [&] { fail(ErrorCode::ParseError, "bad rational '" + std::string(tok) + "'"); };
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) bad();
    return v;
  };
  if (const auto slash = tok.find('/'); slash != std::string_view::npos) {
    const auto den = parse_int(tok.substr(slash + 1));
    if (den == 0) bad();
    return Rational(parse_int(tok.substr(0, slash)), den);
  }
  if (const auto dot = tok.find('.'); dot != std::string_view::npos) {
    const bool neg = !tok.empty() && tok[0] == '-';
    const auto whole = tok.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
    const auto frac = tok.substr(dot + 1);
    if (frac.size() > 15 || (whole.empty() && frac.empty())) bad();
    for (char c : frac)
      if (c < '0' || c > '9') bad();
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
    if (w < 0) bad();
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    Rational r(w * scale + f, scale);
    return neg ? -r : r;
  }
  return Rational(parse_int(tok));
}

inline std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline PointSet parse_pts(std::string_view text) {
  std::vector<Point> pts;
  io::detail::for_each_line(text, [&](const std::vector<std::string_view>& toks, std::size_t line_no) {
    require(toks.size() == 3 && toks[0] == "p", ErrorCode::ParseError,
            "line " + std::to_string(line_no) + ": expected 'p <x> <y>'");
    pts.push_back({parse_rational(toks[1]), parse_rational(toks[2])});
  });
  try {
    return PointSet(std::move(pts));
  } catch (const Error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

inline std::string serialize_pts(const PointSet& ps) {
  std::string out;
  for (const auto& p : ps) out += "p " + format_rational(p.x) + " " + format_rational(p.y) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Generators

inline PointSet grid(std::size_t side) {
  require(side >= 1, ErrorCode::BadInput, "grid side must be positive");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j)
      pts.push_back({Rational(static_cast<std::int64_t>(i)), Rational(static_cast<std::int64_t>(j))});
  return PointSet(std::move(pts));
}

// n distinct points with integer coordinates in [0, range).
inline PointSet random_uniform(std::size_t n, std::uint64_t seed, std::int64_t range = 0) {
  if (range == 0) range = std::max<std::int64_t>(8, 4 * static_cast<std::int64_t>(n));
  require(static_cast<double>(range) * static_cast<double>(range) >= static_cast<double>(n), ErrorCode::BadInput,
          "coordinate range too small for n distinct points");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(0, range - 1);
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<Point> pts;
  while (pts.size() < n) {
    const auto x = coord(rng);
    const auto y = coord(rng);
    if (seen.emplace(x, y).second) pts.push_back({Rational(x), Rational(y)});
  }
  return PointSet(std::move(pts));
}

// Two decreasing diagonal runs of m = n/2 points each:
// (1 - k/m, -k/m) and (-k/m, 1 - k/m), k = 1..m.
inline PointSet staircase(std::size_t n) {
  require(n >= 4 && n % 2 == 0, ErrorCode::BadInput, "staircase needs an even n >= 4");
  const auto m = static_cast<std::int64_t>(n / 2);
  std::vector<Point> pts;
  for (std::int64_t k = 1; k <= m; ++k) pts.push_back({Rational(1) - Rational(k, m), -Rational(k, m)});
  for (std::int64_t k = 1; k <= m; ++k) pts.push_back({-Rational(k, m), Rational(1) - Rational(k, m)});
  return PointSet(std::move(pts));
}

// ---------------------------------------------------------------------------
// Range families

enum class RangeKind { Halfplane, Disk, Rect, Frame, Segment };

inline std::string_view name(RangeKind k) {
  switch (k) {
    case RangeKind::Halfplane: return "halfplane";
    case RangeKind::Disk: return "disk";
    case RangeKind::Rect: return "rect";
    case RangeKind::Frame: return "frame";
    case RangeKind::Segment: return "segment";
  }
  return "?";
}

inline RangeKind parse_range_kind(std::string_view s) {
  for (auto k : {RangeKind::Halfplane, RangeKind::Disk, RangeKind::Rect, RangeKind::Frame, RangeKind::Segment})
    if (name(k) == s) return k;
  fail(ErrorCode::BadInput, "unknown range family '" + std::string(s) + "'");
}

struct Range {
  std::string params;
  VertexSubset members;
};

struct RangeFamily {
  RangeKind kind = RangeKind::Halfplane;
  std::vector<Range> ranges;
};

struct GeometricInstance {
  PointSet points;
  RangeKind kind = RangeKind::Halfplane;
  Hypergraph hyper;
  std::vector<std::string> range_map;  // edge index -> range parameters
};

inline constexpr std::uint64_t kMaxRangeCandidates = 50'000'000;

namespace detail {

struct IPoint {
  std::int64_t x, y;
};

// Uniformly rescaled integer coordinates; the predicates below then run in
// __int128 without rounding.
inline std::vector<IPoint> integer_coords(const PointSet& ps) {
  constexpr std::int64_t kLimit = std::int64_t{1} << 28;
  std::int64_t l = 1;
  for (const auto& p : ps) {
    l = std::lcm(l, p.x.denominator());
    l = std::lcm(l, p.y.denominator());
    require(l <= kLimit, ErrorCode::TooLarge, "coordinate denominators too large for exact predicates");
  }
  std::vector<IPoint> out;
  for (const auto& p : ps) {
    const auto x = p.x.numerator() * (l / p.x.denominator());
    const auto y = p.y.numerator() * (l / p.y.denominator());
    require(std::abs(x) <= kLimit && std::abs(y) <= kLimit, ErrorCode::TooLarge,
            "scaled coordinates too large for exact predicates");
    out.push_back({x, y});
  }
  return out;
}

using i128 = __int128;

inline i128 cross(const IPoint& o, const IPoint& a, const IPoint& b) {
  return static_cast<i128>(a.x - o.x) * (b.y - o.y) - static_cast<i128>(a.y - o.y) * (b.x - o.x);
}

inline i128 dot(const IPoint& o, const IPoint& a, const IPoint& b) {
  return static_cast<i128>(a.x - o.x) * (b.x - o.x) + static_cast<i128>(a.y - o.y) * (b.y - o.y);
}

// > 0 when d lies strictly inside the circle through a, b, c (counterclockwise).
inline i128 incircle(const IPoint& a, const IPoint& b, const IPoint& c, const IPoint& d) {
  const i128 adx = a.x - d.x, ady = a.y - d.y;
  const i128 bdx = b.x - d.x, bdy = b.y - d.y;
  const i128 cdx = c.x - d.x, cdy = c.y - d.y;
  const i128 alift = adx * adx + ady * ady;
  const i128 blift = bdx * bdx + bdy * bdy;
  const i128 clift = cdx * cdx + cdy * cdy;
  return alift * (bdx * cdy - bdy * cdx) - blift * (adx * cdy - ady * cdx) + clift * (adx * bdy - ady * bdx);
}

class Collector {
 public:
  explicit Collector(std::size_t n) : n_(n) {}
  void add(VertexSubset s, const std::string& params) {
    if (seen_.insert(s).second) out_.push_back({params, std::move(s)});
  }
  template <typename F>
  void add_lazy(VertexSubset s, F&& params) {
    if (seen_.insert(s).second) out_.push_back({params(), std::move(s)});
  }
  std::vector<Range> take() { return std::move(out_); }
  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
  std::unordered_set<VertexSubset, SubsetHash> seen_;
  std::vector<Range> out_;
};

// Sorted distinct values and each point's rank among them.
inline std::pair<std::vector<std::int64_t>, std::vector<std::size_t>> ranks(const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> d = v;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  std::vector<std::size_t> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = static_cast<std::size_t>(std::lower_bound(d.begin(), d.end(), v[i]) - d.begin());
  return {d, r};
}

inline void halfplanes(const std::vector<IPoint>& p, Collector& out) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      VertexSubset left(n);
      std::vector<std::pair<i128, Index>> line;
      for (std::size_t k = 0; k < n; ++k) {
        const i128 c = cross(p[i], p[j], p[k]);
        if (c > 0)
          left.set(static_cast<Index>(k));
        else if (c == 0)
          line.emplace_back(dot(p[i], p[j], p[k]), static_cast<Index>(k));
      }
      std::sort(line.begin(), line.end());
      // Rotating the boundary slightly about a point of the line puts a
      // prefix of the collinear points on the left side.
      VertexSubset s = left;
      for (std::size_t r = 0; r <= line.size(); ++r) {
        if (r > 0) s.set(line[r - 1].second);
        out.add_lazy(s, [&] {
          return "left of p" + std::to_string(i) + "->p" + std::to_string(j) + " +" + std::to_string(r);
        });
      }
    }
}

inline void disks(const std::vector<IPoint>& p, Collector& out) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) out.add(VertexSubset::from_indices(n, {static_cast<Index>(i)}), "point p" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      VertexSubset s(n);
      for (std::size_t k = 0; k < n; ++k)
        if (dot(p[k], p[i], p[j]) <= 0) s.set(static_cast<Index>(k));
      out.add_lazy(std::move(s), [&] { return "diametral p" + std::to_string(i) + " p" + std::to_string(j); });
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        const i128 orient = cross(p[i], p[j], p[l]);
        if (orient == 0) continue;
        VertexSubset closed(n), open(n);
        for (std::size_t k = 0; k < n; ++k) {
          i128 v = incircle(p[i], p[j], p[l], p[k]);
          if (orient < 0) v = -v;
          if (v >= 0) closed.set(static_cast<Index>(k));
          if (v > 0) open.set(static_cast<Index>(k));
        }
        const std::string tag = "p" + std::to_string(i) + " p" + std::to_string(j) + " p" + std::to_string(l);
        out.add(std::move(closed), "circumdisk " + tag);
        out.add(std::move(open), "open circumdisk " + tag);
      }
}

inline void rects(const std::vector<IPoint>& p, Collector& out) {
  const std::size_t n = p.size();
  std::vector<std::int64_t> xs, ys;
  for (const auto& q : p) {
    xs.push_back(q.x);
    ys.push_back(q.y);
  }
  const auto [dx, rx] = ranks(xs);
  const auto [dy, ry] = ranks(ys);
  require(binomial(dx.size() + 1, 2) * binomial(dy.size() + 1, 2) <= kMaxRangeCandidates, ErrorCode::TooLarge,
          "too many rectangle candidates");
  for (std::size_t a = 0; a < dx.size(); ++a) {
    std::vector<VertexSubset> rows(dy.size(), VertexSubset(n));
    for (std::size_t b = a; b < dx.size(); ++b) {
      for (std::size_t k = 0; k < n; ++k)
        if (rx[k] == b) rows[ry[k]].set(static_cast<Index>(k));
      for (std::size_t c = 0; c < dy.size(); ++c) {
        VertexSubset s(n);
        for (std::size_t d = c; d < dy.size(); ++d) {
          s |= rows[d];
          out.add_lazy(s, [&] {
            return "rect x[" + std::to_string(dx[a]) + "," + std::to_string(dx[b]) + "] y[" + std::to_string(dy[c]) +
                   "," + std::to_string(dy[d]) + "]";
          });
        }
      }
    }
  }
}

// Frame sides range over point coordinates and the gaps between them
// (extended position 2r+1 is the r-th distinct coordinate, even positions are
// gaps), so a side may pass through points or avoid them.
inline void frames(const std::vector<IPoint>& p, Collector& out) {
  const std::size_t n = p.size();
  std::vector<std::int64_t> xs, ys;
  for (const auto& q : p) {
    xs.push_back(q.x);
    ys.push_back(q.y);
  }
  const auto [dx, rx] = ranks(xs);
  const auto [dy, ry] = ranks(ys);
  const std::size_t ex = 2 * dx.size() + 1, ey = 2 * dy.size() + 1;
  require(binomial(ex + 1, 2) * binomial(ey + 1, 2) <= kMaxRangeCandidates, ErrorCode::TooLarge,
          "too many frame candidates");
  std::vector<VertexSubset> col(ex, VertexSubset(n)), row(ey, VertexSubset(n));
  for (std::size_t k = 0; k < n; ++k) {
    col[2 * rx[k] + 1].set(static_cast<Index>(k));
    row[2 * ry[k] + 1].set(static_cast<Index>(k));
  }
  auto spans = [&](const std::vector<VertexSubset>& lines) {
    std::vector<std::vector<VertexSubset>> s(lines.size());
    for (std::size_t a = 0; a < lines.size(); ++a) {
      VertexSubset acc(n);
      for (std::size_t b = a; b < lines.size(); ++b) {
        acc |= lines[b];
        s[a].push_back(acc);
      }
    }
    return s;
  };
  const auto xspan = spans(col), yspan = spans(row);
  auto coord = [](const std::vector<std::int64_t>& d, std::size_t pos) {
    if (pos % 2 == 1) return std::to_string(d[pos / 2]);
    return std::string(pos == 0 ? "-" : "") + "gap" + std::to_string(pos / 2);
  };
  for (std::size_t a = 0; a < ex; ++a)
    for (std::size_t b = a; b < ex; ++b) {
      const VertexSubset verticals = col[a] | col[b];
      const VertexSubset& inside_x = xspan[a][b - a];
      for (std::size_t c = 0; c < ey; ++c)
        for (std::size_t d = c; d < ey; ++d) {
          VertexSubset s = (verticals & yspan[c][d - c]) | ((row[c] | row[d]) & inside_x);
          out.add_lazy(std::move(s), [&] {
            return "frame x[" + coord(dx, a) + "," + coord(dx, b) + "] y[" + coord(dy, c) + "," + coord(dy, d) + "]";
          });
        }
    }
}

// Points grouped by shared x (vertical lines) or shared y (horizontal),
// each line sorted along its direction.
inline std::vector<std::vector<Index>> axis_lines(const std::vector<IPoint>& p) {
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, Index>>> horiz, vert;
  for (std::size_t k = 0; k < p.size(); ++k) {
    horiz[p[k].y].emplace_back(p[k].x, static_cast<Index>(k));
    vert[p[k].x].emplace_back(p[k].y, static_cast<Index>(k));
  }
  std::vector<std::vector<Index>> out;
  for (auto* group : {&horiz, &vert})
    for (auto& [key, line] : *group) {
      std::sort(line.begin(), line.end());
      std::vector<Index> idx;
      for (const auto& [c, k] : line) idx.push_back(k);
      out.push_back(std::move(idx));
    }
  return out;
}

inline void segments(const std::vector<IPoint>& p, Collector& out) {
  const std::size_t n = p.size();
  std::size_t line_no = 0;
  for (const auto& line : axis_lines(p)) {
    for (std::size_t a = 0; a < line.size(); ++a) {
      VertexSubset s(n);
      for (std::size_t b = a; b < line.size(); ++b) {
        s.set(line[b]);
        out.add_lazy(s, [&] {
          return "segment line" + std::to_string(line_no) + " [" + std::to_string(a) + "," + std::to_string(b) + "]";
        });
      }
    }
    ++line_no;
  }
}

}  // namespace detail

// One range per distinct realized point subset, the empty and full sets
// included.
inline RangeFamily canonical_ranges(const PointSet& pts, RangeKind kind) {
  const std::size_t n = pts.size();
  require(n <= max_vertices(), ErrorCode::TooLarge, "too many points");
  if (kind == RangeKind::Disk) require(n <= 300, ErrorCode::TooLarge, "disk enumeration limited to 300 points");
  if (kind == RangeKind::Rect || kind == RangeKind::Frame)
    require(n <= 500, ErrorCode::TooLarge, "rectangle/frame enumeration limited to 500 points");
  const auto ip = detail::integer_coords(pts);
  detail::Collector out(n);
  out.add(VertexSubset(n), "empty");
  switch (kind) {
    case RangeKind::Halfplane: detail::halfplanes(ip, out); break;
    case RangeKind::Disk: detail::disks(ip, out); break;
    case RangeKind::Rect: detail::rects(ip, out); break;
    case RangeKind::Frame: detail::frames(ip, out); break;
    case RangeKind::Segment: detail::segments(ip, out); break;
  }
  if (kind != RangeKind::Segment && kind != RangeKind::Frame) out.add(VertexSubset::full(n), "all");
  return {kind, out.take()};
}

inline GeometricInstance compile(const PointSet& pts, const RangeFamily& fam) {
  GeometricInstance g;
  g.points = pts;
  g.kind = fam.kind;
  std::vector<VertexSubset> edges;
  std::unordered_set<VertexSubset, SubsetHash> seen;
  for (const auto& r : fam.ranges)
    if (seen.insert(r.members).second) {
      edges.push_back(r.members);
      g.range_map.push_back(r.params);
    }
  g.hyper = Hypergraph(pts.size(), std::move(edges));
  return g;
}

inline GeometricInstance compile(const PointSet& pts, RangeKind kind) {
  return compile(pts, canonical_ranges(pts, kind));
}

// ---------------------------------------------------------------------------
// eps-2-nets for frames and rectangles

inline constexpr std::uint64_t kGeometryNodeBudget = 200'000;

// Pairs of the (i*k)-th and ((i+1)*k)-th points, k = ceil(eps*n/4), along
// every axis-parallel line. Two points k apart never lie in a run of k
// consecutive points, so this is not a net in general; kept for comparison.
inline TSubsetFamily frames_spaced_pairs(const PointSet& pts, double eps) {
  const std::size_t n = pts.size();
  const std::size_t k = std::max<std::size_t>(1, ceil_eps_n(eps / 4.0, n));
  TSubsetFamily out(2, "frames-spaced");
  for (const auto& line : detail::axis_lines(detail::integer_coords(pts)))
    for (std::size_t i = 1; (i + 1) * k <= line.size(); ++i)
      out.add(VertexSubset::from_indices(n, {std::min(line[i * k - 1], line[(i + 1) * k - 1]),
                                             std::max(line[i * k - 1], line[(i + 1) * k - 1])}));
  return out;
}

// eps-2-net for points and frames.
//
// A heavy frame has a side holding at least ceil(eps*n/4) >= 2 points, which
// are consecutive along an axis-parallel line, so the pairs of neighbours on
// such lines always suffice. Among them the net takes a smallest set
// (budgeted branch-and-bound) covering every heavy canonical frame.
inline TSubsetFamily frames_eps2net(const PointSet& pts, double eps) {
  check_eps(eps);
  const std::size_t n = pts.size();
  require(eps * static_cast<double>(n) >= 5.0 - 1e-9, ErrorCode::TooFewPoints, "frames net needs n >= 5/eps");
  const auto inst = compile(pts, RangeKind::Frame);
  const auto heavy = heavy_edge_sets(inst.hyper, eps);
  std::vector<VertexSubset> cands;
  for (const auto& line : detail::axis_lines(detail::integer_coords(pts)))
    for (std::size_t i = 0; i + 1 < line.size(); ++i) cands.push_back(VertexSubset::from_indices(n, {line[i], line[i + 1]}));
  std::vector<VertexSubset> constraints;
  for (const auto& e : heavy) {
    VertexSubset m(cands.size());
    for (std::size_t c = 0; c < cands.size(); ++c)
      if (cands[c].is_subset_of(e)) m.set(static_cast<Index>(c));
    require(!m.empty(), ErrorCode::Infeasible, "a heavy frame holds no neighbouring pair");
    constraints.push_back(std::move(m));
  }
  TSubsetFamily out(2, "frames");
  const auto sol = solve_cover(CoverProblem::from_constraints(cands.size(), std::move(constraints)),
                               kGeometryNodeBudget);
  for (Index c : sol.chosen) out.add(cands[c]);
  return out;
}

// eps-2-net for points and axis-parallel rectangles.
//
// K is built in three layers so that every heavy rectangle holds >= 3 of its
// points: each layer is a smallest hitting set of the heavy rectangles met at
// most twice so far, restricted to unused points. After rank-compressing K,
// the bounding box of R ∩ K of a heavy R splits into two overlapping boxes of
// aspect ratio 2^i, and one of them holds two points of K. Every class i then
// gets a 2-net of its boxes that hold >= 2 points of K.
//
// Heavy rectangles with only two points (possible when eps*n < 3) are their
// own pair.
inline TSubsetFamily rectangles_eps2net(const PointSet& pts, double eps, std::uint64_t seed = 0) {
  (void)seed;  // the layers and classes are solved deterministically
  check_eps(eps);
  const std::size_t n = pts.size();
  require(eps * static_cast<double>(n) >= 2.0 - 1e-9, ErrorCode::TooFewPoints, "rectangle net needs eps*n >= 2");
  const auto inst = compile(pts, RangeKind::Rect);
  const auto heavy = heavy_edge_sets(inst.hyper, eps);
  TSubsetFamily out(2, "rects");

  std::vector<VertexSubset> big;
  for (const auto& e : heavy) {
    if (e.card() == 2)
      out.add(e);
    else
      big.push_back(e);
  }
  VertexSubset k_set(n);
  for (int layer = 0; layer < 3; ++layer) {
    std::vector<VertexSubset> targets;
    for (const auto& e : big)
      if (e.intersection_card(k_set) == static_cast<std::size_t>(layer)) targets.push_back(e - k_set);
    if (targets.empty()) continue;
    const auto layer_net = min_hitting_set(n, targets, kGeometryNodeBudget);
    for (const auto& m : layer_net.net.members()) k_set |= m;
    ++out.iterations;
  }

  const auto ip = detail::integer_coords(pts);
  const auto k_pts = k_set.indices();
  std::vector<std::int64_t> kx, ky;
  for (Index v : k_pts) {
    kx.push_back(ip[v].x);
    ky.push_back(ip[v].y);
  }
  const auto [dx, rx] = detail::ranks(kx);
  const auto [dy, ry] = detail::ranks(ky);
  // Doubled rank coordinates; a box [lo, hi] of ranks becomes [2lo-1, 2hi+1].
  auto inside = [&](std::int64_t x0, std::int64_t x1, std::int64_t y0, std::int64_t y1) {
    VertexSubset s(n);
    for (std::size_t q = 0; q < k_pts.size(); ++q) {
      const auto x = 2 * static_cast<std::int64_t>(rx[q]);
      const auto y = 2 * static_cast<std::int64_t>(ry[q]);
      if (x0 <= x && x <= x1 && y0 <= y && y <= y1) s.set(k_pts[q]);
    }
    return s;
  };

  std::map<int, std::vector<VertexSubset>> classes;
  for (const auto& e : big) {
    std::int64_t lo_x = std::numeric_limits<std::int64_t>::max(), hi_x = -1, lo_y = lo_x, hi_y = -1;
    for (std::size_t q = 0; q < k_pts.size(); ++q)
      if (e.test(k_pts[q])) {
        lo_x = std::min<std::int64_t>(lo_x, static_cast<std::int64_t>(rx[q]));
        hi_x = std::max<std::int64_t>(hi_x, static_cast<std::int64_t>(rx[q]));
        lo_y = std::min<std::int64_t>(lo_y, static_cast<std::int64_t>(ry[q]));
        hi_y = std::max<std::int64_t>(hi_y, static_cast<std::int64_t>(ry[q]));
      }
    const std::int64_t x0 = 2 * lo_x - 1, x1 = 2 * hi_x + 1, y0 = 2 * lo_y - 1, y1 = 2 * hi_y + 1;
    const std::int64_t w = x1 - x0, h = y1 - y0;
    int cls = 0;
    VertexSubset first(n), second(n);
    if (w >= h) {
      std::int64_t side = h;
      while (2 * side < w) {
        side *= 2;
        ++cls;
      }
      first = inside(x0, x0 + side, y0, y1);
      second = inside(x1 - side, x1, y0, y1);
    } else {
      std::int64_t side = w;
      while (2 * side < h) {
        side *= 2;
        --cls;
      }
      first = inside(x0, x1, y0, y0 + side);
      second = inside(x0, x1, y1 - side, y1);
    }
    for (auto* half : {&first, &second})
      if (half->card() >= 2) classes[cls].push_back(std::move(*half));
  }
  for (auto& [cls, boxes] : classes) {
    const auto class_net = min_cover_family(n, std::move(boxes), 2, kGeometryNodeBudget);
    for (const auto& m : class_net.net.members()) out.add(m);
    ++out.iterations;
  }
  return out;
}

}  // namespace tnet::geo
