// Acceptance suite: one PASS/FAIL line per criterion. A criterion also fails
// when it overruns its time limit. Exit status 1 if anything failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "tnet/methods.hpp"
#include "tnet/tnet.hpp"

using namespace tnet;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Failures {
  std::size_t count = 0;
  std::string first;
  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    return {count == 0, summary + (count ? "; " + std::to_string(count) + " failures, first: " + first : "")};
  }
};

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::map<std::string, std::size_t> g_error_codes;

// det/direct retried with d+1 on NoProgress, up to d_cap.
std::optional<TSubsetFamily> run_with_retry(const Hypergraph& h, MethodParams p, std::size_t d_cap) {
  for (;;) {
    try {
      return run_method(h, p);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NoProgress && p.d && *p.d < d_cap) {
        p.d = *p.d + 1;
        continue;
      }
      ++g_error_codes[std::string(name(e.code()))];
      return std::nullopt;
    }
  }
}

// 1
Outcome soundness() {
  const auto suite = gen::random_suite(200, 2024);
  Failures f;
  std::size_t checked = 0, errors = 0, lc_invalid = 0;
  for (const auto& inst : suite) {
    const auto& h = inst.hyper;
    for (const std::string method : {"random", "det", "direct", "trivial", "lc", "vc1"}) {
      if (method == "vc1" && inst.vc_bound != 1) continue;
      for (double eps : {0.2, 0.3, 0.5}) {
        for (std::size_t t = 1; t <= 3; ++t) {
          if (method == "det" && t != 1) continue;
          if (method == "direct" && t == 1) continue;
          const std::string tag = inst.name + " " + method + " eps=" + format_real(eps) + " t=" + std::to_string(t);
          if (method == "lc") {
            try {
              const auto r = lc_eps_t_net(h, eps, t, 7);
              if (!r.report.valid) {
                ++lc_invalid;
                continue;
              }
              ++checked;
              if (!verify_net(h, eps, t, r.net).valid) f.add(tag);
            } catch (const Error& e) {
              ++errors;
              ++g_error_codes[std::string(name(e.code()))];
            }
            continue;
          }
          MethodParams p;
          p.method = method;
          p.eps = eps;
          p.t = t;
          p.seed = 7;
          if (method == "det") p.d = inst.vc_bound;
          if (method == "direct") p.d = std::max(t, inst.vc_bound + t - 1);
          const auto s = run_with_retry(h, p, 8);
          if (!s) {
            ++errors;
            continue;
          }
          ++checked;
          if (!verify_net(h, eps, t, *s).valid) f.add(tag);
        }
      }
    }
  }
  std::string codes;
  for (const auto& [code, count] : g_error_codes) codes += (codes.empty() ? "" : " ") + code + "=" + std::to_string(count);
  return f.outcome(std::to_string(checked) + " outputs verified, " + std::to_string(errors) +
                   " construction errors (" + codes + "), " + std::to_string(lc_invalid) + " lc outputs reported invalid");
}

// 2
Outcome gamma_anchor() {
  Failures f;
  const double g2 = gamma(2);
  if (g2 < 4.53 || g2 > 4.56) f.add("gamma(2) = " + fmt(g2, 6));
  std::size_t cells = 0;
  for (int n = 1; n <= 60; ++n)
    for (int j = 1; j <= 100; ++j) {
      const double a = j / 200.0;
      const int k = static_cast<int>(std::floor(a * n));
      double sum = 0, c = 1;
      for (int i = 0; i <= k; ++i) {
        sum += c;
        c = c * (n - i) / (i + 1);
      }
      ++cells;
      if (std::log2(sum) > n * oracle::binary_entropy(std::min(a, 0.5 - 1e-15)) + 1e-9)
        f.add("binomial sum at n=" + std::to_string(n) + " a=" + fmt(a, 3));
    }
  for (int k = 1; k <= 9; ++k) {
    const double y = k / 10.0;
    const double x = entropy_inverse(y);
    if (x < y / (2 * std::log2(6 / y)) - 1e-9 || x > y / std::log2(1 / y) + 1e-9) f.add("entropy-inverse sandwich at y=" + fmt(y, 1));
  }
  return f.outcome("gamma(2) = " + fmt(g2, 5) + ", " + std::to_string(cells) + " binomial-sum cells, 9 entropy-inverse sandwich points");
}

// 3
Outcome tuple_vc_bracket() {
  std::mt19937_64 rng(303);
  Failures f;
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 3 + rng() % 8;
    const auto ms = oracle::random_edges(n, 1 + rng() % 30, 0.5, rng);
    const auto h = oracle::from_masks(n, ms);
    const int d = oracle::vc(n, ms);
    for (int t = 2; t <= 3; ++t) {
      const auto th = build_Ht(h, static_cast<std::size_t>(t));
      const int v = static_cast<int>(vc_dimension(th.hyper, th.hyper.n()));
      const int hi = static_cast<int>(std::ceil(gamma(t) * d));
      if (v < d - t + 1 || v > hi)
        f.add("rep " + std::to_string(rep) + " t=" + std::to_string(t) + " d=" + std::to_string(d) +
              " VC(H^t)=" + std::to_string(v));
    }
  }
  return f.outcome("100 hypergraphs x t in {2,3}");
}

// 4
Outcome t_vc_anchors() {
  Failures f;
  const auto ex = Hypergraph::from_lists(3, {{0}, {1, 2}, {0, 2}, {0, 1, 2}});
  if (vc_dimension(ex) != 1) f.add("example vc");
  if (t_vc_dimension(ex, 2) != 3) f.add("example t_vc[2]");
  std::size_t worst = 0;
  for (std::uint32_t fam = 1; fam < (1U << 16); ++fam) {
    std::vector<oracle::Mask> ms;
    for (oracle::Mask e = 0; e < 16; ++e)
      if (fam >> e & 1U) ms.push_back(e);
    const auto h = oracle::from_masks(4, ms);
    const auto d = vc_dimension(h);
    const auto d2 = t_vc_dimension(h, 2);
    worst = std::max(worst, d2 - std::min(d2, 2 * d));
    if (d2 > 2 * d + 1) f.add("4-vertex family " + std::to_string(fam));
  }
  std::mt19937_64 rng(404);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + rng() % 10;
    const auto h = oracle::from_masks(n, oracle::random_edges(n, 1 + rng() % 40, 0.5, rng));
    if (t_vc_dimension(h, 2) > 2 * vc_dimension(h) + 1) f.add("random rep " + std::to_string(rep));
  }
  return f.outcome("example vc=1 t_vc[2]=3; 65535 four-vertex families + 200 random");
}

// 5
Outcome vc1_bound() {
  Failures f;
  std::mt19937_64 rng(505);
  std::size_t runs = 0;
  for (int inst = 0; inst < 50; ++inst) {
    const std::size_t n = 20 + rng() % 21;
    const auto h = gen::chains(n, 1 + rng() % 3, rng());
    for (double eps : {0.2, 0.25, 0.3, 0.5})
      for (std::size_t t = 1; t <= 3; ++t) {
        if (n < t * ceil_inverse(eps)) continue;
        ++runs;
        const std::string tag = "instance " + std::to_string(inst) + " eps=" + format_real(eps) + " t=" + std::to_string(t);
        try {
          const auto s = vc1_eps_t_net(h, eps, t);
          if (!verify_net(h, eps, t, s).valid) f.add(tag + " invalid");
          if (s.size() > t * ceil_inverse(eps) + 1) f.add(tag + " size " + std::to_string(s.size()));
        } catch (const Error& e) {
          f.add(tag + " " + e.what());
        }
      }
  }
  return f.outcome(std::to_string(runs) + " runs on 50 chain instances");
}

// 6
Outcome staircase_anchor() {
  Failures f;
  const auto ps = geo::staircase(8);
  const auto h = geo::compile(ps, geo::RangeKind::Rect).hyper;
  const auto net = min_net_exact(h, 0.25, 2);
  if (net.size() != 22) f.add("exact size " + std::to_string(net.size()));
  if (net.size() < 16) f.add("below 1/eps^2");
  if (!verify_net(h, 0.25, 2, net).valid) f.add("exact net invalid");
  std::size_t cross = 0;
  for (Index u = 0; u < 4; ++u)
    for (Index v = 4; v < 8; ++v) {
      const auto pair = VertexSubset::from_indices(8, {u, v});
      const bool edge = std::find(h.edges().begin(), h.edges().end(), pair) != h.edges().end();
      if (!edge || !is_heavy(pair, 0.25, 8)) f.add("cross pair not a heavy edge");
      cross += edge;
    }
  return f.outcome("min net " + std::to_string(net.size()) + ", " + std::to_string(cross) + " cross pairs are size-2 heavy edges");
}

// 7
Outcome frames_bound() {
  Failures f;
  std::vector<std::pair<std::string, geo::PointSet>> sets;
  for (std::size_t side : {8U, 10U, 12U}) sets.emplace_back("grid" + std::to_string(side), geo::grid(side));
  for (std::uint64_t seed = 1; seed <= 2; ++seed)
    sets.emplace_back("random" + std::to_string(seed), geo::random_uniform(40, seed, 8));
  std::size_t runs = 0;
  std::size_t worst_slack = 1000;
  for (const auto& [name, ps] : sets) {
    const auto h = geo::compile(ps, geo::RangeKind::Frame).hyper;
    for (double eps : {0.2, 0.25, 0.3, 0.5}) {
      if (runs == 20) break;
      ++runs;
      const std::string tag = name + " eps=" + format_real(eps);
      try {
        const auto s = geo::frames_eps2net(ps, eps);
        if (!verify_net(h, eps, 2, s).valid) f.add(tag + " invalid");
        const double bound = 8.0 / eps - 2.0;
        if (static_cast<double>(s.size()) > bound + 1e-9) f.add(tag + " size " + std::to_string(s.size()));
        worst_slack = std::min<std::size_t>(worst_slack, static_cast<std::size_t>(bound - static_cast<double>(s.size())));
      } catch (const Error& e) {
        f.add(tag + " " + e.what());
      }
    }
  }
  return f.outcome(std::to_string(runs) + " instances, min slack to 8/eps-2: " + std::to_string(worst_slack));
}

// 8
Outcome turan_identity() {
  Failures f;
  std::size_t cells = 0;
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::size_t k : {3U, 4U})
      for (std::size_t t : {2U, 3U}) {
        if (!(t < k && k <= n) || binomial(n, t) > kMaxTuranTSubsets) continue;
        ++cells;
        const auto r = check_turan_identity(n, k, t);
        if (!r.identity_holds)
          f.add("(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(t) + ")");
      }
  for (std::size_t n = 3; n <= 8; ++n)
    if (turan_exact(n, 3, 2) != n * n / 4) f.add("Mantel n=" + std::to_string(n));
  return f.outcome(std::to_string(cells) + " (n,k,t) cells, Mantel n=3..8");
}

// 9
Outcome crossing_growth() {
  Failures f;
  const auto small = geo::compile(geo::grid(10), geo::RangeKind::Halfplane).hyper;
  const auto large = geo::compile(geo::grid(20), geo::RangeKind::Halfplane).hyper;
  const auto a = build_spanning_cycle(small, 0).max_crossing;
  const auto b = build_spanning_cycle(large, 0).max_crossing;
  const double ratio = static_cast<double>(b) / static_cast<double>(std::max<std::size_t>(a, 1));
  if (ratio > 2.5) f.add("ratio " + fmt(ratio, 3));
  return f.outcome("max crossing " + std::to_string(a) + " (n=100) vs " + std::to_string(b) + " (n=400), ratio " +
                   fmt(ratio, 3));
}

// 10. Fixture constants per dimension: iterations * eps^d for det and
// iterations * eps^(d+1-t) for direct (t = 2), maxima measured on this suite
// and pinned with headroom. Dimensions not listed fail, so a suite change
// forces a re-measurement.
const std::map<std::size_t, double> kDetCeiling{{1, 1.5}, {2, 1.0}, {3, 0.5}};
const std::map<std::size_t, double> kDirectCeiling{{2, 2.0}, {3, 1.25}, {4, 0.8}, {5, 0.4}};

Outcome iteration_ceiling() {
  Failures f;
  const auto suite = gen::random_suite(40, 1010, 12, 30, 200);
  std::map<std::size_t, double> det_max, direct_max;
  auto check = [&](const std::map<std::size_t, double>& pinned, std::map<std::size_t, double>& seen, std::size_t d,
                   double scaled, const std::string& tag) {
    seen[d] = std::max(seen[d], scaled);
    const auto it = pinned.find(d);
    if (it == pinned.end() || scaled > it->second) f.add(tag + " d=" + std::to_string(d) + " scaled " + fmt(scaled));
  };
  for (const auto& inst : suite) {
    const std::size_t d0 = inst.vc_bound;
    for (double eps : {0.2, 0.3, 0.5}) {
      const std::string tag = inst.name + " eps=" + format_real(eps);
      for (std::size_t d = d0; d <= 2 * d0 + 1; ++d) {
        try {
          const auto s = det_eps_net(inst.hyper, eps, d);
          check(kDetCeiling, det_max, d, static_cast<double>(s.iterations) * std::pow(eps, double(d)), tag + " det");
          break;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NoProgress) break;
        }
      }
      const std::size_t t = 2;
      for (std::size_t d = std::max(t, d0); d <= 2 * d0 + 1; ++d) {
        try {
          const auto s = direct_eps_t_net(inst.hyper, eps, t, d);
          check(kDirectCeiling, direct_max, d, static_cast<double>(s.iterations) * std::pow(eps, double(d + 1 - t)),
                tag + " direct");
          break;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NoProgress) break;
        }
      }
    }
  }
  auto show = [](const std::map<std::size_t, double>& m) {
    std::string out;
    for (const auto& [d, v] : m) out += " d" + std::to_string(d) + "=" + fmt(v, 3);
    return out;
  };
  return f.outcome("measured det" + show(det_max) + "; direct" + show(direct_max));
}

// 11
Outcome rainbow() {
  Failures f;
  std::size_t colored = 0, multi = 0;
  std::vector<gen::Instance> instances = gen::random_suite(200, 2024);
  std::vector<Index> all(10);
  std::iota(all.begin(), all.end(), Index{0});
  instances.push_back({"single heavy edge", Hypergraph::from_lists(10, {all}), 1});
  for (const auto& inst : instances) {
    for (double eps : {0.4, 0.5, 1.0}) {
      PairColoring c;
      try {
        c = rainbow_pair_coloring(inst.hyper, eps);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TooSmall) f.add(inst.name + " " + e.what());
        continue;
      }
      ++colored;
      if (!verify_rainbow(inst.hyper, eps, c)) f.add(inst.name + " eps=" + format_real(eps));
      if (c.rounds >= 2) {
        ++multi;
        if (c.num_colors < 2) f.add(inst.name + " two rounds but one colour");
      }
    }
  }
  // The full edge on 10 vertices: 45 pairs, stop below 25 uncoloured.
  const auto single = rainbow_pair_coloring(instances.back().hyper, 1.0);
  if (single.num_colors < 2) f.add("single heavy edge has one colour");
  return f.outcome(std::to_string(colored) + " colourings verified, " + std::to_string(multi) +
                   " with >= 2 rounds; single edge: " + std::to_string(single.num_colors) + " colours");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "soundness suite", 300, soundness},
      {2, "gamma_2 anchor and entropy bounds", 1, gamma_anchor},
      {3, "VC bracket for H^t", 120, tuple_vc_bracket},
      {4, "t-VC anchors", 300, t_vc_anchors},
      {5, "vc1 size bound", 60, vc1_bound},
      {6, "staircase anchor", 30, staircase_anchor},
      {7, "frames size bound", 30, frames_bound},
      {8, "Turan identity", 600, turan_identity},
      {9, "crossing growth", 120, crossing_growth},
      {10, "iteration ceilings", 180, iteration_ceiling},
      {11, "rainbow colouring", 120, rainbow},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s [%d] %s (%.2fs, limit %.0fs%s): %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_s,
                in_time ? "" : ", OVERRUN", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
