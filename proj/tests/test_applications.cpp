#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tnet/applications.hpp"
#include "tnet/generators.hpp"

using namespace tnet;

TEST(Turan, SmallValues) {
  EXPECT_EQ(turan_exact(4, 3, 2), 4U);
  EXPECT_EQ(turan_exact(6, 3, 2), 9U);
  // n = k: omit a single t-subset.
  EXPECT_EQ(turan_exact(5, 5, 2), binomial(5, 2) - 1);
  EXPECT_EQ(min_net_complete(4, 3, 2), 2U);
  EXPECT_EQ(min_net_complete(6, 3, 2), 6U);
  EXPECT_EQ(min_net_complete(5, 5, 2), 1U);
}

TEST(Turan, MatchesBruteForce) {
  for (int n = 3; n <= 6; ++n)
    for (int k = 3; k <= std::min(n, 4); ++k)
      for (int t = 2; t < k; ++t)
        if (binomial(n, t) <= 20) EXPECT_EQ(turan_exact(n, k, t), oracle::turan(n, k, t)) << n << k << t;
}

TEST(Turan, Mantel) {
  for (std::size_t n = 3; n <= 8; ++n) EXPECT_EQ(turan_exact(n, 3, 2), n * n / 4) << n;
}

TEST(Turan, Identity) {
  for (auto [n, k, t] : {std::tuple{4, 3, 2}, {6, 3, 2}, {6, 4, 3}, {7, 4, 3}}) {
    const auto r = check_turan_identity(n, k, t);
    EXPECT_TRUE(r.identity_holds) << n << k << t;
    EXPECT_EQ(r.min_net_size, binomial(n, t) - r.turan_number);
  }
}

TEST(Turan, Guards) {
  EXPECT_THROW(turan_exact(9, 4, 3), Error);  // C(9,3) = 84 > 40
  EXPECT_THROW(turan_exact(4, 2, 2), Error);
  EXPECT_THROW(turan_exact(3, 4, 2), Error);
  EXPECT_THROW(turan_exact(5, 3, 1), Error);
}

TEST(PairIndex, Bijection) {
  for (std::size_t n = 2; n <= 12; ++n) {
    std::vector<bool> hit(n * (n - 1) / 2, false);
    std::size_t expect = 0;
    for (Index u = 0; u < n; ++u)
      for (Index v = u + 1; v < n; ++v) {
        const auto p = pair_index(n, u, v);
        EXPECT_EQ(p, expect++);
        EXPECT_EQ(pair_index(n, v, u), p);
        hit[p] = true;
      }
    EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  }
}

namespace {

// Per-edge colour census, independent of verify_rainbow.
bool census_ok(const Hypergraph& h, double eps, const PairColoring& c) {
  for (const auto& e : h.edges()) {
    if (static_cast<double>(e.card()) < eps * static_cast<double>(h.n()) - 1e-9) continue;
    std::set<std::uint32_t> seen;
    const auto v = e.indices();
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = a + 1; b < v.size(); ++b) seen.insert(c.color(v[a], v[b]));
    for (std::uint32_t col = 0; col < c.num_colors; ++col)
      if (!seen.contains(col)) return false;
  }
  return true;
}

}  // namespace

TEST(Rainbow, SingleFullEdge) {
  std::vector<Index> all(10);
  std::iota(all.begin(), all.end(), Index{0});
  const auto h = Hypergraph::from_lists(10, {all});
  const auto c = rainbow_pair_coloring(h, 1.0);
  EXPECT_TRUE(verify_rainbow(h, 1.0, c));
  EXPECT_TRUE(census_ok(h, 1.0, c));
  // 45 pairs, each round colours one, stop once fewer than 25 remain.
  EXPECT_EQ(c.rounds, 21U);
  EXPECT_GE(c.num_colors, 2U);
  EXPECT_LE(c.num_colors, binomial(10, 2));
}

TEST(Rainbow, DisjointEdges) {
  const auto h = Hypergraph::from_lists(12, {{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}});
  const auto c = rainbow_pair_coloring(h, 0.5);
  EXPECT_TRUE(verify_rainbow(h, 0.5, c));
  EXPECT_TRUE(census_ok(h, 0.5, c));
  EXPECT_GE(c.num_colors, 2U);
}

TEST(Rainbow, RandomSuite) {
  for (const auto& inst : gen::random_suite(20, 5, 10, 24, 120)) {
    for (double eps : {0.4, 0.5}) {
      PairColoring c;
      try {
        c = rainbow_pair_coloring(inst.hyper, eps);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooSmall) << inst.name;
        continue;
      }
      EXPECT_TRUE(verify_rainbow(inst.hyper, eps, c)) << inst.name;
      EXPECT_TRUE(census_ok(inst.hyper, eps, c)) << inst.name;
      std::size_t min_heavy = inst.hyper.n();
      for (auto i : heavy_edges(inst.hyper, eps)) min_heavy = std::min(min_heavy, inst.hyper.edge(i).card());
      EXPECT_LE(c.num_colors, binomial(min_heavy, 2));
    }
  }
}

TEST(Rainbow, VerifyRejectsMissingColour) {
  const auto h = Hypergraph::from_lists(4, {{0, 1, 2}});
  PairColoring c;
  c.n = 4;
  c.colors.assign(6, 0);
  c.num_colors = 2;
  c.colors[pair_index(4, 2, 3)] = 1;  // colour 1 only outside the edge
  EXPECT_FALSE(verify_rainbow(h, 0.5, c));
  c.colors[pair_index(4, 0, 1)] = 1;
  EXPECT_TRUE(verify_rainbow(h, 0.5, c));
}

TEST(Rainbow, Errors) {
  EXPECT_THROW(rainbow_pair_coloring(Hypergraph::from_lists(10, {{0, 1}}), 0.2), Error);
  EXPECT_THROW(rainbow_pair_coloring(Hypergraph::from_lists(10, {{0, 1, 2}}), 0.5), Error);
}
