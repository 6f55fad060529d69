#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tnet/geometry.hpp"
#include "tnet/io.hpp"

using namespace tnet;

namespace {

ErrorCode parse_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed without error";
  return ErrorCode::BadInput;
}

}  // namespace

TEST(HgFormat, ParseWithCommentsAndCycle) {
  const auto f = io::parse_hg("# header\nn 4\n\ne 0 2   # trailing\ne\ne 1 2 3\ncycle 3 1 0 2\n");
  EXPECT_EQ(f.hyper.n(), 4U);
  ASSERT_EQ(f.hyper.num_edges(), 3U);
  EXPECT_EQ(f.hyper.edge(0).indices(), (std::vector<Index>{0, 2}));
  EXPECT_TRUE(f.hyper.edge(1).empty());
  ASSERT_TRUE(f.cycle);
  EXPECT_EQ(*f.cycle, (std::vector<Index>{3, 1, 0, 2}));
}

TEST(HgFormat, RoundTrip) {
  std::mt19937_64 rng(51);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 1 + rng() % 20;
    const auto h = oracle::from_masks(n, oracle::random_edges(n, rng() % 30, 0.3, rng));
    std::vector<Index> cycle(n);
    std::iota(cycle.begin(), cycle.end(), Index{0});
    std::shuffle(cycle.begin(), cycle.end(), rng);
    const auto text = io::serialize_hg(h, rep % 2 ? &cycle : nullptr);
    const auto back = io::parse_hg(text);
    EXPECT_EQ(back.hyper, h);
    EXPECT_EQ(back.cycle.has_value(), rep % 2 == 1);
    if (back.cycle) EXPECT_EQ(*back.cycle, cycle);
    EXPECT_EQ(io::serialize_hg(back.hyper, back.cycle ? &*back.cycle : nullptr), text);
  }
}

TEST(HgFormat, Errors) {
  for (const char* bad : {"", "e 0 1\n", "n x\n", "n 3\ne 0 3\n", "n 3\ne 1 0\n", "n 3\ne 1 1\n", "n 3\nf 1\n",
                          "n 3\ncycle 0 1\n", "n 3\ncycle 0 1 1\n", "n 3\ncycle 0 1 2\ne 0\n", "n -1\n"})
    EXPECT_EQ(parse_code([&] { io::parse_hg(bad); }), ErrorCode::ParseError) << bad;
  EXPECT_EQ(parse_code([] { io::parse_hg("n 5000\n"); }), ErrorCode::TooLarge);
}

TEST(NetFormat, RoundTrip) {
  TSubsetFamily s(2);
  s.add(VertexSubset::from_indices(6, {0, 5}));
  s.add(VertexSubset::from_indices(6, {2, 3}));
  const auto text = io::serialize_net(s, 0.25);
  EXPECT_EQ(text, "t 2 eps 0.25\ns 0 5\ns 2 3\n");
  const auto back = io::parse_net(text, 6);
  EXPECT_EQ(back.eps, 0.25);
  EXPECT_EQ(back.family.t, 2U);
  EXPECT_EQ(back.family.members(), s.members());
}

TEST(NetFormat, Errors) {
  for (const char* bad : {"", "s 0 1\n", "t 2 eps\n", "t 0 eps 0.5\n", "t 2 eps abc\n", "t 2 eps 0.5\ns 0\n",
                          "t 2 eps 0.5\ns 0 9\n", "t 2 eps 0.5\nx 0 1\n"})
    EXPECT_EQ(parse_code([&] { io::parse_net(bad, 6); }), ErrorCode::ParseError) << bad;
}

TEST(PtsFormat, RationalsAndRoundTrip) {
  EXPECT_EQ(geo::parse_rational("3/6"), geo::Rational(1, 2));
  EXPECT_EQ(geo::parse_rational("-0.125"), geo::Rational(-1, 8));
  EXPECT_EQ(geo::parse_rational("7"), geo::Rational(7));
  EXPECT_EQ(geo::parse_rational(".5"), geo::Rational(1, 2));
  for (const char* bad : {"", "1/0", "a", "1.2.3", "1/x", "--1"})
    EXPECT_EQ(parse_code([&] { geo::parse_rational(bad); }), ErrorCode::ParseError) << bad;

  for (const auto& ps : {geo::staircase(8), geo::grid(3), geo::random_uniform(20, 4)}) {
    const auto text = geo::serialize_pts(ps);
    EXPECT_EQ(geo::parse_pts(text), ps);
  }
  EXPECT_EQ(parse_code([] { geo::parse_pts("p 0 0\np 0/1 0\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(parse_code([] { geo::parse_pts("q 0 0\n"); }), ErrorCode::ParseError);
}
