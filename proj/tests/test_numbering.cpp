#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "affrsk/affrsk.hpp"
#include "oracles.hpp"

using namespace affrsk;

namespace {

AffineMatrix running() {
  std::ifstream in(std::string(AFFRSK_DATA_DIR) + "/running.json");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

std::vector<AffineMatrix> samples(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<Int, Int>> periods{{2, 2}, {2, 3}, {3, 2}, {3, 4}};
  std::vector<AffineMatrix> out;
  for (int t = 0; t < count; ++t) {
    auto [m, n] = periods[t % periods.size()];
    out.push_back(random_matrix(rng, m, n, t % 2 ? Kind::dual : Kind::general));
  }
  return out;
}

}  // namespace

TEST(Streams, DefiningDataRoundTrip) {
  Stream s{4, 5, Kind::general, {{2, 3}, {3, 6}, {4, 7}}};
  ASSERT_TRUE(is_stream(s));
  auto D = defining_data(s);
  EXPECT_EQ(D.a, (std::vector<Int>{2, 3, 4}));
  EXPECT_EQ(D.b, (std::vector<Int>{1, 2, 3}));
  EXPECT_EQ(stream_from_data(4, 5, Kind::general, D.a, D.b, D.r), s);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    Int l = 1 + t % 3;
    auto a = random_subset(rng, 4, l);
    auto b = random_subset(rng, 5, l);
    Int r = static_cast<Int>(rng() % 9) - 4;
    auto S = stream_from_data(4, 5, Kind::general, a, b, r);
    EXPECT_TRUE(is_stream(S));
    auto E = defining_data(S);
    EXPECT_EQ(E.a, a);
    EXPECT_EQ(E.b, b);
    EXPECT_EQ(E.r, r);
  }
}

TEST(Streams, ShapeConditions) {
  EXPECT_FALSE(is_stream(Stream{2, 2, Kind::general, {{1, 1}, {2, 3}}}));  // spread reaches n
  EXPECT_TRUE(is_stream(Stream{2, 2, Kind::general, {{1, 1}, {2, 2}}}));
  EXPECT_FALSE(is_stream(Stream{2, 3, Kind::general, {{1, 1}, {1, 2}}}));  // rows must increase
  EXPECT_TRUE(is_stream(Stream{2, 3, Kind::dual, {{1, 1}, {1, 2}}}));
  EXPECT_FALSE(is_stream(Stream{2, 3, Kind::dual, {{1, 1}, {2, 1}}}));  // columns must increase
}

TEST(Channels, RunningExample) {
  auto A = running();
  EXPECT_EQ(width(A), 3);
  auto C = southwest_channel(A);
  EXPECT_EQ(C.cells, (std::vector<Cell>{{2, 3}, {3, 6}, {4, 7}}));
  auto d = channel_numbering(A, C);
  EXPECT_EQ(d.period, 3);
  EXPECT_EQ(d.at(A, {2, 8}), 1);
  EXPECT_EQ(d.at(A, {3, 6}), 1);
  EXPECT_EQ(d.at(A, {7, 4}), 1);
  EXPECT_TRUE(validate_proper(A, d));
}

TEST(Channels, MatchExhaustiveSearch) {
  for (const auto& A : samples(21, 120)) {
    SCOPED_TRACE(brief(A));
    auto expect = oracle::all_channels(A);
    EXPECT_EQ(width(A), oracle::width(A));
    std::set<std::vector<Cell>> got;
    for (const auto& s : channels(A)) got.insert(s.cells);
    EXPECT_EQ(got, expect);
    auto sw = southwest_channel(A);
    auto ne = northeast_channel(A);
    EXPECT_TRUE(expect.count(sw.cells));
    EXPECT_TRUE(expect.count(ne.cells));
    for (const auto& s : channels(A)) {
      EXPECT_TRUE(sw_geq(sw, s));
      EXPECT_TRUE(sw_geq(s, ne));
    }
  }
}

TEST(Numbering, MatchesChainFormula) {
  auto all = samples(22, 120);
  all.push_back(running());
  for (const auto& A : all) {
    SCOPED_TRACE(brief(A));
    for (const auto& C : channels(A)) {
      auto d = channel_numbering(A, C);
      EXPECT_EQ(d.values, oracle::channel_numbering(A, C.cells));
      EXPECT_TRUE(oracle::is_proper(A, d.values, d.period));
      EXPECT_TRUE(validate_proper(A, d));
    }
  }
}

TEST(Numbering, RejectsNonChannel) {
  auto A = running();
  Stream s{4, 5, Kind::general, {{2, 3}}};
  try {
    channel_numbering(A, s);
    FAIL() << "expected NotAChannel";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAChannel);
  }
}

TEST(ZigZags, RunningExampleLevels) {
  auto A = running();
  auto F = zigzags(A, channel_numbering(A, southwest_channel(A)));
  ASSERT_EQ(F.levels.size(), 3u);
  EXPECT_EQ(F.levels[0].inner, (std::vector<Cell>{{2, -4}, {-4, -3}, {-5, -1}}));
  EXPECT_EQ(F.levels[0].outer, (std::vector<Cell>{{2, -3}, {-4, -1}}));
  EXPECT_EQ(F.levels[0].back_post, (Cell{-5, -4}));
}

// Each support cell lies on the path of its level, inner corners are support cells,
// and the back-post corners form a stream of the same flow.
TEST(ZigZags, PathsCarryTheLevels) {
  auto all = samples(23, 120);
  all.push_back(running());
  for (const auto& A : all) {
    SCOPED_TRACE(brief(A));
    auto d = channel_numbering(A, southwest_channel(A));
    auto F = zigzags(A, d);
    ASSERT_EQ(static_cast<Int>(F.levels.size()), d.period);
    for (const auto& z : F.levels) {
      EXPECT_EQ(z.outer.size() + 1, z.inner.size());
      for (const Cell& c : z.inner) EXPECT_GT(A.entry(c), 0);
      for (const Cell& c : level_cells(A, d, z.level)) EXPECT_TRUE(on_path(A, z, 0, c));
    }
    for (const auto& [c, v] : d.values) {
      const auto& z = F.levels[static_cast<std::size_t>(mod1(v - F.levels[0].level + 1, d.period) - 1)];
      Int s = floordiv(v - z.level, d.period);
      EXPECT_TRUE(on_path(A, z, s, c));
    }
    auto step = flat_step(A);
    EXPECT_TRUE(is_stream(step.stream));
    EXPECT_EQ(step.stream.flow(), d.period);
  }
}
