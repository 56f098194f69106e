#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "affrsk/affrsk.hpp"

using namespace affrsk;

namespace {

AffineMatrix load(const std::string& name) {
  std::ifstream in(std::string(AFFRSK_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

}  // namespace

TEST(Kappa0, RunningExample) {
  auto t = kappa0(load("running.json"));
  EXPECT_EQ(t.P0, (Tableau{{{2, 3, 4}, {1, 2, 4}, {2, 3}, {1, 3}, {2, 3}}}));
  EXPECT_EQ(t.Q0, (Tableau{{{1, 2, 4}, {1, 2, 3}, {2, 5}, {3, 4}, {3, 4}}}));
  EXPECT_EQ(t.rho, (std::vector<Int>{2, 2, -1, -1, 0}));
  EXPECT_TRUE(is_dominant(t, 4, 5));
}

TEST(Kappa, RunningExample) {
  auto A = load("running.json");
  auto p = kappa(A);
  EXPECT_EQ(p.Q, (Tableau{{{4, 6, 7}, {6, 7, 8}, {0, 2}, {3, 4}, {4, 8}}}));
  EXPECT_EQ(energy_H(A), 3);
  EXPECT_EQ(corrected_weight(A), tableau_weight(p.Q, 5));
}

TEST(Kappa, FirstStepPeelsTheSouthwestChannel) {
  auto A = load("running.json");
  auto F = flat_step(A);
  EXPECT_EQ(F.stream.flow(), 3);
  EXPECT_EQ(F.flat.total(), A.total() - 3);
  auto rec = kappa0_record(A);
  EXPECT_EQ(rec.flows, (std::vector<Int>{3, 3, 2, 2, 2}));
}

TEST(KappaPrime, DualExample) {
  auto A = load("dual.json");
  auto t = kappa0(A);
  EXPECT_EQ(t.P0, (Tableau{{{1, 2, 3}, {1, 1, 3}, {2}, {3}}}));
  EXPECT_EQ(t.Q0, (Tableau{{{1, 2, 4}, {1, 2, 3}, {2}, {3}}}));
  EXPECT_EQ(t.rho, (std::vector<Int>{2, 1, 0, 0}));
  auto p = kappa_prime(A);
  EXPECT_EQ(p.Q, (Tableau{{{4, 5, 6}, {5, 6, 7}, {2}, {3}}}));
  EXPECT_TRUE(is_dominant(t, 3, 4, Kind::dual));
}

TEST(Kappa, ZeroMatrix) {
  auto A = load("empty.json");
  auto t = kappa0(A);
  EXPECT_TRUE(t.P0.cols.empty());
  EXPECT_TRUE(t.Q0.cols.empty());
  EXPECT_TRUE(t.rho.empty());
  EXPECT_THROW(flat_step(A), Error);
}

TEST(Kappa, FlowsWeaklyDecrease) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    auto A = random_matrix(rng, 2 + t % 3, 2 + t % 4, t % 2 ? Kind::dual : Kind::general);
    auto rec = kappa0_record(A);
    EXPECT_TRUE(std::is_sorted(rec.flows.rbegin(), rec.flows.rend())) << brief(A);
    Int sum = 0;
    for (Int f : rec.flows) sum += f;
    EXPECT_EQ(sum, A.total()) << brief(A);
  }
}

TEST(Kappa, InverseOracleRecoversSmallMatrices) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 40; ++t) {
    Kind k = t % 2 ? Kind::dual : Kind::general;
    auto A = random_matrix(rng, 2, 2, k, 3);
    auto p = kappa_any(A);
    OracleBounds b{-1, 4, k == Kind::dual ? 1 : A.total()};
    EXPECT_EQ(inverse_oracle(p, 2, 2, k, b), A) << brief(A);
    EXPECT_EQ(inverse_oracle(kappa0(A), 2, 2, k, b), A) << brief(A);
  }
}

TEST(Kappa, WeightIdentity) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 200; ++t) {
    auto A = random_matrix(rng, 2 + t % 3, 2 + t % 4, Kind::general);
    EXPECT_EQ(corrected_weight(A), tableau_weight(kappa(A).Q, A.n())) << brief(A);
  }
}

TEST(Kappa, StandardizationCompatible) {
  EXPECT_TRUE(standardization_compat(load("running.json")));
  EXPECT_TRUE(standardization_compat(load("standardization.json")));
}

TEST(Dominance, VectorsOfRunningExample) {
  auto t = kappa0(load("running.json"));
  auto v = dominance_vectors(t, 4, 5, Kind::general);
  ASSERT_EQ(v.size(), 3u);
  for (const auto& nu : v) EXPECT_TRUE(std::is_sorted(nu.rbegin(), nu.rend()));
  auto bad = t;
  bad.rho[0] += 5;
  EXPECT_FALSE(is_dominant(bad, 4, 5));
}
