#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "affrsk/affrsk.hpp"
#include "oracles.hpp"

using namespace affrsk;

namespace {

AffineMatrix load(const std::string& name) {
  std::ifstream in(std::string(AFFRSK_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

}  // namespace

TEST(Signature, ReductionCancelsPlusMinus) {
  Signature s{{true, 0}, {false, 1}, {false, 2}, {true, 3}, {false, 4}, {true, 5}, {true, 6}, {false, 7}};
  auto r = reduce(s);
  EXPECT_EQ(r.minus, (std::vector<std::size_t>{2}));
  EXPECT_EQ(r.plus, (std::vector<std::size_t>{5}));
}

TEST(MatrixCrystal, RunningExampleF2) {
  auto A = load("running.json");
  CrystalIndex idx{Side::row, 2};
  std::vector<bool> signs;
  for (const auto& s : matrix_signature(A, idx)) signs.push_back(s.plus);
  EXPECT_EQ(signs, (std::vector<bool>{true, false, false, true, false, true, true, false}));
  auto [eps, phi] = eps_phi(A, idx);
  EXPECT_EQ(eps, 1);
  EXPECT_EQ(phi, 1);
  auto B = matrix_f(A, idx);
  ASSERT_TRUE(B);
  EXPECT_EQ(*B, A.add({2, 8}, -1).add({3, 8}, 1));
  EXPECT_EQ(matrix_e(*B, idx), A);
}

TEST(MatrixCrystal, ZeroMatrixIsIsolated) {
  AffineMatrix O(3, 4);
  for (Int i = 0; i < 3; ++i) {
    EXPECT_FALSE(matrix_f(O, {Side::row, i}));
    EXPECT_FALSE(matrix_e(O, {Side::row, i}));
    EXPECT_EQ(eps_phi(O, {Side::row, i}), (std::pair<Int, Int>{0, 0}));
  }
  for (Int j = 0; j < 4; ++j) EXPECT_FALSE(matrix_f(O, {Side::col, j}));
}

TEST(MatrixCrystal, IndexChecks) {
  AffineMatrix A(1, 3);
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalError;
  };
  EXPECT_EQ(code([&] { matrix_f(A, {Side::row, 0}); }), ErrorCode::UnsupportedIndex);
  EXPECT_EQ(code([&] { matrix_f(A, {Side::col, 3}); }), ErrorCode::UnsupportedIndex);
  EXPECT_EQ(code([&] { matrix_f(A, {Side::col, -1}); }), ErrorCode::UnsupportedIndex);
}

TEST(MatrixCrystal, RowSideMatchesBracketRule) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    Int m = 2 + t % 3, n = 2 + t % 4;
    auto A = random_matrix(rng, m, n, Kind::general);
    for (Int i = 1; i < m; ++i)
      for (bool raise : {false, true}) {
        auto got = raise ? matrix_e(A, {Side::row, i}) : matrix_f(A, {Side::row, i});
        EXPECT_EQ(got, oracle::matrix_row_op(A, i, raise)) << brief(A) << " i=" << i;
      }
  }
}

TEST(MatrixCrystal, ColumnSideIsTransposedRowSide) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    auto A = random_matrix(rng, 3, 4, Kind::general);
    for (Int j = 0; j < 4; ++j) {
      auto a = matrix_f(A, {Side::col, j});
      auto b = matrix_f(A.transpose(), {Side::row, j});
      ASSERT_EQ(a.has_value(), b.has_value());
      if (a) {
        EXPECT_EQ(a->transpose(), *b);
      }
    }
  }
}

TEST(MatrixCrystal, DualStaysBinary) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 200; ++t) {
    auto A = random_matrix(rng, 3, 3, Kind::dual);
    for (Side s : {Side::row, Side::col})
      for (Int i = 0; i < 3; ++i) {
        auto B = matrix_f(A, {s, i});
        if (!B) continue;
        EXPECT_EQ(B->kind(), Kind::dual);
        for (const auto& [c, v] : B->window()) EXPECT_EQ(v, 1);
      }
  }
}

// Column-side signature of A agrees with A^flat tensored with the back-post stream's column.
TEST(MatrixCrystal, FlatStepPreservesColumnSignature) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 300; ++t) {
    Int m = 2 + t % 2, n = 2 + t % 3;
    auto A = random_matrix(rng, m, n, t % 2 ? Kind::dual : Kind::general);
    auto F = flat_step(A);
    Column c;
    for (const Cell& x : F.stream.cells) c.push_back(x.j);
    std::sort(c.begin(), c.end());
    for (Int j = 0; j < n; ++j) {
      auto whole = eps_phi(A, {Side::col, j});
      auto rest = F.flat.empty() ? std::pair<Int, Int>{0, 0} : eps_phi(F.flat, {Side::col, j});
      auto s = column_eps_phi(c, n, j);
      EXPECT_EQ(whole, tensor_eps_phi({rest, s})) << brief(A) << " j=" << j;
    }
  }
}

TEST(Boxes, RuleAndWeight) {
  EXPECT_EQ(column_f({7}, 5, 2), (Column{8}));
  EXPECT_EQ(column_f({5}, 5, 0), (Column{6}));
  EXPECT_FALSE(column_f({7}, 5, 3));
  EXPECT_EQ(column_e({6}, 5, 0), (Column{5}));
  Weight w(5);
  w.c[0] = 1;
  w.delta = -1;
  EXPECT_EQ(box_weight(6, 5), w);
  EXPECT_EQ(box_weight(-4, 5).delta, 1);
}

TEST(Columns, TauEquivariance) {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 300; ++t) {
    Int n = 3 + t % 3;
    auto c = tau(random_subset(rng, n, 1 + t % (n - 1)), n, static_cast<Int>(rng() % 7) - 3);
    for (Int i = 0; i < n; ++i) {
      auto a = column_f(tau(c, n, 1), n, i);
      auto b = column_f(c, n, i);
      ASSERT_EQ(a.has_value(), b.has_value());
      if (a) {
        EXPECT_EQ(*a, tau(*b, n, 1));
      }
    }
  }
}

TEST(Tableaux, CsstMatchesColumnWord) {
  std::mt19937_64 rng(46);
  for (int t = 0; t < 400; ++t) {
    Int m = 2 + t % 4;
    auto T = random_csst(rng, m, 4, m);
    for (Int i = 1; i < m; ++i) {
      EXPECT_EQ(csst_f(T, m, i), oracle::word_op(T, i, false, false));
      EXPECT_EQ(csst_e(T, m, i), oracle::word_op(T, i, true, false));
      EXPECT_EQ(csst_eps_phi(T, m, i), oracle::word_eps_phi(T, i, false));
    }
  }
}

TEST(Tableaux, BlambdaMatchesColumnWordAwayFromZero) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 400; ++t) {
    Int n = 3 + t % 3;
    auto T = random_csst(rng, n, 4, n - 1);
    for (Int i = 1; i < n; ++i) {
      EXPECT_EQ(blambda_f(T, n, i), oracle::word_op(T, i, false, false));
      EXPECT_EQ(blambda_eps_phi(T, n, i), oracle::word_eps_phi(T, i, false));
    }
  }
}

TEST(Tableaux, RsstMatchesRowWord) {
  std::mt19937_64 rng(48);
  for (int t = 0; t < 400; ++t) {
    Int m = 2 + t % 4;
    auto R = random_rsst(rng, m, 4, 4);
    for (Int i = 1; i < m; ++i) {
      EXPECT_EQ(rsst_f(R, m, i), oracle::word_op(R, i, false, true));
      EXPECT_EQ(rsst_e(R, m, i), oracle::word_op(R, i, true, true));
      EXPECT_EQ(rsst_eps_phi(R, m, i), oracle::word_eps_phi(R, i, true));
    }
  }
}

// B(R)_0 is closed under every operator, checked on all rectangles with entries in a small range.
TEST(Tableaux, BR0Closure) {
  for (Int n : {3, 4}) {
    for (Int h = 1; h < n; ++h) {
      std::vector<Column> cols;
      for (Int lo = -n; lo <= n; ++lo)
        for (Int mask = 0; mask < (1 << (n - 1)); ++mask) {
          Column c{lo};
          for (Int k = 1; k < n; ++k)
            if (mask >> (k - 1) & 1) c.push_back(lo + k);
          if (static_cast<Int>(c.size()) == h) cols.push_back(c);
        }
      for (const auto& x : cols)
        for (const auto& y : cols) {
          std::vector<Column> R{x, y};
          if (!in_BR0(R, n)) continue;
          for (Int i = 0; i < n; ++i)
            for (bool raise : {false, true}) {
              auto r = raise ? blambda_e(Tableau{R}, n, i) : blambda_f(Tableau{R}, n, i);
              if (r) {
                EXPECT_TRUE(in_BR0(r->cols, n));
              }
            }
        }
    }
  }
}

TEST(Pairs, RowZeroIsUnsupported) {
  auto A = load("running.json");
  auto K = kappa(A);
  try {
    pair_f(K, 4, 5, Kind::general, {Side::row, 0});
    FAIL() << "expected UnsupportedIndex";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedIndex);
  }
}

TEST(Pairs, RunningExampleCommutes) {
  auto A = load("running.json");
  auto K = kappa(A);
  for (Int j = 0; j < 5; ++j) {
    auto B = matrix_f(A, {Side::col, j});
    auto P = pair_f(K, 4, 5, Kind::general, {Side::col, j});
    ASSERT_EQ(B.has_value(), P.has_value()) << j;
    if (B) {
      EXPECT_EQ(kappa(*B), *P) << j;
    }
  }
  for (Int i = 1; i < 4; ++i) {
    auto B = matrix_f(A, {Side::row, i});
    auto P = pair_f(K, 4, 5, Kind::general, {Side::row, i});
    ASSERT_EQ(B.has_value(), P.has_value()) << i;
    if (B) {
      EXPECT_EQ(kappa(*B), *P) << i;
    }
  }
}

TEST(Suites, SmallRunsPass) {
  EXPECT_TRUE(suite_crystal_axioms(40, 1).ok());
  EXPECT_TRUE(suite_bicrystal(40, 2, Kind::general).ok());
  EXPECT_TRUE(suite_bicrystal(40, 3, Kind::dual).ok());
  EXPECT_TRUE(suite_kappa_commutation(40, 4, Kind::general).ok());
  EXPECT_TRUE(suite_kappa_commutation(40, 5, Kind::dual).ok());
}

// The checkers must notice broken inputs: an operator that does nothing, and a matrix with one entry moved.
TEST(Suites, CheckersFlagMutations) {
  Report R{"mutation"};
  Column c{2};
  check_axioms(
      R, c, 2, [](const Column& x) { return std::optional<Column>(x); },
      [](const Column& x) { return std::optional<Column>(x); },
      [&](const Column& x) { return column_eps_phi(x, 5, 2); }, [](const Column& x) { return column_weight(x, 5); },
      simple_root(5, 2), "identity operator");
  EXPECT_FALSE(R.ok());

  auto A = load("running.json");
  auto K = kappa(A);
  for (const auto& [cell, v] : A.window()) {
    auto B = A.add(cell, -1).add({cell.i, cell.j + 1}, 1);
    EXPECT_NE(kappa(B), K) << cell.i << "," << cell.j;
  }
  for (Int j = 0; j < 5; ++j) {
    auto B = matrix_f(A, {Side::col, j});
    auto P = pair_f(K, 4, 5, Kind::general, {Side::col, j});
    if (!B) continue;
    for (const auto& [cell, v] : B->window()) {
      auto M = B->add(cell, 1);
      EXPECT_NE(kappa(M), *P);
    }
  }
}
