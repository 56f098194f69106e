#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "affrsk/crystal.hpp"
#include "affrsk/numbering.hpp"
#include "affrsk/rsk.hpp"
#include "affrsk/tableau.hpp"

namespace affrsk {

struct Report {
  std::string name;
  long instances = 0;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> notes{};

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 8) notes.push_back(what);
  }
  bool ok() const { return failures == 0; }
};

inline std::string brief(const AffineMatrix& A) {
  std::ostringstream os;
  os << kind_name(A.kind()) << ' ' << A.m() << 'x' << A.n() << " {";
  for (const auto& [c, v] : A.window()) os << " (" << c.i << ',' << c.j << "):" << v;
  os << " }";
  return os.str();
}

// Every matrix with window columns in [col_lo, col_hi], per-period total <= max_content.
inline std::vector<AffineMatrix> enumerate_family(Int m, Int n, Kind kind, Int col_lo, Int col_hi,
                                                  Int max_content) {
  std::vector<Cell> cells;
  for (Int i = 1; i <= m; ++i)
    for (Int j = col_lo; j <= col_hi; ++j) cells.push_back({i, j});
  const Int cap = kind == Kind::dual ? 1 : max_content;
  std::vector<AffineMatrix> out;
  AffineMatrix cur(m, n, kind);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t k, Int left) {
    if (k == cells.size()) {
      out.push_back(cur);
      return;
    }
    for (Int v = 0; v <= std::min(cap, left); ++v) {
      if (v) cur.add_inplace(cells[k], v);
      rec(k + 1, left - v);
      if (v) cur.add_inplace(cells[k], -v);
    }
  };
  rec(0, max_content);
  return out;
}

// Random window entries in columns [1-n, 2n], values 1..2 (1 for the dual flavor).
inline AffineMatrix random_matrix(std::mt19937_64& rng, Int m, Int n, Kind kind, Int max_cells = 0) {
  std::vector<Cell> cells;
  for (Int i = 1; i <= m; ++i)
    for (Int j = 1 - n; j <= 2 * n; ++j) cells.push_back({i, j});
  std::shuffle(cells.begin(), cells.end(), rng);
  if (max_cells <= 0) max_cells = m + n;
  Int k = std::uniform_int_distribution<Int>(1, std::min<Int>(max_cells, cells.size()))(rng);
  AffineMatrix A(m, n, kind);
  std::uniform_int_distribution<Int> val(1, kind == Kind::dual ? 1 : 2);
  for (Int t = 0; t < k; ++t) A.add_inplace(cells[t], val(rng));
  return A;
}

// Random l-subset of [1, top], sorted.
inline Column random_subset(std::mt19937_64& rng, Int top, Int l) {
  Column all(top);
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng);
  Column c(all.begin(), all.begin() + l);
  std::sort(c.begin(), c.end());
  return c;
}

// Random column tableau over [top] with at most `width` columns of height at most max_h.
inline Tableau random_csst(std::mt19937_64& rng, Int top, Int width, Int max_h) {
  Tableau T;
  Int w = std::uniform_int_distribution<Int>(1, width)(rng);
  Int h = std::min(max_h, top);
  for (Int p = 0; p < w; ++p) {
    h = std::uniform_int_distribution<Int>(1, h)(rng);
    T.cols.push_back(random_subset(rng, top, h));
  }
  return T;
}

// Random row tableau over [top], rows top to bottom with weakly decreasing lengths.
inline Tableau random_rsst(std::mt19937_64& rng, Int top, Int rows, Int max_len) {
  Tableau R;
  Int r = std::uniform_int_distribution<Int>(1, rows)(rng);
  Int len = max_len;
  std::uniform_int_distribution<Int> letter(1, top);
  for (Int p = 0; p < r; ++p) {
    len = std::uniform_int_distribution<Int>(1, len)(rng);
    Column row;
    for (Int k = 0; k < len; ++k) row.push_back(letter(rng));
    std::sort(row.begin(), row.end());
    R.cols.push_back(row);
  }
  return R;
}

template <class T>
bool same(const std::optional<T>& a, const std::optional<T>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || *a == *b;
}

// Crystal axioms for one element and index: phi - eps = <wt, h_i>, weight shifts, e/f inverse,
// eps/phi updates and operator-power counts.
template <class X, class F, class E, class EP, class W>
void check_axioms(Report& R, const X& x, Int i, F f, E e, EP ep, W wt, const Weight& alpha, const std::string& tag) {
  auto [eps, phi] = ep(x);
  R.expect(phi - eps == pairing(wt(x), i), tag + ": phi - eps != <wt,h>");
  auto y = f(x);
  if (y) {
    R.expect(same<X>(e(*y), x), tag + ": e(f x) != x");
    R.expect(wt(*y) == wt(x) - alpha, tag + ": wt(f x) != wt x - alpha");
    auto [e2, p2] = ep(*y);
    R.expect(e2 == eps + 1 && p2 == phi - 1, tag + ": eps/phi after f");
  } else {
    R.expect(phi == 0, tag + ": f is bottom but phi > 0");
  }
  auto z = e(x);
  if (z) {
    R.expect(same<X>(f(*z), x), tag + ": f(e x) != x");
    R.expect(wt(*z) == wt(x) + alpha, tag + ": wt(e x) != wt x + alpha");
  } else {
    R.expect(eps == 0, tag + ": e is bottom but eps > 0");
  }
  Int k = 0;
  X cur = x;
  while (k <= phi + 1) {
    auto nx = f(cur);
    if (!nx) break;
    cur = *nx;
    ++k;
  }
  R.expect(k == phi, tag + ": f power count != phi");
  k = 0;
  cur = x;
  while (k <= eps + 1) {
    auto nx = e(cur);
    if (!nx) break;
    cur = *nx;
    ++k;
  }
  R.expect(k == eps, tag + ": e power count != eps");
}

inline void matrix_axioms(Report& R, const AffineMatrix& A) {
  for (Side s : {Side::row, Side::col}) {
    Int p = side_period(A, s);
    if (p < 2) continue;
    for (Int i = 0; i < p; ++i) {
      CrystalIndex idx{s, i};
      check_axioms(
          R, A, i, [&](const AffineMatrix& x) { return matrix_f(x, idx); },
          [&](const AffineMatrix& x) { return matrix_e(x, idx); },
          [&](const AffineMatrix& x) { return eps_phi(x, idx); },
          [&](const AffineMatrix& x) { return matrix_side_weight(x, s); }, simple_root(p, i),
          brief(A) + (s == Side::row ? " row " : " col ") + std::to_string(i));
    }
  }
}

inline const std::vector<std::string>& crystal_families() {
  static const std::vector<std::string> f{"matrix", "box", "column", "blambda", "csst", "rsst"};
  return f;
}

// count random elements of one family, every index of its period checked.
inline void family_axioms(Report& R, const std::string& family, long count, std::mt19937_64& rng) {
  auto coin = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
  for (long t = 0; t < count; ++t) {
    const Int p = 2 + t % 4;
    ++R.instances;
    if (family == "matrix") {
      const std::vector<std::pair<Int, Int>> periods{{2, 2}, {2, 3}, {3, 4}, {3, 2}};
      auto [m, n] = periods[t % periods.size()];
      matrix_axioms(R, random_matrix(rng, m, n, t % 2 ? Kind::dual : Kind::general));
    } else if (family == "box" || family == "column") {
      Int h = family == "box" ? 1 : coin(1, p - 1);
      Column c = tau(random_subset(rng, p, h), p, coin(-2 * h, 2 * h));
      for (Int i = 0; i < p; ++i)
        check_axioms(
            R, c, i, [&](const Column& x) { return column_f(x, p, i); },
            [&](const Column& x) { return column_e(x, p, i); },
            [&](const Column& x) { return column_eps_phi(x, p, i); },
            [&](const Column& x) { return column_weight(x, p); }, simple_root(p, i),
            family + " n=" + std::to_string(p) + " i=" + std::to_string(i));
    } else if (family == "blambda") {
      Tableau T0 = random_csst(rng, p, 4, p - 1);
      GeneralizedPartitions nu;
      for (const auto& b : blocks(heights(T0))) {
        std::vector<Int> v;
        for (std::size_t k = 0; k < b.width; ++k) v.push_back(coin(-2, 2));
        std::sort(v.rbegin(), v.rend());
        nu.push_back(v);
      }
      Tableau T = csst_to_extremal(T0, nu, p);
      for (Int i = 0; i < p; ++i)
        check_axioms(
            R, T, i, [&](const Tableau& x) { return blambda_f(x, p, i); },
            [&](const Tableau& x) { return blambda_e(x, p, i); },
            [&](const Tableau& x) { return blambda_eps_phi(x, p, i); },
            [&](const Tableau& x) { return tableau_weight(x, p); }, simple_root(p, i),
            "blambda n=" + std::to_string(p) + " i=" + std::to_string(i));
    } else if (family == "csst" || family == "rsst") {
      const bool rows = family == "rsst";
      Tableau T = rows ? random_rsst(rng, p, 3, 4) : random_csst(rng, p, 4, p);
      for (Int i = 0; i < p; ++i)
        check_axioms(
            R, T, i, [&](const Tableau& x) { return rows ? rsst_f(x, p, i) : csst_f(x, p, i); },
            [&](const Tableau& x) { return rows ? rsst_e(x, p, i) : csst_e(x, p, i); },
            [&](const Tableau& x) { return rows ? rsst_eps_phi(x, p, i) : csst_eps_phi(x, p, i); },
            [&](const Tableau& x) { return content_weight(x, p); }, simple_root(p, i),
            family + " m=" + std::to_string(p) + " i=" + std::to_string(i));
    } else {
      throw Error(ErrorCode::InvalidValue, "unknown crystal family " + family);
    }
  }
}

inline Report suite_family_axioms(const std::string& family, long count, std::uint64_t seed) {
  Report R{"crystal-axioms/" + family};
  std::mt19937_64 rng(seed);
  family_axioms(R, family, count, rng);
  return R;
}

// Every family, count elements each; instances counts elements over all families.
inline Report suite_crystal_axioms(long count, std::uint64_t seed) {
  Report R{"crystal-axioms"};
  std::mt19937_64 rng(seed);
  for (const auto& f : crystal_families()) family_axioms(R, f, count, rng);
  return R;
}

inline Report suite_bicrystal(long count, std::uint64_t seed, Kind kind) {
  Report R{"bicrystal"};
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<Int, Int>> periods{{2, 2}, {2, 3}, {3, 4}, {3, 3}};
  for (long t = 0; t < count; ++t) {
    auto [m, n] = periods[t % periods.size()];
    auto A = random_matrix(rng, m, n, kind);
    ++R.instances;
    for (Int i = 0; i < m; ++i)
      for (Int j = 0; j < n; ++j)
        for (bool xr : {false, true})
          for (bool yr : {false, true}) {
            CrystalIndex x{Side::row, i}, y{Side::col, j};
            auto X = [&](const AffineMatrix& B) { return xr ? matrix_e(B, x) : matrix_f(B, x); };
            auto Y = [&](const AffineMatrix& B) { return yr ? matrix_e(B, y) : matrix_f(B, y); };
            auto a = Y(A);
            auto lhs = a ? X(*a) : std::nullopt;
            auto b = X(A);
            auto rhs = b ? Y(*b) : std::nullopt;
            R.expect(same(lhs, rhs), brief(A) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
          }
  }
  return R;
}

// kappa (or kappa') against the pair action; row index 0 only on the first component and the shape.
inline void commutation_checks(Report& R, const AffineMatrix& A) {
  const Int m = A.m(), n = A.n();
  const Kind kind = A.kind();
  auto K = kappa_any(A);
  auto img = [&](const std::optional<AffineMatrix>& B) -> std::optional<RSKPair> {
    if (!B) return std::nullopt;
    return kappa_any(*B);
  };
  for (bool raise : {false, true}) {
    for (Int j = 0; n >= 2 && j < n; ++j) {
      CrystalIndex idx{Side::col, j};
      auto lhs = img(raise ? matrix_e(A, idx) : matrix_f(A, idx));
      auto rhs = raise ? pair_e(K, m, n, kind, idx) : pair_f(K, m, n, kind, idx);
      R.expect(same(lhs, rhs), brief(A) + " col " + std::to_string(j) + (raise ? " e" : " f"));
    }
    for (Int i = 1; m >= 2 && i < m; ++i) {
      CrystalIndex idx{Side::row, i};
      auto lhs = img(raise ? matrix_e(A, idx) : matrix_f(A, idx));
      auto rhs = raise ? pair_e(K, m, n, kind, idx) : pair_f(K, m, n, kind, idx);
      R.expect(same(lhs, rhs), brief(A) + " row " + std::to_string(i) + (raise ? " e" : " f"));
    }
    if (m >= 2) {
      CrystalIndex idx{Side::row, 0};
      auto B = raise ? matrix_e(A, idx) : matrix_f(A, idx);
      auto p = p_op(K.P0, m, kind, 0, raise);
      R.expect(B.has_value() == p.has_value(), brief(A) + " row 0 bottom mismatch" + (raise ? " e" : " f"));
      if (B && p) {
        auto KB = kappa_any(*B);
        R.expect(KB.P0 == *p, brief(A) + " row 0 first component" + (raise ? " e" : " f"));
        R.expect(shape(KB.Q) == shape(K.Q), brief(A) + " row 0 shape" + (raise ? " e" : " f"));
      }
    }
  }
}

inline Report suite_kappa_commutation(long count, std::uint64_t seed, Kind kind = Kind::general) {
  Report R{kind == Kind::general ? "kappa-commutation" : "dual"};
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<Int, Int>> periods{{2, 2}, {2, 3}, {3, 4}};
  for (long t = 0; t < count; ++t) {
    auto [m, n] = periods[t % periods.size()];
    auto A = random_matrix(rng, m, n, kind);
    ++R.instances;
    commutation_checks(R, A);
  }
  return R;
}

inline Report suite_bijection(Int m, Int n, Kind kind, Int max_content) {
  Report R{"bijection"};
  const Int lo = 1 - n, hi = 2 * n;
  auto fam = enumerate_family(m, n, kind, lo, hi, max_content);
  std::map<std::pair<Tableau, Tableau>, AffineMatrix> seen;
  auto key = [](const RSKPair& p) { return std::make_pair(p.P0, p.Q); };
  for (const auto& A : fam) {
    ++R.instances;
    auto t = kappa0(A);
    R.expect(is_dominant(t, m, n, kind), brief(A) + " image not dominant");
    auto p = pair_from_triple(t, m, n, kind);
    auto [it, fresh] = seen.emplace(key(p), A);
    R.expect(fresh, brief(A) + " collides with " + brief(it->second));
    if (A.empty()) continue;
    try {
      auto B = inverse_oracle(p, m, n, kind, OracleBounds{lo, hi, kind == Kind::dual ? 1 : max_content});
      R.expect(B == A, brief(A) + " oracle returned " + brief(B));
    } catch (const Error& e) {
      R.expect(false, brief(A) + " oracle: " + e.what());
    }
  }
  return R;
}

inline Report suite_dominance_image(Int m, Int n, Kind kind, Int max_content) {
  Report R{"dominance-image"};
  for (const auto& A : enumerate_family(m, n, kind, 1 - n, 2 * n, max_content)) {
    ++R.instances;
    auto t = kappa0(A);
    R.expect(is_dominant(t, m, n, kind), brief(A) + " not dominant");
    auto p = pair_from_triple(t, m, n, kind);
    R.expect(p.Q.cols.empty() || in_Blambda(p.Q, n), brief(A) + " Q not in B(lambda)");
  }
  return R;
}

// (A^st)^flat = (A^flat)^st, kappa0(A^perm) = (P0^st, Q0^st, rho), weakly decreasing flows, roundtrip.
inline void standardization_checks(Report& R, const AffineMatrix& A) {
  if (A.empty()) return;
  auto S = standardize(A);
  auto [alpha, beta] = A.contents();
  R.expect(destandardize(S.perm, alpha, beta) == A, brief(A) + " destandardize");
  R.expect(standardization_compat(A), brief(A) + " kappa0 of the standardization");
  auto F = flat_step(A);
  auto Fs = flat_step(S.perm);
  if (F.flat.empty())
    R.expect(Fs.flat.empty(), brief(A) + " flat of A^st nonzero");
  else
    R.expect(compress(Fs.flat) == standardize(F.flat).perm, brief(A) + " flat/standardization");
  auto rec = kappa0_record(A);
  R.expect(std::is_sorted(rec.flows.rbegin(), rec.flows.rend()), brief(A) + " flows increase");
}

inline Report suite_standardization(long count, std::uint64_t seed) {
  Report R{"standardization"};
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<Int, Int>> periods{{2, 2}, {2, 3}, {3, 4}};
  for (long t = 0; t < count; ++t) {
    auto [m, n] = periods[t % periods.size()];
    ++R.instances;
    standardization_checks(R, random_matrix(rng, m, n, Kind::general));
  }
  return R;
}

// All extended affine permutations of period K with row shifts in [-b, b].
inline std::vector<AffineMatrix> enumerate_permutations(Int K, Int b) {
  std::vector<AffineMatrix> out;
  std::vector<Int> sigma(K);
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    std::vector<Int> sh(K, -b);
    while (true) {
      AffineMatrix B(K, K);
      for (Int i = 0; i < K; ++i) B.add_inplace({i + 1, sigma[i] + sh[i] * K}, 1);
      out.push_back(B);
      Int k = 0;
      while (k < K && sh[k] == b) sh[k++] = -b;
      if (k == K) break;
      ++sh[k];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// descent_set(B) and descent_set(B^t) against the column descents of P0 and Q0, on [1, K-1].
inline void descent_checks(Report& R, const AffineMatrix& B) {
  const Int K = B.m();
  auto t = kappa0(B);
  auto cut = [K](const std::set<Int>& s) {
    std::vector<Int> v;
    for (Int x : s)
      if (x < K) v.push_back(x);
    return v;
  };
  R.expect(cut(descent_set(B)) == tableau_descents(t.P0), brief(B) + " descents vs P0");
  R.expect(cut(descent_set(B.transpose())) == tableau_descents(t.Q0), brief(B) + " descents vs Q0");
}

inline Report suite_descents(Int K, Int b) {
  Report R{"descents"};
  for (const auto& B : enumerate_permutations(K, b)) {
    ++R.instances;
    descent_checks(R, B);
  }
  return R;
}

struct TwoColumnCase {
  Int m, n;
  Column a1, a2, b1, b2;
};

struct TwoColumnOutcome {
  bool offset_ok;    // rho2 - rho1 >= theta - eta
  bool numbering_ok; // d equals the southwest channel numbering up to a constant
  bool extremal_ok;  // tau^{(rho1, rho2 + eta)}(Q0) in B_n(lambda)
  bool sw_is_t;      // the stream t is the southwest channel
};

inline TwoColumnOutcome two_column(const TwoColumnCase& c, Int rho1, Int rho2) {
  const Int l = static_cast<Int>(c.a1.size());
  Stream s = stream_from_data(c.m, c.n, Kind::general, c.a1, c.b1, rho1);
  Stream s2 = stream_from_data(c.m, c.n, Kind::general, c.a2, c.b2, rho2);
  auto geq = [&](Int k) {
    for (Int i = 1; i <= l; ++i)
      if (!nw_weak(s.at(i), s2.at(i + k))) return false;
    return true;
  };
  Int k = -4 * l * (c.m + c.n);
  while (!geq(k)) ++k;
  AffineMatrix A(c.m, c.n);
  std::map<Cell, Int> d;
  bool consistent = true;
  auto put = [&](Cell x, Int v) {
    Cell r = A.normalize(x);
    Int val = v - ((x.i - r.i) / c.m) * l;
    auto [it, fresh] = d.emplace(r, val);
    if (!fresh && it->second != val) consistent = false;
  };
  Stream t{c.m, c.n, Kind::general, {}};
  for (Int i = 1; i <= l; ++i) {
    Cell di{s2.at(i + k).i, s.at(i).j};
    Cell di2{s.at(i).i, s2.at(i + k).j};
    A.add_inplace(di, 1);
    A.add_inplace(di2, 1);
    put(di, i);
    put(di2, i);
    t.cells.push_back(A.normalize(di));
  }
  std::sort(t.cells.begin(), t.cells.end());
  Stream C = southwest_channel(A);
  auto D = channel_numbering(A, C);
  bool num = consistent;
  if (num) {
    Int shift = d.begin()->second - D.values.at(d.begin()->first);
    for (const auto& [x, v] : d)
      if (D.values.at(x) + shift != v) num = false;
  }
  Int eta = offset_data({c.a1, c.a2}, c.m).r.at(0);
  Int theta = offset_data({c.b1, c.b2}, c.n).r.at(0);
  Tableau Q0{{c.b1, c.b2}};
  bool ext = in_Blambda(tau_tableau(Q0, c.n, {rho1, rho2 + eta}), c.n);
  return {rho2 - rho1 >= theta - eta, num, ext, C == t};
}

inline TwoColumnCase random_two_column(std::mt19937_64& rng, Int m, Int n) {
  Int l = std::uniform_int_distribution<Int>(1, std::min(m, n))(rng);
  return {m, n, random_subset(rng, m, l), random_subset(rng, m, l), random_subset(rng, n, l), random_subset(rng, n, l)};
}

inline Report suite_two_column(long count, std::uint64_t seed, Int range = 3) {
  Report R{"two-column-offset"};
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<Int, Int>> periods{{2, 2}, {2, 3}, {3, 4}, {4, 5}};
  for (long t = 0; t < count; ++t) {
    auto [m, n] = periods[t % periods.size()];
    auto c = random_two_column(rng, m, n);
    ++R.instances;
    for (Int r1 = -range; r1 <= range; ++r1)
      for (Int r2 = -range; r2 <= range; ++r2) {
        auto o = two_column(c, r1, r2);
        std::string tag = "case " + std::to_string(t) + " rho=(" + std::to_string(r1) + "," + std::to_string(r2) + ")";
        R.expect(o.sw_is_t, tag + " t is not the southwest channel");
        R.expect(o.offset_ok == o.numbering_ok, tag + " offset vs numbering");
        R.expect(o.offset_ok == o.extremal_ok, tag + " offset vs extremal");
      }
  }
  return R;
}

}  // namespace affrsk
