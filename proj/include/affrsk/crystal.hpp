#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "affrsk/matrix.hpp"
#include "affrsk/rsk.hpp"
#include "affrsk/tableau.hpp"
#include "affrsk/weight.hpp"

namespace affrsk {

struct Symbol {
  bool plus = false;
  Int at = 0;  // provenance: a column or row index, or a tensor factor
};

using Signature = std::vector<Symbol>;

struct Reduced {
  std::vector<std::size_t> minus;  // surviving -, left to right
  std::vector<std::size_t> plus;   // surviving +, left to right
  Int eps() const { return static_cast<Int>(minus.size()); }
  Int phi() const { return static_cast<Int>(plus.size()); }
};

// Cancels every + with the nearest uncancelled - to its right.
inline Reduced reduce(const Signature& s) {
  Reduced r;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k].plus)
      r.plus.push_back(k);
    else if (!r.plus.empty())
      r.plus.pop_back();
    else
      r.minus.push_back(k);
  }
  return r;
}

enum class Side { row, col };

struct CrystalIndex {
  Side side = Side::row;
  Int i = 0;
};

inline Int side_period(const AffineMatrix& A, Side s) { return s == Side::row ? A.m() : A.n(); }

inline void check_index(Int period, Int i) {
  if (period < 2) throw Error(ErrorCode::UnsupportedIndex, "operator family is empty for period 1");
  if (i < 0 || i >= period) throw Error(ErrorCode::UnsupportedIndex, "index out of range");
}

namespace detail {

// Row pair (i, i+1) of the general or dual row-side signature; at = column.
inline Signature row_signature(const AffineMatrix& A, Int i) {
  std::set<Int> js;
  const Int m = A.m(), n = A.n();
  for (const auto& [c, v] : A.window()) {
    if (c.i == i) js.insert(c.j);
    if (c.i == i + 1) js.insert(c.j);
    if (i == 0 && c.i == m) js.insert(c.j - n);
  }
  Signature s;
  auto push = [&](bool plus, Int cnt, Int j) {
    for (Int t = 0; t < cnt; ++t) s.push_back({plus, j});
  };
  if (A.kind() == Kind::general) {
    for (Int j : js) {
      push(false, A.entry({i + 1, j}), j);
      push(true, A.entry({i, j}), j);
    }
  } else {
    for (auto it = js.rbegin(); it != js.rend(); ++it) {
      push(true, A.entry({i, *it}), *it);
      push(false, A.entry({i + 1, *it}), *it);
    }
  }
  return s;
}

// Dual column pair (j, j+1); at = row.
inline Signature dual_col_signature(const AffineMatrix& A, Int j) {
  std::set<Int> is;
  const Int m = A.m(), n = A.n();
  for (const auto& [c, v] : A.window())
    for (Int col : {j, j + 1}) {
      Int d = col - c.j;
      if (d % n == 0) is.insert(c.i + (d / n) * m);
    }
  Signature s;
  for (Int i : is) {
    if (A.entry({i, j})) s.push_back({true, i});
    if (A.entry({i, j + 1})) s.push_back({false, i});
  }
  return s;
}

inline std::optional<AffineMatrix> row_op(const AffineMatrix& A, Int i, bool raise) {
  auto s = row_signature(A, i);
  auto r = reduce(s);
  if (raise) {
    if (r.minus.empty()) return std::nullopt;
    Int j = s[r.minus.back()].at;
    return A.add({i + 1, j}, -1).add({i, j}, 1);
  }
  if (r.plus.empty()) return std::nullopt;
  Int j = s[r.plus.front()].at;
  return A.add({i, j}, -1).add({i + 1, j}, 1);
}

inline std::optional<AffineMatrix> dual_col_op(const AffineMatrix& A, Int j, bool raise) {
  auto s = dual_col_signature(A, j);
  auto r = reduce(s);
  if (raise) {
    if (r.minus.empty()) return std::nullopt;
    Int i = s[r.minus.back()].at;
    return A.add({i, j + 1}, -1).add({i, j}, 1);
  }
  if (r.plus.empty()) return std::nullopt;
  Int i = s[r.plus.front()].at;
  return A.add({i, j}, -1).add({i, j + 1}, 1);
}

inline std::optional<AffineMatrix> matrix_op(const AffineMatrix& A, CrystalIndex idx, bool raise) {
  check_index(side_period(A, idx.side), idx.i);
  if (idx.side == Side::row) return row_op(A, idx.i, raise);
  if (A.kind() == Kind::dual) return dual_col_op(A, idx.i, raise);
  auto t = row_op(A.transpose(), idx.i, raise);
  if (!t) return std::nullopt;
  return t->transpose();
}

inline Signature matrix_signature(const AffineMatrix& A, CrystalIndex idx) {
  check_index(side_period(A, idx.side), idx.i);
  if (idx.side == Side::row) return row_signature(A, idx.i);
  if (A.kind() == Kind::dual) return dual_col_signature(A, idx.i);
  return row_signature(A.transpose(), idx.i);
}

}  // namespace detail

inline Signature matrix_signature(const AffineMatrix& A, CrystalIndex idx) {
  return detail::matrix_signature(A, idx);
}

inline std::optional<AffineMatrix> matrix_f(const AffineMatrix& A, CrystalIndex idx) {
  return detail::matrix_op(A, idx, false);
}
inline std::optional<AffineMatrix> matrix_e(const AffineMatrix& A, CrystalIndex idx) {
  return detail::matrix_op(A, idx, true);
}

inline std::pair<Int, Int> eps_phi(const AffineMatrix& A, CrystalIndex idx) {
  auto r = reduce(matrix_signature(A, idx));
  return {r.eps(), r.phi()};
}

// Weight on the side of idx: wt^0(A) for rows, wt^0(A^t) for columns.
inline Weight matrix_side_weight(const AffineMatrix& A, Side s) {
  return s == Side::row ? matrix_weight(A) : matrix_weight(A.transpose());
}

// ---- single columns of B((1^b)), entries in Z, period n ----

inline std::pair<Int, Int> column_eps_phi(const Column& c, Int n, Int i) {
  if (static_cast<Int>(c.size()) >= n) return {0, 0};
  std::set<Int> S;
  for (Int x : c) S.insert(mod1(x, n) % n);
  bool hi = S.count(i), hj = S.count((i + 1) % n);
  return {hj && !hi ? 1 : 0, hi && !hj ? 1 : 0};
}

inline std::optional<Column> column_f(Column c, Int n, Int i) {
  if (column_eps_phi(c, n, i).second == 0) return std::nullopt;
  for (Int& x : c)
    if (mod1(x, n) % n == i) {
      x += 1;
      break;
    }
  return c;
}

inline std::optional<Column> column_e(Column c, Int n, Int i) {
  if (column_eps_phi(c, n, i).first == 0) return std::nullopt;
  for (Int& x : c)
    if (mod1(x, n) % n == (i + 1) % n) {
      x -= 1;
      break;
    }
  return c;
}

inline Weight column_weight(const Column& c, Int n) {
  Weight w(n);
  for (Int x : c) w += box_weight(x, n);
  return w;
}

// ---- tensor rule ----

// Factor acted on, given (eps, phi) of factors in tensor order; nullopt for bottom.
inline std::optional<std::size_t> tensor_target(const std::vector<std::pair<Int, Int>>& ep, bool raise) {
  Signature s;
  for (std::size_t k = 0; k < ep.size(); ++k) {
    for (Int t = 0; t < ep[k].first; ++t) s.push_back({false, static_cast<Int>(k)});
    for (Int t = 0; t < ep[k].second; ++t) s.push_back({true, static_cast<Int>(k)});
  }
  auto r = reduce(s);
  if (raise) {
    if (r.minus.empty()) return std::nullopt;
    return static_cast<std::size_t>(s[r.minus.back()].at);
  }
  if (r.plus.empty()) return std::nullopt;
  return static_cast<std::size_t>(s[r.plus.front()].at);
}

inline std::pair<Int, Int> tensor_eps_phi(const std::vector<std::pair<Int, Int>>& ep) {
  Signature s;
  for (const auto& [e, p] : ep) {
    for (Int t = 0; t < e; ++t) s.push_back({false, 0});
    for (Int t = 0; t < p; ++t) s.push_back({true, 0});
  }
  auto r = reduce(s);
  return {r.eps(), r.phi()};
}

// ---- B(lambda): columns read right to left as tensor factors ----

namespace detail {
inline std::vector<std::pair<Int, Int>> blambda_factors(const Tableau& T, Int n, Int i) {
  std::vector<std::pair<Int, Int>> ep;
  for (std::size_t k = T.size(); k-- > 0;) ep.push_back(column_eps_phi(T.cols[k], n, i));
  return ep;
}

inline std::optional<Tableau> blambda_op(const Tableau& T, Int n, Int i, bool raise) {
  auto t = tensor_target(blambda_factors(T, n, i), raise);
  if (!t) return std::nullopt;
  std::size_t col = T.size() - 1 - *t;
  Tableau out = T;
  auto c = raise ? column_e(T.cols[col], n, i) : column_f(T.cols[col], n, i);
  out.cols[col] = *c;
  return out;
}
}  // namespace detail

inline std::optional<Tableau> blambda_f(const Tableau& T, Int n, Int i) { return detail::blambda_op(T, n, i, false); }
inline std::optional<Tableau> blambda_e(const Tableau& T, Int n, Int i) { return detail::blambda_op(T, n, i, true); }
inline std::pair<Int, Int> blambda_eps_phi(const Tableau& T, Int n, Int i) {
  return tensor_eps_phi(detail::blambda_factors(T, n, i));
}

// ---- CSST over [m]: lift each block by tau^{eta_rev}, act in B(lambda), fold back ----

namespace detail {
inline std::optional<Tableau> csst_op(const Tableau& T, Int m, Int i, bool raise) {
  Tableau L = tau_tableau(T, m, eta_rev_vector(T, m));
  auto r = raise ? blambda_e(L, m, i) : blambda_f(L, m, i);
  if (!r) return std::nullopt;
  Tableau out;
  for (const auto& c : r->cols) out.cols.push_back(normalize_column(c, m).first);
  return out;
}
}  // namespace detail

inline std::optional<Tableau> csst_f(const Tableau& T, Int m, Int i) { return detail::csst_op(T, m, i, false); }
inline std::optional<Tableau> csst_e(const Tableau& T, Int m, Int i) { return detail::csst_op(T, m, i, true); }
inline std::pair<Int, Int> csst_eps_phi(const Tableau& T, Int m, Int i) {
  return blambda_eps_phi(tau_tableau(T, m, eta_rev_vector(T, m)), m, i);
}

// ---- RSST over [m] (rows top to bottom), each row a factor, top row first ----

inline std::pair<Int, Int> row_eps_phi(const Column& r, Int m, Int i) {
  Int lo = i == 0 ? m : i;
  Int hi = i == 0 ? 1 : i + 1;
  return {static_cast<Int>(std::count(r.begin(), r.end(), hi)), static_cast<Int>(std::count(r.begin(), r.end(), lo))};
}

inline Column row_apply(Column r, Int m, Int i, bool raise) {
  Int lo = i == 0 ? m : i;
  Int hi = i == 0 ? 1 : i + 1;
  Int from = raise ? hi : lo, to = raise ? lo : hi;
  auto it = std::find(r.begin(), r.end(), from);
  *it = to;
  std::sort(r.begin(), r.end());
  return r;
}

namespace detail {
inline std::optional<Tableau> rsst_op(const Tableau& R, Int m, Int i, bool raise) {
  std::vector<std::pair<Int, Int>> ep;
  for (const auto& r : R.cols) ep.push_back(row_eps_phi(r, m, i));
  auto t = tensor_target(ep, raise);
  if (!t) return std::nullopt;
  Tableau out = R;
  out.cols[*t] = row_apply(R.cols[*t], m, i, raise);
  return out;
}
}  // namespace detail

inline std::optional<Tableau> rsst_f(const Tableau& R, Int m, Int i) { return detail::rsst_op(R, m, i, false); }
inline std::optional<Tableau> rsst_e(const Tableau& R, Int m, Int i) { return detail::rsst_op(R, m, i, true); }
inline std::pair<Int, Int> rsst_eps_phi(const Tableau& R, Int m, Int i) {
  std::vector<std::pair<Int, Int>> ep;
  for (const auto& r : R.cols) ep.push_back(row_eps_phi(r, m, i));
  return tensor_eps_phi(ep);
}

// Classical weight of a tableau over [m].
inline Weight content_weight(const Tableau& T, Int m) {
  Weight w(m);
  for (const auto& c : T.cols)
    for (Int x : c) w.c[x - 1] += 1;
  w.classical_only = true;
  return w;
}

// ---- pairs (P0, Q) ----

inline std::optional<RSKPair> pair_op(const RSKPair& x, Int m, Int n, Kind kind, CrystalIndex idx, bool raise) {
  if (idx.side == Side::col) {
    check_index(n, idx.i);
    auto q = raise ? blambda_e(x.Q, n, idx.i) : blambda_f(x.Q, n, idx.i);
    if (!q) return std::nullopt;
    return RSKPair{x.P0, *q};
  }
  check_index(m, idx.i);
  if (idx.i == 0) throw Error(ErrorCode::UnsupportedIndex, "row index 0 does not act on pairs");
  std::optional<Tableau> p;
  if (kind == Kind::general)
    p = raise ? csst_e(x.P0, m, idx.i) : csst_f(x.P0, m, idx.i);
  else
    p = raise ? rsst_e(x.P0, m, idx.i) : rsst_f(x.P0, m, idx.i);
  if (!p) return std::nullopt;
  return RSKPair{*p, x.Q};
}

inline std::optional<RSKPair> pair_f(const RSKPair& x, Int m, Int n, Kind kind, CrystalIndex idx) {
  return pair_op(x, m, n, kind, idx, false);
}
inline std::optional<RSKPair> pair_e(const RSKPair& x, Int m, Int n, Kind kind, CrystalIndex idx) {
  return pair_op(x, m, n, kind, idx, true);
}

// P0-side operator of either flavor, any row index including 0.
inline std::optional<Tableau> p_op(const Tableau& P0, Int m, Kind kind, Int i, bool raise) {
  check_index(m, i);
  if (kind == Kind::general) return raise ? csst_e(P0, m, i) : csst_f(P0, m, i);
  return raise ? rsst_e(P0, m, i) : rsst_f(P0, m, i);
}

}  // namespace affrsk
