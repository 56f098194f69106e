#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "affrsk/error.hpp"

namespace affrsk {

using Int = long long;

inline Int floordiv(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline Int ceildiv(Int a, Int b) { return -floordiv(-a, b); }
// representative of a modulo b in [1, b]
inline Int mod1(Int a, Int b) { return a - b * floordiv(a - 1, b); }

struct Cell {
  Int i = 0;
  Int j = 0;
  auto operator<=>(const Cell&) const = default;
};

// a >_NW b
inline bool nw_strict(Cell a, Cell b) { return a.i < b.i && a.j < b.j; }
// a >=_nw b
inline bool nw_weak(Cell a, Cell b) { return a.i <= b.i && a.j <= b.j; }
// a <=_ne b
inline bool ne_weak(Cell a, Cell b) { return a.i >= b.i && a.j <= b.j; }
// a >_nW b
inline bool nW_strict(Cell a, Cell b) { return a.i <= b.i && a.j < b.j; }
// a <_Ne b
inline bool Ne_strict(Cell a, Cell b) { return a.i > b.i && a.j <= b.j; }

enum class Kind { general, dual };

inline const char* kind_name(Kind k) { return k == Kind::general ? "general" : "dual"; }

// chain order of the flavor: a lies strictly before b
inline bool precedes(Kind k, Cell a, Cell b) {
  return k == Kind::general ? nw_strict(a, b) : nW_strict(a, b);
}

// tau-periodic matrix stored by one representative per orbit, rows in [1, m].
class AffineMatrix {
 public:
  AffineMatrix() : AffineMatrix(1, 1) {}
  AffineMatrix(Int m, Int n, Kind kind = Kind::general) : m_(m), n_(n), kind_(kind) {
    if (m < 1 || n < 1) throw Error(ErrorCode::InvalidValue, "periods must be positive");
  }

  static AffineMatrix build(Int m, Int n, Kind kind, const std::vector<std::array<Int, 3>>& entries) {
    AffineMatrix A(m, n, kind);
    for (const auto& [i, j, v] : entries) {
      if (v <= 0) throw Error(ErrorCode::InvalidValue, "entry values must be positive");
      if (kind == Kind::dual && v > 1) throw Error(ErrorCode::InvalidValue, "dual entries must be 1");
      Cell c = A.normalize({i, j});
      if (!A.w_.emplace(c, v).second)
        throw Error(ErrorCode::DuplicateOrbit,
                    "orbit of (" + std::to_string(i) + "," + std::to_string(j) + ") given twice");
    }
    return A;
  }

  Int m() const { return m_; }
  Int n() const { return n_; }
  Kind kind() const { return kind_; }

  Cell normalize(Cell c) const {
    Int s = floordiv(c.i - 1, m_);
    return {c.i - s * m_, c.j - s * n_};
  }
  Cell shift(Cell c, Int s) const { return {c.i + s * m_, c.j + s * n_}; }

  Int entry(Cell c) const {
    auto it = w_.find(normalize(c));
    return it == w_.end() ? 0 : it->second;
  }

  const std::map<Cell, Int>& window() const { return w_; }
  bool empty() const { return w_.empty(); }
  std::size_t support_size() const { return w_.size(); }

  Int total() const {
    Int t = 0;
    for (const auto& [c, v] : w_) t += v;
    return t;
  }

  AffineMatrix transpose() const {
    AffineMatrix T(n_, m_, kind_);
    for (const auto& [c, v] : w_) T.w_[T.normalize({c.j, c.i})] = v;
    return T;
  }

  // row content indexed 0..m-1, column content by residue 0..n-1 (residue s stored at s-1)
  std::pair<std::vector<Int>, std::vector<Int>> contents() const {
    std::vector<Int> row(m_, 0), col(n_, 0);
    for (const auto& [c, v] : w_) {
      row[c.i - 1] += v;
      col[mod1(c.j, n_) - 1] += v;
    }
    return {row, col};
  }

  void add_inplace(Cell c, Int delta) {
    Cell r = normalize(c);
    Int v = entry(r) + delta;
    if (v < 0) throw Error(ErrorCode::InvalidValue, "negative entry");
    if (kind_ == Kind::dual && v > 1) throw Error(ErrorCode::InvalidValue, "dual entry exceeds 1");
    if (v == 0)
      w_.erase(r);
    else
      w_[r] = v;
  }

  AffineMatrix add(Cell c, Int delta) const {
    AffineMatrix B = *this;
    B.add_inplace(c, delta);
    return B;
  }

  AffineMatrix with_kind(Kind k) const {
    AffineMatrix B = *this;
    B.kind_ = k;
    if (k == Kind::dual)
      for (const auto& [c, v] : w_)
        if (v > 1) throw Error(ErrorCode::InvalidValue, "dual entries must be 1");
    return B;
  }

  bool operator==(const AffineMatrix& o) const {
    return m_ == o.m_ && n_ == o.n_ && kind_ == o.kind_ && w_ == o.w_;
  }
  bool operator<(const AffineMatrix& o) const {
    return std::tie(m_, n_, kind_, w_) < std::tie(o.m_, o.n_, o.kind_, o.w_);
  }

 private:
  Int m_, n_;
  Kind kind_;
  std::map<Cell, Int> w_;
};

// E^_{i,j}: indicator of one tau-orbit
inline AffineMatrix unit(Int m, Int n, Cell c, Kind kind = Kind::general) {
  return AffineMatrix(m, n, kind).add(c, 1);
}

// Drops zero rows and zero column residues, keeping order.
inline AffineMatrix compress(const AffineMatrix& A) {
  if (A.empty()) return A;
  auto [row, col] = A.contents();
  std::vector<Int> rrank(A.m(), 0), crank(A.n(), 0);
  Int m2 = 0, n2 = 0;
  for (Int i = 0; i < A.m(); ++i)
    if (row[i]) rrank[i] = ++m2;
  for (Int s = 0; s < A.n(); ++s)
    if (col[s]) crank[s] = ++n2;
  AffineMatrix B(m2, n2, A.kind());
  for (const auto& [c, v] : A.window()) {
    Int s = mod1(c.j, A.n());
    Int q = (c.j - s) / A.n();
    B.add_inplace({rrank[c.i - 1], crank[s - 1] + q * n2}, v);
  }
  return B;
}

struct Standardization {
  AffineMatrix perm;
  Int K = 0;
  std::vector<Int> row_base;  // I_i = row_base[i-1]+1 .. row_base[i-1]+alpha_i
  std::vector<Int> col_base;
  std::map<Cell, std::vector<Cell>> image;  // window cell -> its block of perm, top row first
};

namespace detail {

inline std::vector<Int> prefix(const std::vector<Int>& v) {
  std::vector<Int> b(v.size(), 0);
  for (std::size_t k = 1; k < v.size(); ++k) b[k] = b[k - 1] + v[k - 1];
  return b;
}

// rows_ascending: within a row block, cells with smaller column take the top rows.
inline Standardization standardize_impl(const AffineMatrix& A, bool rows_ascending) {
  if (A.empty()) throw Error(ErrorCode::EmptyMatrix, "standardization of the zero matrix");
  const Int m = A.m(), n = A.n();
  auto [alpha, beta] = A.contents();
  Standardization S;
  S.K = A.total();
  S.row_base = prefix(alpha);
  S.col_base = prefix(beta);
  S.perm = AffineMatrix(S.K, S.K, A.kind());

  std::map<Cell, Int> row_start, col_start;
  std::vector<std::vector<std::pair<Int, Cell>>> rows(m);
  std::vector<std::vector<std::pair<Int, Cell>>> cols(n);
  for (const auto& [c, v] : A.window()) {
    rows[c.i - 1].push_back({rows_ascending ? c.j : -c.j, c});
    Int s = mod1(c.j, n);
    Int q = (c.j - s) / n;
    cols[s - 1].push_back({-(c.i - q * m), c});
  }
  for (Int i = 0; i < m; ++i) {
    std::sort(rows[i].begin(), rows[i].end());
    Int at = S.row_base[i] + 1;
    for (auto& [key, c] : rows[i]) {
      row_start[c] = at;
      at += A.entry(c);
    }
  }
  for (Int s = 0; s < n; ++s) {
    std::sort(cols[s].begin(), cols[s].end());
    Int at = S.col_base[s] + 1;
    for (auto& [key, c] : cols[s]) {
      col_start[c] = at;
      at += A.entry(c);
    }
  }
  for (const auto& [c, v] : A.window()) {
    Int s = mod1(c.j, n);
    Int q = (c.j - s) / n;
    auto& blk = S.image[c];
    for (Int t = 0; t < v; ++t) {
      Cell b{row_start[c] + t, col_start[c] + (v - 1 - t) + q * S.K};
      S.perm.add_inplace(b, 1);
      blk.push_back(b);
    }
  }
  return S;
}

inline Int block_of(const std::vector<Int>& base, const std::vector<Int>& sizes, Int x) {
  for (std::size_t k = 0; k < base.size(); ++k)
    if (x > base[k] && x <= base[k] + sizes[k]) return static_cast<Int>(k) + 1;
  throw Error(ErrorCode::InternalError, "index outside every block");
}

}  // namespace detail

// A^perm for the general flavor.
inline Standardization standardize(const AffineMatrix& A) { return detail::standardize_impl(A, false); }

// A^perm' for binary matrices.
inline Standardization dual_standardize(const AffineMatrix& A) {
  return detail::standardize_impl(A, true);
}

// Column of the 1 in rows 1..K, or empty if B is not an extended affine permutation.
inline std::vector<Int> perm_columns(const AffineMatrix& B) {
  if (B.m() != B.n()) return {};
  const Int K = B.m();
  std::vector<Int> col(K + 1, 0);
  std::vector<bool> seen(K + 1, false);
  std::set<Int> residues;
  for (const auto& [c, v] : B.window()) {
    if (v != 1 || seen[c.i]) return {};
    seen[c.i] = true;
    col[c.i] = c.j;
    if (!residues.insert(mod1(c.j, K)).second) return {};
  }
  for (Int i = 1; i <= K; ++i)
    if (!seen[i]) return {};
  return col;
}

inline bool is_permutation(const AffineMatrix& B) { return !perm_columns(B).empty(); }

namespace detail {
inline std::vector<Int> checked_columns(const AffineMatrix& B) {
  auto col = perm_columns(B);
  if (col.empty()) throw Error(ErrorCode::InvalidValue, "not an extended affine permutation");
  return col;
}
inline Int next_col(const std::vector<Int>& col, Int i, Int K) {
  return i == K ? col[1] + K : col[i + 1];
}
}  // namespace detail

// i in [1,K] with the 1 of row i+1 strictly west of the 1 of row i.
inline std::set<Int> descent_set(const AffineMatrix& B) {
  auto col = detail::checked_columns(B);
  std::set<Int> d;
  for (Int i = 1; i <= B.m(); ++i)
    if (detail::next_col(col, i, B.m()) < col[i]) d.insert(i);
  return d;
}

inline std::set<Int> ascent_set(const AffineMatrix& B) {
  auto col = detail::checked_columns(B);
  std::set<Int> d;
  for (Int i = 1; i <= B.m(); ++i)
    if (detail::next_col(col, i, B.m()) > col[i]) d.insert(i);
  return d;
}

namespace detail {
inline bool interior_in(const std::set<Int>& s, const std::vector<Int>& sizes) {
  Int base = 0;
  for (Int a : sizes) {
    for (Int i = base + 1; i < base + a; ++i)
      if (!s.count(i)) return false;
    base += a;
  }
  return true;
}
inline Int sum(const std::vector<Int>& v) {
  Int s = 0;
  for (Int x : v) s += x;
  return s;
}
}  // namespace detail

inline bool is_descending(const AffineMatrix& B, const std::vector<Int>& alpha, const std::vector<Int>& beta) {
  if (!is_permutation(B) || detail::sum(alpha) != B.m() || detail::sum(beta) != B.m()) return false;
  return detail::interior_in(descent_set(B), alpha) && detail::interior_in(descent_set(B.transpose()), beta);
}

inline bool is_ascending(const AffineMatrix& B, const std::vector<Int>& alpha, const std::vector<Int>& beta) {
  if (!is_permutation(B) || detail::sum(alpha) != B.m() || detail::sum(beta) != B.m()) return false;
  return detail::interior_in(ascent_set(B), alpha) && detail::interior_in(descent_set(B.transpose()), beta);
}

namespace detail {
inline AffineMatrix destandardize_impl(const AffineMatrix& B, const std::vector<Int>& alpha,
                                       const std::vector<Int>& beta, bool dual) {
  const Int K = B.m();
  const Int m = static_cast<Int>(alpha.size()), n = static_cast<Int>(beta.size());
  auto rb = prefix(alpha), cb = prefix(beta);
  AffineMatrix A(m, n, dual ? Kind::dual : Kind::general);
  for (const auto& [c, v] : B.window()) {
    Int i = block_of(rb, alpha, c.i);
    Int cc = mod1(c.j, K);
    Int q = (c.j - cc) / K;
    Int s = block_of(cb, beta, cc);
    Cell a{i, s + q * n};
    if (dual && A.entry(a) == 1) throw Error(ErrorCode::NotDescending, "block holds more than one 1");
    A.add_inplace(a, 1);
  }
  auto S = standardize_impl(A, dual);
  if (!(S.perm == B.with_kind(A.kind())))
    throw Error(ErrorCode::NotDescending, "permutation is not the standardization of its block sums");
  return A;
}
}  // namespace detail

inline AffineMatrix destandardize(const AffineMatrix& B, const std::vector<Int>& alpha,
                                  const std::vector<Int>& beta) {
  if (!is_descending(B, alpha, beta)) throw Error(ErrorCode::NotDescending, "(alpha,beta)-descent fails");
  return detail::destandardize_impl(B, alpha, beta, false);
}

inline AffineMatrix dual_destandardize(const AffineMatrix& B, const std::vector<Int>& alpha,
                                       const std::vector<Int>& beta) {
  if (!is_ascending(B, alpha, beta)) throw Error(ErrorCode::NotDescending, "(alpha,beta)-ascent fails");
  return detail::destandardize_impl(B, alpha, beta, true);
}

}  // namespace affrsk
