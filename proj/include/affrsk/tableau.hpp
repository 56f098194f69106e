#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "affrsk/matrix.hpp"

namespace affrsk {

using Column = std::vector<Int>;  // also used for rows of row tableaux

// Columns listed left to right. The paper-style index T^j counts from the right.
struct Tableau {
  std::vector<Column> cols;

  std::size_t size() const { return cols.size(); }
  const Column& from_right(std::size_t j) const { return cols[cols.size() - j]; }
  auto operator<=>(const Tableau&) const = default;
};

inline std::vector<Int> conjugate(const std::vector<Int>& parts) {
  std::vector<Int> c;
  if (parts.empty()) return c;
  for (Int k = 1; k <= parts.front(); ++k) {
    Int cnt = 0;
    for (Int p : parts)
      if (p >= k) ++cnt;
    c.push_back(cnt);
  }
  return c;
}

inline std::vector<Int> heights(const Tableau& T) {
  std::vector<Int> h;
  for (const auto& c : T.cols) h.push_back(static_cast<Int>(c.size()));
  return h;
}

// Shape of a column tableau.
inline std::vector<Int> shape(const Tableau& T) { return conjugate(heights(T)); }

// (height i, width m_i) for i = 1..l(lambda); m_i counts the columns of height i.
inline std::vector<std::pair<Int, Int>> rect_decompose(const std::vector<Int>& lambda) {
  std::vector<std::pair<Int, Int>> out;
  auto h = conjugate(lambda);
  Int len = static_cast<Int>(lambda.size());
  for (Int i = 1; i <= len; ++i) out.push_back({i, static_cast<Int>(std::count(h.begin(), h.end(), i))});
  return out;
}

struct Block {
  Int height = 0;
  std::size_t start = 0;
  std::size_t width = 0;
};

// Rectangular blocks of a tableau with weakly decreasing column heights, tallest (leftmost) first.
// Empty heights are kept as width-0 blocks.
inline std::vector<Block> blocks(const std::vector<Int>& h) {
  std::vector<Block> out;
  if (h.empty()) return out;
  std::size_t at = 0;
  for (Int ht = h.front(); ht >= 1; --ht) {
    Block b{ht, at, 0};
    while (at < h.size() && h[at] == ht) ++at, ++b.width;
    out.push_back(b);
  }
  return out;
}

inline Column tau(Column c, Int n, Int k) {
  if (c.empty()) return c;
  for (; k > 0; --k) {
    Int x = c.front();
    c.erase(c.begin());
    c.push_back(x + n);
  }
  for (; k < 0; ++k) {
    Int x = c.back();
    c.pop_back();
    c.insert(c.begin(), x - n);
  }
  return c;
}

inline Column tau_column(const Column& c, Int n, Int k) { return tau(c, n, k); }
inline Column tau_row(const Column& r, Int n, Int k) { return tau(r, n, k); }

enum class Flavor { column, row };

// Z-semistandard test for an adjacent pair: (left, right) columns, or (upper, lower) rows.
inline bool pair_ss(Flavor f, const Column& x, const Column& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (f == Flavor::column ? x[k] > y[k] : x[k] >= y[k]) return false;
  return true;
}

inline bool strictly_increasing(const Column& c) {
  for (std::size_t k = 1; k < c.size(); ++k)
    if (c[k - 1] >= c[k]) return false;
  return true;
}

inline bool weakly_increasing(const Column& c) {
  for (std::size_t k = 1; k < c.size(); ++k)
    if (c[k - 1] > c[k]) return false;
  return true;
}

inline bool heights_decreasing(const Tableau& T) {
  for (std::size_t k = 1; k < T.size(); ++k)
    if (T.cols[k].size() > T.cols[k - 1].size()) return false;
  for (const auto& c : T.cols)
    if (c.empty()) return false;
  return true;
}

inline bool is_csst(const Tableau& T, Int m) {
  if (!heights_decreasing(T)) return false;
  for (const auto& c : T.cols) {
    if (!strictly_increasing(c)) return false;
    if (c.front() < 1 || c.back() > m) return false;
  }
  return true;
}

// Rows listed top to bottom.
inline bool is_rsst(const Tableau& R, Int m) {
  if (!heights_decreasing(R)) return false;
  for (const auto& r : R.cols) {
    if (!weakly_increasing(r)) return false;
    if (r.front() < 1 || r.back() > m) return false;
  }
  return true;
}

struct OffsetData {
  std::vector<Int> r;        // r_1..r_{a-1}
  std::vector<Int> eta;      // eta_1..eta_{a-1}
  std::vector<Int> eta_rev;  // per column left to right: (0, eta_{a-1}, ..., eta_1)
};

// cols: one rectangle, left to right (rows top to bottom for the row flavor).
inline OffsetData offset_data(const std::vector<Column>& cols, Int period, Flavor f = Flavor::column) {
  OffsetData D;
  const std::size_t a = cols.size();
  if (a == 0) return D;
  for (std::size_t j = 1; j < a; ++j) {
    const Column& x = cols[a - j - 1];
    const Column& y = cols[a - j];
    Int k = 0;
    while (!pair_ss(f, x, tau(y, period, k))) ++k;
    D.r.push_back(k);
  }
  D.eta.assign(a - 1, 0);
  Int acc = 0;
  for (std::size_t j = a - 1; j-- > 0;) {
    acc += D.r[j];
    D.eta[j] = acc;
  }
  D.eta_rev.assign(a, 0);
  for (std::size_t p = 1; p < a; ++p) D.eta_rev[p] = D.eta[a - p - 1];
  return D;
}

inline std::vector<Column> block_cols(const Tableau& T, const Block& b) {
  return {T.cols.begin() + b.start, T.cols.begin() + b.start + b.width};
}

// eta_rev of every block, concatenated left to right.
inline std::vector<Int> eta_rev_vector(const Tableau& T, Int period, Flavor f = Flavor::column) {
  std::vector<Int> out;
  for (const auto& b : blocks(heights(T))) {
    auto D = offset_data(block_cols(T, b), period, f);
    out.insert(out.end(), D.eta_rev.begin(), D.eta_rev.end());
  }
  return out;
}

// Sum of |eta| over all blocks.
inline Int eta_total(const Tableau& T, Int period, Flavor f = Flavor::column) {
  Int h = 0;
  for (const auto& b : blocks(heights(T))) {
    auto D = offset_data(block_cols(T, b), period, f);
    for (Int x : D.eta) h += x;
  }
  return h;
}

// Membership in B(R) for one rectangle with period n.
inline bool in_BR(const std::vector<Column>& cols, Int n) {
  for (std::size_t p = 0; p < cols.size(); ++p) {
    const Column& c = cols[p];
    if (c.empty() || !strictly_increasing(c) || c.back() - c.front() >= n) return false;
    if (p > 0 && !pair_ss(Flavor::column, cols[p - 1], c)) return false;
  }
  return true;
}

inline bool in_Blambda(const Tableau& T, Int n) {
  if (!heights_decreasing(T)) return false;
  for (const auto& b : blocks(heights(T)))
    if (!in_BR(block_cols(T, b), n)) return false;
  return true;
}

// Columnwise tau^shifts.
inline Tableau tau_tableau(const Tableau& T, Int n, const std::vector<Int>& shifts) {
  Tableau out;
  for (std::size_t p = 0; p < T.size(); ++p) out.cols.push_back(tau(T.cols[p], n, shifts[p]));
  return out;
}

// Q = tau^{rho + eta_rev}(Q0) columnwise; NotExtremal when the result leaves B(lambda).
inline Tableau assemble_Q(const Tableau& Q0, const std::vector<Int>& rho, const std::vector<Int>& eta_rev, Int n) {
  std::vector<Int> sh(Q0.size());
  for (std::size_t p = 0; p < Q0.size(); ++p) sh[p] = rho[p] + eta_rev[p];
  Tableau Q = tau_tableau(Q0, n, sh);
  if (!in_Blambda(Q, n)) throw Error(ErrorCode::NotExtremal, "assembled tableau is not in B(lambda)");
  return Q;
}

// (c0, k) with c = tau^k(c0) and c0 inside [1, n].
inline std::pair<Column, Int> normalize_column(const Column& c, Int n) {
  Column c0;
  for (Int x : c) c0.push_back(mod1(x, n));
  std::sort(c0.begin(), c0.end());
  Int x = c.front(), y0 = c0.front();
  Int k = 0;
  for (Int r : c0) k += floordiv(x - 1 - r, n) - floordiv(y0 - 1 - r, n);
  return {c0, k};
}

using GeneralizedPartitions = std::vector<std::vector<Int>>;  // one per block, tallest first

// Inverse of (T, nu) -> tau^{nu_rev + eta_rev(T)}(T).
inline std::pair<Tableau, GeneralizedPartitions> extremal_to_csst(const Tableau& Q, Int n) {
  Tableau Q0;
  std::vector<Int> alpha;
  for (const auto& c : Q.cols) {
    auto [c0, k] = normalize_column(c, n);
    Q0.cols.push_back(c0);
    alpha.push_back(k);
  }
  GeneralizedPartitions nu;
  for (const auto& b : blocks(heights(Q0))) {
    auto D = offset_data(block_cols(Q0, b), n);
    std::vector<Int> v;
    for (std::size_t p = 0; p < b.width; ++p) v.push_back(alpha[b.start + p] - D.eta_rev[p]);
    std::reverse(v.begin(), v.end());
    nu.push_back(v);
  }
  return {Q0, nu};
}

inline Tableau csst_to_extremal(const Tableau& T, const GeneralizedPartitions& nu, Int n) {
  std::vector<Int> sh(T.size(), 0);
  std::size_t k = 0;
  for (const auto& b : blocks(heights(T))) {
    auto D = offset_data(block_cols(T, b), n);
    const auto& v = nu.at(k++);
    for (std::size_t p = 0; p < b.width; ++p) sh[b.start + p] = v[b.width - 1 - p] + D.eta_rev[p];
  }
  return tau_tableau(T, n, sh);
}

// T = tau^{nu_rev}(T0) with T0 in B(R)_0; nu = (nu_1, ..., nu_{a-1}).
inline std::pair<std::vector<Column>, std::vector<Int>> b0_factorization(const std::vector<Column>& T, Int n) {
  const std::size_t a = T.size();
  std::vector<Column> T0 = T;
  std::vector<Int> nu(a > 0 ? a - 1 : 0, 0);
  for (std::size_t p = 1; p < a; ++p) {
    Int k = 0;
    while (pair_ss(Flavor::column, T0[p - 1], tau(T[p], n, -(k + 1)))) ++k;
    T0[p] = tau(T[p], n, -k);
    nu[a - p - 1] = k;
  }
  return {T0, nu};
}

// No column of T can be pulled back by tau^{-1} keeping its left neighbour pair semistandard.
inline bool in_BR0(const std::vector<Column>& T, Int n) {
  if (!in_BR(T, n)) return false;
  for (std::size_t p = 1; p < T.size(); ++p)
    if (pair_ss(Flavor::column, T[p - 1], tau(T[p], n, -1))) return false;
  return true;
}

// Column flavor: equal letters are renumbered left to right.
inline Tableau standardize_tableau(const Tableau& T) {
  std::map<Int, std::vector<std::pair<std::size_t, std::size_t>>> pos;
  for (std::size_t p = 0; p < T.size(); ++p)
    for (std::size_t k = 0; k < T.cols[p].size(); ++k) pos[T.cols[p][k]].push_back({p, k});
  Tableau S = T;
  Int next = 1;
  for (auto& [x, v] : pos) {
    std::sort(v.begin(), v.end());
    for (auto [p, k] : v) S.cols[p][k] = next++;
  }
  return S;
}

// Row flavor on rows listed top to bottom: bottom row first, then left to right.
inline Tableau standardize_row_tableau(const Tableau& R) {
  std::map<Int, std::vector<std::pair<std::size_t, std::size_t>>> pos;
  const std::size_t h = R.size();
  for (std::size_t p = 0; p < h; ++p)
    for (std::size_t k = 0; k < R.cols[p].size(); ++k) pos[R.cols[p][k]].push_back({h - 1 - p, k});
  Tableau S = R;
  Int next = 1;
  for (auto& [x, v] : pos) {
    std::sort(v.begin(), v.end());
    for (auto [rp, k] : v) S.cols[h - 1 - rp][k] = next++;
  }
  return S;
}

// Standard column tableau: i with i+1 in a column strictly to the right of i.
inline std::vector<Int> tableau_descents(const Tableau& S) {
  std::map<Int, std::size_t> col;
  for (std::size_t p = 0; p < S.size(); ++p)
    for (Int x : S.cols[p]) col[x] = p;
  std::vector<Int> d;
  for (auto& [x, p] : col) {
    auto it = col.find(x + 1);
    if (it != col.end() && it->second > p) d.push_back(x);
  }
  return d;
}

inline std::vector<Int> content(const Tableau& T, Int alphabet) {
  std::vector<Int> c(alphabet, 0);
  for (const auto& col : T.cols)
    for (Int x : col) c[x - 1] += 1;
  return c;
}

inline Tableau transpose_tableau(const Tableau& T) {
  Tableau R;
  for (std::size_t k = 0; !T.cols.empty() && k < T.cols.front().size(); ++k) {
    Column row;
    for (const auto& c : T.cols)
      if (k < c.size()) row.push_back(c[k]);
    R.cols.push_back(row);
  }
  return R;
}

}  // namespace affrsk
