#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "affrsk/matrix.hpp"
#include "affrsk/numbering.hpp"
#include "affrsk/tableau.hpp"
#include "affrsk/weight.hpp"

namespace affrsk {

struct FlatStep {
  AffineMatrix flat;
  Stream stream;  // back-post corners
  ProperNumbering numbering;
  ZigZagFamily zigzags;
};

inline FlatStep flat_step(const AffineMatrix& A) {
  if (A.empty()) throw Error(ErrorCode::EmptyMatrix, "flat step of the zero matrix");
  FlatStep F{A, {}, {}, {}};
  Stream C = southwest_channel(A);
  F.numbering = channel_numbering(A, C);
  F.zigzags = zigzags(A, F.numbering);
  try {
    for (const auto& z : F.zigzags.levels)
      for (const Cell& c : z.inner) F.flat.add_inplace(c, -1);
    for (const auto& z : F.zigzags.levels)
      for (const Cell& c : z.outer) F.flat.add_inplace(c, 1);
  } catch (const Error& e) {
    throw Error(ErrorCode::InternalError, std::string("flat step left the matrix class: ") + e.what());
  }
  F.stream = Stream{A.m(), A.n(), A.kind(), {}};
  for (const auto& z : F.zigzags.levels) F.stream.cells.push_back(A.normalize(z.back_post));
  std::sort(F.stream.cells.begin(), F.stream.cells.end());
  if (!is_stream(F.stream)) throw Error(ErrorCode::InternalError, "back-post corners do not form a stream");
  return F;
}

// (P0, Q0, rho). For the dual flavor the columns of P0 are the rows of P0^t.
struct RSKTriple {
  Tableau P0;
  Tableau Q0;
  std::vector<Int> rho;
  bool operator==(const RSKTriple&) const = default;
};

// (P0, Q) with Q in B_n(lambda). Dual: P0 holds the rows of P0^t.
struct RSKPair {
  Tableau P0;
  Tableau Q;
  bool operator==(const RSKPair&) const = default;
};

struct PeelRecord {
  RSKTriple triple;
  std::vector<Int> flows;
};

inline PeelRecord kappa0_record(const AffineMatrix& A) {
  PeelRecord R;
  AffineMatrix cur = A;
  const Int cap = A.total() + 1;
  Int steps = 0;
  while (!cur.empty()) {
    if (++steps > cap) throw Error(ErrorCode::NonTermination, "peeling did not terminate");
    Int before = cur.total();
    FlatStep F = flat_step(cur);
    if (F.flat.total() >= before) throw Error(ErrorCode::NonTermination, "content did not decrease");
    auto D = defining_data(F.stream);
    R.triple.P0.cols.push_back(D.a);
    R.triple.Q0.cols.push_back(D.b);
    R.triple.rho.push_back(D.r);
    R.flows.push_back(F.stream.flow());
    cur = std::move(F.flat);
  }
  return R;
}

inline RSKTriple kappa0(const AffineMatrix& A) { return kappa0_record(A).triple; }

inline Flavor p_flavor(Kind k) { return k == Kind::general ? Flavor::column : Flavor::row; }

// nu = rho_rev - (theta - eta) per block; dominant iff every block is weakly decreasing.
inline std::vector<std::vector<Int>> dominance_vectors(const RSKTriple& t, Int m, Int n, Kind kind) {
  std::vector<std::vector<Int>> out;
  for (const auto& b : blocks(heights(t.Q0))) {
    auto eta = offset_data(block_cols(t.P0, b), m, p_flavor(kind)).eta;
    auto theta = offset_data(block_cols(t.Q0, b), n).eta;
    eta.push_back(0);
    theta.push_back(0);
    std::vector<Int> nu;
    for (std::size_t p = 0; p < b.width; ++p) nu.push_back(t.rho[b.start + b.width - 1 - p] + eta[p] - theta[p]);
    out.push_back(nu);
  }
  return out;
}

inline bool is_dominant(const RSKTriple& t, Int m, Int n, Kind kind = Kind::general) {
  for (const auto& nu : dominance_vectors(t, m, n, kind))
    for (std::size_t p = 1; p < nu.size(); ++p)
      if (nu[p] > nu[p - 1]) return false;
  return true;
}

inline RSKPair pair_from_triple(const RSKTriple& t, Int m, Int n, Kind kind) {
  RSKPair out{t.P0, {}};
  if (t.Q0.cols.empty()) return out;
  try {
    out.Q = assemble_Q(t.Q0, t.rho, eta_rev_vector(t.P0, m, p_flavor(kind)), n);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotExtremal) throw Error(ErrorCode::InternalError, e.what());
    throw;
  }
  return out;
}

inline RSKPair kappa(const AffineMatrix& A) {
  return pair_from_triple(kappa0(A), A.m(), A.n(), Kind::general);
}

inline RSKPair kappa_prime(const AffineMatrix& A) {
  return pair_from_triple(kappa0(A), A.m(), A.n(), Kind::dual);
}

inline RSKPair kappa_any(const AffineMatrix& A) {
  return A.kind() == Kind::general ? kappa(A) : kappa_prime(A);
}

inline Int energy_H(const AffineMatrix& A) { return eta_total(kappa0(A).P0, A.m(), p_flavor(A.kind())); }

// wt^0(A^t) - H delta, which equals wt^0(Q).
inline Weight corrected_weight(const AffineMatrix& A) {
  return matrix_weight(A.transpose()) - delta_weight(A.n(), energy_H(A));
}

struct OracleBounds {
  Int col_lo = 0;
  Int col_hi = 0;
  Int max_value = 1;
};

namespace detail {

// Calls visit on every matrix inside the bounds with the given row and column-residue contents.
inline void enumerate_fiber(Int m, Int n, Kind kind, const OracleBounds& b, std::vector<Int> alpha,
                            std::vector<Int> beta, const std::function<void(const AffineMatrix&)>& visit) {
  std::vector<Cell> cells;
  for (Int i = 1; i <= m; ++i)
    for (Int j = b.col_lo; j <= b.col_hi; ++j) cells.push_back({i, j});
  const Int cap = kind == Kind::dual ? 1 : b.max_value;
  AffineMatrix cur(m, n, kind);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      for (Int x : alpha)
        if (x) return;
      visit(cur);
      return;
    }
    const Cell c = cells[k];
    Int& ra = alpha[c.i - 1];
    Int& cb = beta[mod1(c.j, n) - 1];
    // row i must be finished once its last cell is passed
    bool last_in_row = c.j == b.col_hi;
    for (Int v = 0; v <= std::min({cap, ra, cb}); ++v) {
      if (last_in_row && v != ra) continue;
      if (v) cur.add_inplace(c, v);
      ra -= v;
      cb -= v;
      rec(k + 1);
      ra += v;
      cb += v;
      if (v) cur.add_inplace(c, -v);
    }
  };
  rec(0);
}

template <class Target, class Map>
AffineMatrix invert(const Target& target, Int m, Int n, Kind kind, const OracleBounds& b, const Tableau& P0,
                    const Tableau& Qlike, Map map) {
  std::vector<Int> alpha(m, 0), beta(n, 0);
  for (const auto& col : P0.cols)
    for (Int x : col) {
      if (x < 1 || x > m) throw Error(ErrorCode::NotFound, "P0 entry outside [1,m]");
      alpha[x - 1] += 1;
    }
  for (const auto& col : Qlike.cols)
    for (Int x : col) beta[mod1(x, n) - 1] += 1;
  std::optional<AffineMatrix> found;
  enumerate_fiber(m, n, kind, b, alpha, beta, [&](const AffineMatrix& A) {
    if (map(A) == target) {
      if (found) throw Error(ErrorCode::AmbiguousPreimage, "two matrices share the same image");
      found = A;
    }
  });
  if (!found) throw Error(ErrorCode::NotFound, "no preimage inside the search bounds");
  return *found;
}

}  // namespace detail

inline OracleBounds default_bounds(const Tableau& Qlike, Int n, Int max_value) {
  OracleBounds b{0, 0, max_value};
  bool first = true;
  for (const auto& col : Qlike.cols)
    for (Int x : col) {
      b.col_lo = first ? x : std::min(b.col_lo, x);
      b.col_hi = first ? x : std::max(b.col_hi, x);
      first = false;
    }
  b.col_lo -= n;
  b.col_hi += n;
  return b;
}

inline AffineMatrix inverse_oracle(const RSKPair& target, Int m, Int n, Kind kind, const OracleBounds& b) {
  return detail::invert(target, m, n, kind, b, target.P0, target.Q,
                        [&](const AffineMatrix& A) { return kappa_any(A); });
}

inline AffineMatrix inverse_oracle(const RSKTriple& target, Int m, Int n, Kind kind, const OracleBounds& b) {
  return detail::invert(target, m, n, kind, b, target.P0, target.Q0,
                        [&](const AffineMatrix& A) { return kappa0(A); });
}

// kappa0(A^perm) == (P0^st, Q0^st, rho)
inline bool standardization_compat(const AffineMatrix& A) {
  auto t = kappa0(A);
  auto s = kappa0(standardize(A).perm);
  return s.P0 == standardize_tableau(t.P0) && s.Q0 == standardize_tableau(t.Q0) && s.rho == t.rho;
}

}  // namespace affrsk
