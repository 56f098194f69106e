#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "affrsk/matrix.hpp"

namespace affrsk {

// A tau-invariant chain, stored by its cells with row in [1, m] in chain order.
struct Stream {
  Int m = 1, n = 1;
  Kind kind = Kind::general;
  std::vector<Cell> cells;

  Int flow() const { return static_cast<Int>(cells.size()); }

  // c_k for any integer k, with c_1 = cells[0]
  Cell at(Int k) const {
    Int l = flow();
    Int t = mod1(k, l);
    Int s = (k - t) / l;
    return {cells[t - 1].i + s * m, cells[t - 1].j + s * n};
  }

  bool operator==(const Stream& o) const {
    return m == o.m && n == o.n && kind == o.kind && cells == o.cells;
  }
};

struct DefiningData {
  std::vector<Int> a;  // rows of the row window, in [1, m]
  std::vector<Int> b;  // columns of the column window, in [1, n], increasing
  Int r = 0;
  bool operator==(const DefiningData&) const = default;
};

inline DefiningData defining_data(const Stream& s) {
  DefiningData D;
  const Int l = s.flow();
  Int lo = std::numeric_limits<Int>::max();
  for (Int k = 1; k <= l; ++k) {
    const Cell& c = s.cells[k - 1];
    D.a.push_back(c.i);
    Int sh = -floordiv(c.j - 1, s.n);
    D.b.push_back(c.j + sh * s.n);
    lo = std::min(lo, k + sh * l);
  }
  std::sort(D.b.begin(), D.b.end());
  D.r = -(lo - 1);
  return D;
}

// The stream of flow l with defining data (a, b, r).
inline Stream stream_from_data(Int m, Int n, Kind kind, const std::vector<Int>& a, const std::vector<Int>& b,
                               Int r) {
  Stream s{m, n, kind, {}};
  const Int l = static_cast<Int>(a.size());
  for (Int i = 1; i <= l; ++i) {
    Int t = mod1(i + r, l);
    Int q = (i - t + r) / l;
    s.cells.push_back({a[i - 1], b[t - 1] + q * n});
  }
  return s;
}

// Sorted window cells and the relation "y may follow x" inside one period.
namespace detail {

inline std::vector<Cell> support_cells(const AffineMatrix& A) {
  std::vector<Cell> v;
  for (const auto& [c, x] : A.window()) v.push_back(c);
  return v;
}

inline bool may_follow(Kind k, Int n, const Cell& first, const Cell& x, const Cell& y) {
  return precedes(k, x, y) && y.j - first.j < n;
}

// longest[x] for chains starting at index f, restricted to cells after f.
inline std::vector<Int> longest_from(const std::vector<Cell>& v, Kind k, Int n, std::size_t f) {
  std::vector<Int> L(v.size(), 0);
  for (std::size_t x = v.size(); x-- > f;) {
    if (x != f && !may_follow(k, n, v[f], v[f], v[x])) continue;
    Int best = 1;
    for (std::size_t y = x + 1; y < v.size(); ++y)
      if (L[y] && may_follow(k, n, v[f], v[x], v[y])) best = std::max(best, L[y] + 1);
    L[x] = best;
  }
  return L;
}

}  // namespace detail

inline bool is_stream(const Stream& s) {
  if (s.cells.empty()) return false;
  for (std::size_t k = 0; k < s.cells.size(); ++k) {
    const Cell& c = s.cells[k];
    if (c.i < 1 || c.i > s.m) return false;
    if (k > 0 && !precedes(s.kind, s.cells[k - 1], c)) return false;
  }
  return precedes(s.kind, s.cells.back(), s.at(s.flow() + 1));
}

inline bool stream_in_support(const AffineMatrix& A, const Stream& s) {
  if (!is_stream(s) || s.m != A.m() || s.n != A.n()) return false;
  for (const Cell& c : s.cells)
    if (A.entry(c) == 0) return false;
  return true;
}

// Maximal flow of a stream in supp(A).
inline Int width(const AffineMatrix& A) {
  if (A.empty()) throw Error(ErrorCode::EmptyMatrix, "width of the zero matrix");
  auto v = detail::support_cells(A);
  Int w = 0;
  for (std::size_t f = 0; f < v.size(); ++f) w = std::max(w, detail::longest_from(v, A.kind(), A.n(), f)[f]);
  return w;
}

// All streams of maximal flow.
inline std::vector<Stream> channels(const AffineMatrix& A) {
  if (A.empty()) throw Error(ErrorCode::EmptyMatrix, "channels of the zero matrix");
  auto v = detail::support_cells(A);
  const Int w = width(A);
  std::vector<Stream> out;
  std::vector<Cell> cur;
  for (std::size_t f = 0; f < v.size(); ++f) {
    auto L = detail::longest_from(v, A.kind(), A.n(), f);
    if (L[f] != w) continue;
    std::function<void(std::size_t)> dfs = [&](std::size_t x) {
      cur.push_back(v[x]);
      Int need = w - static_cast<Int>(cur.size());
      if (need == 0) {
        out.push_back(Stream{A.m(), A.n(), A.kind(), cur});
      } else {
        for (std::size_t y = x + 1; y < v.size(); ++y)
          if (L[y] == need && detail::may_follow(A.kind(), A.n(), v[f], v[x], v[y])) dfs(y);
      }
      cur.pop_back();
    };
    dfs(f);
  }
  return out;
}

// C1 >=_sw C2: every cell of C1 lies weakly southwest (<=_ne, resp. <=_Ne) of a cell of C2.
inline bool sw_geq(const Stream& C1, const Stream& C2) {
  const Int m = C1.m, n = C1.n;
  for (const Cell& c : C1.cells) {
    bool ok = false;
    for (const Cell& w : C2.cells) {
      if (C1.kind == Kind::general) {
        ok = ceildiv(c.j - w.j, n) <= floordiv(c.i - w.i, m);
      } else {
        Int di = c.i - w.i, dj = c.j - w.j;
        bool same = di % m == 0 && dj == (di / m) * n;
        ok = same || ceildiv(dj, n) <= ceildiv(di, m) - 1;
      }
      if (ok) break;
    }
    if (!ok) return false;
  }
  return true;
}

namespace detail {
inline Stream extreme_channel(const AffineMatrix& A, bool greatest) {
  auto cs = channels(A);
  auto geq = [&](const Stream& x, const Stream& y) { return greatest ? sw_geq(x, y) : sw_geq(y, x); };
  std::size_t best = 0;
  for (std::size_t k = 1; k < cs.size(); ++k)
    if (geq(cs[k], cs[best])) best = k;
  for (std::size_t k = 0; k < cs.size(); ++k)
    if (!geq(cs[best], cs[k])) throw Error(ErrorCode::InternalError, "channels have no extreme element");
  return cs[best];
}
}  // namespace detail

inline Stream southwest_channel(const AffineMatrix& A) { return detail::extreme_channel(A, true); }

inline Stream northeast_channel(const AffineMatrix& A) {
  if (A.kind() == Kind::dual) return detail::extreme_channel(A, false);
  Stream t = southwest_channel(A.transpose());
  Stream s{A.m(), A.n(), A.kind(), {}};
  for (const Cell& c : t.cells) s.cells.push_back(A.normalize({c.j, c.i}));
  std::sort(s.cells.begin(), s.cells.end());
  return s;
}

struct ProperNumbering {
  std::map<Cell, Int> values;  // on window support cells
  Int period = 1;

  Int at(const AffineMatrix& A, Cell c) const {
    Cell r = A.normalize(c);
    Int s = (c.i - r.i) / A.m();
    return values.at(r) + s * period;
  }
  bool operator==(const ProperNumbering&) const = default;
};

namespace detail {
// Largest s with tau^s(v) strictly before u in the chain order.
inline Int max_shift(Kind k, Int m, Int n, Cell v, Cell u) {
  if (k == Kind::general) return std::min(ceildiv(u.i - v.i, m) - 1, ceildiv(u.j - v.j, n) - 1);
  return std::min(floordiv(u.i - v.i, m), ceildiv(u.j - v.j, n) - 1);
}
}  // namespace detail

inline bool validate_proper(const AffineMatrix& A, const ProperNumbering& d) {
  if (d.period < 1) return false;
  auto v = detail::support_cells(A);
  if (d.values.size() != v.size()) return false;
  for (const Cell& c : v)
    if (!d.values.count(c)) return false;
  const Int l = d.period;
  for (const Cell& u : v) {
    bool witness = false;
    for (const Cell& w : v) {
      Int s = detail::max_shift(A.kind(), A.m(), A.n(), w, u);
      if (d.values.at(w) + s * l >= d.values.at(u)) return false;
      Int gap = d.values.at(u) - 1 - d.values.at(w);
      if (gap % l == 0 && gap / l <= s) witness = true;
    }
    if (!witness) return false;
  }
  return true;
}

// Minimal proper numbering agreeing with 0..l-1 along the row window of C.
inline ProperNumbering channel_numbering(const AffineMatrix& A, const Stream& C) {
  if (!stream_in_support(A, C) || C.kind != A.kind() || C.flow() != width(A))
    throw Error(ErrorCode::NotAChannel, "stream is not a channel of the matrix");
  auto v = detail::support_cells(A);
  const Int l = C.flow();
  const std::size_t N = v.size();
  const Int NEG = std::numeric_limits<Int>::min() / 4;
  std::map<Cell, std::size_t> idx;
  for (std::size_t k = 0; k < N; ++k) idx[v[k]] = k;
  std::vector<Int> d(N, NEG);
  for (Int k = 0; k < l; ++k) d[idx.at(C.cells[k])] = k;
  std::vector<Int> w(N * N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      w[a * N + b] = detail::max_shift(A.kind(), A.m(), A.n(), v[a], v[b]) * l + 1;
  bool changed = true;
  std::size_t pass = 0;
  while (changed) {
    if (++pass > N + 2) throw Error(ErrorCode::InternalError, "channel numbering does not converge");
    changed = false;
    for (std::size_t a = 0; a < N; ++a) {
      if (d[a] == NEG) continue;
      for (std::size_t b = 0; b < N; ++b)
        if (d[a] + w[a * N + b] > d[b]) {
          d[b] = d[a] + w[a * N + b];
          changed = true;
        }
    }
  }
  ProperNumbering P;
  P.period = l;
  for (std::size_t k = 0; k < N; ++k) P.values[v[k]] = d[k];
  for (Int k = 0; k < l; ++k)
    if (P.values.at(C.cells[k]) != k) throw Error(ErrorCode::InternalError, "numbering moved the channel");
  return P;
}

struct ZigZag {
  Int level = 0;
  std::vector<Cell> inner;  // southwest to northeast
  std::vector<Cell> outer;
  Cell back_post;
};

struct ZigZagFamily {
  Int period = 1;
  std::vector<ZigZag> levels;  // period consecutive levels from the least window value
};

inline std::vector<Cell> level_cells(const AffineMatrix& A, const ProperNumbering& d, Int k) {
  std::vector<Cell> out;
  for (const auto& [c, x] : d.values) {
    Int gap = k - x;
    if (floordiv(gap, d.period) * d.period == gap) out.push_back(A.shift(c, gap / d.period));
  }
  return out;
}

inline ZigZagFamily zigzags(const AffineMatrix& A, const ProperNumbering& d) {
  ZigZagFamily F;
  F.period = d.period;
  if (d.values.empty()) return F;
  Int lo = std::numeric_limits<Int>::max();
  for (const auto& [c, x] : d.values) lo = std::min(lo, x);
  for (Int k = lo; k < lo + d.period; ++k) {
    auto cells = level_cells(A, d, k);
    ZigZag z;
    z.level = k;
    for (const Cell& c : cells) {
      bool inner = true;
      if (A.kind() == Kind::general)
        for (const Cell& o : cells)
          if (!(o == c) && nw_weak(o, c)) inner = false;
      if (inner) z.inner.push_back(c);
    }
    std::sort(z.inner.begin(), z.inner.end(), [](const Cell& x, const Cell& y) {
      return x.i != y.i ? x.i > y.i : x.j < y.j;
    });
    for (std::size_t t = 0; t + 1 < z.inner.size(); ++t) z.outer.push_back({z.inner[t].i, z.inner[t + 1].j});
    z.back_post = {z.inner.back().i, z.inner.front().j};
    F.levels.push_back(z);
  }
  return F;
}

// Whether c lies on the lattice path of z shifted by tau^s.
inline bool on_path(const AffineMatrix& A, const ZigZag& z, Int s, Cell c) {
  const Int L = static_cast<Int>(z.inner.size());
  for (Int t = 0; t < L; ++t) {
    Cell p = A.shift(z.inner[t], s);
    Int jnext = t + 1 < L ? A.shift(z.inner[t + 1], s).j : std::numeric_limits<Int>::max();
    Int iprev = t > 0 ? A.shift(z.inner[t - 1], s).i : std::numeric_limits<Int>::max();
    if (c.i == p.i && c.j >= p.j && c.j <= jnext) return true;
    if (c.j == p.j && c.i >= p.i && c.i <= iprev) return true;
  }
  return false;
}

}  // namespace affrsk
