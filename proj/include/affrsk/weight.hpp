#pragma once

#include <vector>

#include "affrsk/matrix.hpp"
#include "affrsk/tableau.hpp"

namespace affrsk {

// Sum of c_k eps_k + delta * delta. Compared modulo eps_1 + ... + eps_p.
struct Weight {
  std::vector<Int> c;
  Int delta = 0;
  bool classical_only = false;

  explicit Weight(std::size_t p = 0) : c(p, 0) {}

  Weight& operator+=(const Weight& o) {
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
    delta += o.delta;
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t k = 0; k < c.size(); ++k) c[k] -= o.c[k];
    delta -= o.delta;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }

  bool operator==(const Weight& o) const {
    if (c.size() != o.c.size()) return false;
    if (!classical_only && !o.classical_only && delta != o.delta) return false;
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
      if (c[k] - c.back() != o.c[k] - o.c.back()) return false;
    return true;
  }
};

inline Weight simple_root(std::size_t p, Int i) {
  Weight a(p);
  if (p < 2) return a;
  if (i == 0) {
    a.c[p - 1] += 1;
    a.c[0] -= 1;
    a.delta = 1;
  } else {
    a.c[i - 1] += 1;
    a.c[i] -= 1;
  }
  return a;
}

inline Weight delta_weight(std::size_t p, Int k) {
  Weight w(p);
  w.delta = k;
  return w;
}

// <wt, h_i>
inline Int pairing(const Weight& w, Int i) {
  const std::size_t p = w.c.size();
  if (i == 0) return w.c[p - 1] - w.c[0];
  return w.c[i - 1] - w.c[i];
}

// wt^0 of a matrix: window cell (i, qn+s) contributes eps_i + q delta per unit.
inline Weight matrix_weight(const AffineMatrix& A) {
  Weight w(A.m());
  for (const auto& [c, v] : A.window()) {
    Int s = mod1(c.j, A.n());
    w.c[c.i - 1] += v;
    w.delta += v * ((c.j - s) / A.n());
  }
  return w;
}

// Box k = qn + r has weight eps_r - q delta.
inline Weight box_weight(Int k, Int n) {
  Weight w(n);
  Int r = mod1(k, n);
  w.c[r - 1] = 1;
  w.delta = -((k - r) / n);
  return w;
}

inline Weight tableau_weight(const Tableau& T, Int n) {
  Weight w(n);
  for (const auto& col : T.cols)
    for (Int x : col) w += box_weight(x, n);
  return w;
}

}  // namespace affrsk
