#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "affrsk/matrix.hpp"
#include "affrsk/numbering.hpp"
#include "affrsk/tableau.hpp"

namespace affrsk {

// Three row periods (rows 1-m .. 2m) of A. Bars sit left of columns = 1 mod n, rules above rows = 1 mod m.
// labels, when given, replace the entries of support cells (e.g. a numbering).
inline std::string render(const AffineMatrix& A, const ProperNumbering* labels = nullptr) {
  const Int m = A.m(), n = A.n();
  Int lo = 1, hi = n;
  for (const auto& [c, v] : A.window()) {
    lo = std::min(lo, c.j);
    hi = std::max(hi, c.j);
  }
  lo -= n;
  hi += n;
  auto text = [&](Cell c) -> std::string {
    Int v = A.entry(c);
    if (!v) return ".";
    return std::to_string(labels ? labels->at(A, c) : v);
  };
  std::size_t w = 1;
  for (Int i = 1 - m; i <= 2 * m; ++i)
    for (Int j = lo; j <= hi; ++j) w = std::max(w, text({i, j}).size());
  std::ostringstream os;
  os << "grid " << kind_name(A.kind()) << ' ' << m << ' ' << n << ' ' << lo << ' ' << hi << '\n';
  std::size_t width = 0;
  for (Int i = 1 - m; i <= 2 * m; ++i) {
    std::ostringstream line;
    line.width(4);
    line << i << ":";
    for (Int j = lo; j <= hi; ++j) {
      if (mod1(j, n) == 1) line << " |";
      std::string t = text({i, j});
      line << ' ' << std::string(w - t.size(), ' ') << t;
    }
    std::string s = line.str();
    width = std::max(width, s.size());
    if (mod1(i, m) == 1) os << std::string(s.size(), '-') << '\n';
    os << s << '\n';
  }
  return os.str();
}

// Inverse of render for entry grids.
inline AffineMatrix parse_render(const std::string& text) {
  std::istringstream is(text);
  std::string tag, kind;
  Int m = 0, n = 0, lo = 0, hi = 0;
  is >> tag >> kind >> m >> n >> lo >> hi;
  if (tag != "grid") throw Error(ErrorCode::ParseError, "not a rendered grid");
  AffineMatrix A(m, n, kind == "dual" ? Kind::dual : Kind::general);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '-') continue;
    auto colon = line.find(':');
    Int i = std::stoll(line.substr(0, colon));
    std::istringstream ls(line.substr(colon + 1));
    std::string tok;
    Int j = lo;
    while (ls >> tok) {
      if (tok == "|") continue;
      if (tok != "." && i >= 1 && i <= m) A.add_inplace({i, j}, std::stoll(tok));
      ++j;
    }
  }
  return A;
}

// Rows of a column tableau, top to bottom.
inline std::string render_tableau(const Tableau& T) {
  std::size_t w = 1, h = 0;
  for (const auto& c : T.cols) {
    h = std::max(h, c.size());
    for (Int x : c) w = std::max(w, std::to_string(x).size());
  }
  std::ostringstream os;
  for (std::size_t k = 0; k < h; ++k) {
    for (const auto& c : T.cols) {
      if (k >= c.size()) break;
      std::string t = std::to_string(c[k]);
      os << ' ' << std::string(w - t.size(), ' ') << t;
    }
    os << '\n';
  }
  return os.str();
}

inline std::string render_zigzags(const ZigZagFamily& F) {
  std::ostringstream os;
  auto cell = [&](Cell c) { os << '(' << c.i << ',' << c.j << ')'; };
  for (const auto& z : F.levels) {
    os << "level " << z.level << "\n  inner";
    for (const Cell& c : z.inner) os << ' ', cell(c);
    os << "\n  outer";
    for (const Cell& c : z.outer) os << ' ', cell(c);
    os << "\n  back-post ";
    cell(z.back_post);
    os << '\n';
  }
  return os.str();
}

}  // namespace affrsk
