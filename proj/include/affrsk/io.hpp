#pragma once

#include <string>
#include <vector>

#include "affrsk/crystal.hpp"
#include "affrsk/matrix.hpp"
#include "affrsk/rsk.hpp"
#include "affrsk/tableau.hpp"
#include "json.hpp"

namespace affrsk {

using json = nlohmann::ordered_json;

// Offset into text -> (line, column), both from 1.
inline std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is one past the offending character
    auto [l, c] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(l) + " column " + std::to_string(c) + ": malformed JSON");
  }
}

inline json to_json(const AffineMatrix& A) {
  json e = json::array();
  for (const auto& [c, v] : A.window()) e.push_back({c.i, c.j, v});
  return json{{"kind", kind_name(A.kind())}, {"m", A.m()}, {"n", A.n()}, {"entries", e}};
}

inline AffineMatrix matrix_from_json(const json& j) {
  auto fail = [](const std::string& w) { throw Error(ErrorCode::ParseError, w); };
  if (!j.is_object()) fail("matrix must be a JSON object");
  for (const char* k : {"kind", "m", "n", "entries"})
    if (!j.contains(k)) fail(std::string("missing field \"") + k + "\"");
  const auto& kj = j["kind"];
  if (!kj.is_string() || (kj != "general" && kj != "dual")) fail("kind must be \"general\" or \"dual\"");
  if (!j["m"].is_number_integer() || !j["n"].is_number_integer()) fail("m and n must be integers");
  if (!j["entries"].is_array()) fail("entries must be an array");
  std::vector<std::array<Int, 3>> es;
  for (const auto& t : j["entries"]) {
    if (!t.is_array() || t.size() != 3) fail("each entry must be [i, j, v]");
    for (const auto& x : t)
      if (!x.is_number_integer()) fail("entry components must be integers");
    es.push_back({t[0].get<Int>(), t[1].get<Int>(), t[2].get<Int>()});
  }
  Kind kind = kj == "general" ? Kind::general : Kind::dual;
  return AffineMatrix::build(j["m"].get<Int>(), j["n"].get<Int>(), kind, es);
}

inline AffineMatrix parse_matrix(const std::string& text) { return matrix_from_json(parse_json(text)); }

// Column tableau; alphabet > 0 marks a bounded tableau, period > 0 an extremal element.
inline json tableau_json(const Tableau& T, Int alphabet, Int period) {
  json j{{"shape", shape(T)}, {"columns", T.cols}};
  if (alphabet > 0) j["alphabet"] = alphabet;
  if (period > 0) j["period"] = period;
  return j;
}

// Row tableau, rows top to bottom.
inline json row_tableau_json(const Tableau& R, Int alphabet) {
  std::vector<Int> sh;
  for (const auto& r : R.cols) sh.push_back(static_cast<Int>(r.size()));
  return json{{"shape", sh}, {"rows", R.cols}, {"alphabet", alphabet}};
}

inline Tableau tableau_from_json(const json& j) {
  Tableau T;
  const char* key = j.contains("columns") ? "columns" : "rows";
  if (!j.contains(key) || !j[key].is_array()) throw Error(ErrorCode::ParseError, "tableau needs columns or rows");
  for (const auto& c : j[key]) T.cols.push_back(c.get<Column>());
  return T;
}

inline json rsk_json(const AffineMatrix& A) {
  if (A.empty()) return json{{"P0", json::array()}, {"Q", json::array()}};
  auto t = kappa0(A);
  auto p = pair_from_triple(t, A.m(), A.n(), A.kind());
  json P0 = A.kind() == Kind::general ? tableau_json(p.P0, A.m(), 0) : row_tableau_json(p.P0, A.m());
  json tr{{"P0", P0}, {"Q0", tableau_json(t.Q0, A.n(), 0)}, {"rho", t.rho}};
  return json{{"P0", P0}, {"Q", tableau_json(p.Q, 0, A.n())}, {"triple", tr}};
}

}  // namespace affrsk
