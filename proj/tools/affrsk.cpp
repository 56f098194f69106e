#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "affrsk/affrsk.hpp"

using namespace affrsk;

namespace {

std::size_t cell_cap() {
  if (const char* s = std::getenv("AFFRSK_MAX_CELLS")) {
    try {
      return static_cast<std::size_t>(std::stoull(s));
    } catch (...) {
      throw Error(ErrorCode::ParseError, "AFFRSK_MAX_CELLS is not a number");
    }
  }
  return 10000;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AffineMatrix load(const std::string& path) {
  AffineMatrix A = parse_matrix(slurp(path));
  if (A.support_size() > cell_cap())
    throw Error(ErrorCode::InvalidValue, "window holds " + std::to_string(A.support_size()) +
                                             " cells, above the limit " + std::to_string(cell_cap()));
  return A;
}

AffineMatrix load_kind(const std::string& path, Kind want) {
  AffineMatrix A = load(path);
  if (A.kind() != want)
    throw Error(ErrorCode::InvalidValue, std::string("expected a ") + kind_name(want) + " matrix");
  return A;
}

int print_report(const Report& R) {
  std::cout << "suite " << R.name << ": " << (R.ok() ? "pass" : "FAIL") << " instances=" << R.instances
            << " checks=" << R.checks << " failures=" << R.failures << '\n';
  for (const auto& s : R.notes) std::cout << "  " << s << '\n';
  return R.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine RSK and its bicrystal structure"};
  app.require_subcommand(1);

  std::string file;
  auto* rsk = app.add_subcommand("rsk", "kappa of a general matrix");
  rsk->add_option("file", file, "matrix JSON")->required();
  auto* drsk = app.add_subcommand("dual-rsk", "kappa' of a binary matrix");
  drsk->add_option("file", file, "matrix JSON")->required();

  std::string side = "row", op = "f";
  Int index = 0;
  auto* cry = app.add_subcommand("crystal", "apply one Kashiwara operator to a matrix");
  cry->add_option("--side", side)->check(CLI::IsMember({"row", "col"}))->required();
  cry->add_option("--op", op)->check(CLI::IsMember({"e", "f"}))->required();
  cry->add_option("--index", index)->required();
  cry->add_option("file", file)->required();

  std::string numbering;
  bool show_zz = false;
  auto* ins = app.add_subcommand("inspect", "grid, channel numbering and zig-zags");
  ins->add_option("file", file)->required();
  ins->add_option("--numbering", numbering)->check(CLI::IsMember({"sw", "ne"}));
  ins->add_flag("--zigzags", show_zz);

  std::string suite, period = "2,2", kind_s = "general";
  Int max_content = 3;
  long count = 100;
  std::uint64_t seed = 1;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite)
      ->check(CLI::IsMember({"bijection", "dominance-image", "crystal-axioms", "crystal", "bicrystal", "kappa-commutation",
                             "dual", "standardization", "two-column-offset", "descents"}))
      ->required();
  ver->add_option("--period", period);
  ver->add_option("--max-content", max_content);
  ver->add_option("--count", count);
  ver->add_option("--seed", seed);
  ver->add_option("--kind", kind_s)->check(CLI::IsMember({"general", "dual"}));

  auto* rt = app.add_subcommand("roundtrip", "parse and re-emit a matrix");
  rt->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (rsk->parsed() || drsk->parsed()) {
      auto A = load_kind(file, rsk->parsed() ? Kind::general : Kind::dual);
      std::cout << rsk_json(A).dump() << '\n';
    } else if (cry->parsed()) {
      auto A = load(file);
      CrystalIndex idx{side == "row" ? Side::row : Side::col, index};
      auto B = op == "f" ? matrix_f(A, idx) : matrix_e(A, idx);
      std::cout << (B ? to_json(*B).dump() : std::string("null")) << '\n';
    } else if (ins->parsed()) {
      auto A = load(file);
      std::cout << render(A);
      if (!A.empty() && (!numbering.empty() || show_zz)) {
        Stream C = numbering == "ne" ? northeast_channel(A) : southwest_channel(A);
        auto d = channel_numbering(A, C);
        std::cout << "width " << d.period << "\nchannel";
        for (const Cell& c : C.cells) std::cout << " (" << c.i << ',' << c.j << ')';
        std::cout << '\n';
        if (!numbering.empty())
          for (const auto& [c, v] : d.values) std::cout << '(' << c.i << ',' << c.j << ") " << v << '\n';
        if (show_zz) std::cout << render_zigzags(zigzags(A, d));
      }
    } else if (ver->parsed()) {
      Int m = 2, n = 2;
      char comma = 0;
      std::istringstream ps(period);
      if (!(ps >> m >> comma >> n) || comma != ',') throw Error(ErrorCode::ParseError, "--period expects m,n");
      Kind kind = kind_s == "dual" ? Kind::dual : Kind::general;
      Report R;
      if (suite == "bijection")
        R = suite_bijection(m, n, kind, max_content);
      else if (suite == "dominance-image")
        R = suite_dominance_image(m, n, kind, max_content);
      else if (suite == "crystal-axioms" || suite == "crystal")
        R = suite_crystal_axioms(count, seed);
      else if (suite == "bicrystal")
        R = suite_bicrystal(count, seed, kind);
      else if (suite == "kappa-commutation")
        R = suite_kappa_commutation(count, seed, Kind::general);
      else if (suite == "dual")
        R = suite_kappa_commutation(count, seed, Kind::dual);
      else if (suite == "standardization")
        R = suite_standardization(count, seed);
      else if (suite == "two-column-offset")
        R = suite_two_column(count, seed);
      else
        R = suite_descents(m, 1);
      return print_report(R);
    } else if (rt->parsed()) {
      auto A = load(file);
      auto text = to_json(A).dump();
      if (!(parse_matrix(text) == A)) throw Error(ErrorCode::InternalError, "round trip changed the matrix");
      std::cout << text << '\n';
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
