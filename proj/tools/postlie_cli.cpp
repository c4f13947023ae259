#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "postlie/checks.hpp"
#include "postlie/envelope.hpp"
#include "postlie/operad.hpp"
#include "postlie/render.hpp"
#include "postlie/series.hpp"
#include "postlie/struct_algebra.hpp"
#include "postlie/tree.hpp"
#include "postlie/uea.hpp"

namespace {

using namespace postlie;
using Json = nlohmann::ordered_json;

// exit 2: malformed input (files, words, expressions)
struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// exit 1: precondition or verification failure
struct OpFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int degree = 6;
  std::vector<std::string> alphabet{"x", "y"};
  std::string format = "ascii";
  std::string fixtures = "fixtures";
};

Config load_config() {
  Config cfg;
  const char* path = std::getenv("POSTLIE_CONFIG");
  if (!path) return cfg;
  std::ifstream f(path);
  if (!f) throw ParseFailure(std::string("cannot read config ") + path);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ParseFailure(std::string("config: ") + e.what());
  }
  if (j.contains("degree")) cfg.degree = j["degree"].get<int>();
  if (j.contains("alphabet")) cfg.alphabet = j["alphabet"].get<std::vector<std::string>>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
  if (j.contains("fixtures")) cfg.fixtures = j["fixtures"].get<std::string>();
  if (cfg.degree < 1) throw ParseFailure("config: degree must be >= 1");
  if (cfg.alphabet.size() < 2) throw ParseFailure("config: alphabet needs two symbols");
  return cfg;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseFailure("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

PlanarTree load_tree(const std::string& path) {
  try {
    return tree_from_json(slurp(path));
  } catch (const std::invalid_argument& e) {
    throw ParseFailure(path + ": " + e.what());
  }
}

OperadElement load_operad(const std::string& path) {
  try {
    return operad_from_json(slurp(path));
  } catch (const std::invalid_argument& e) {
    throw ParseFailure(path + ": " + e.what());
  }
}

EnvElement load_env(const std::string& path) {
  try {
    return env_from_json(slurp(path));
  } catch (const std::invalid_argument& e) {
    throw ParseFailure(path + ": " + e.what());
  }
}

StructAlgebra load_algebra(const std::string& path) {
  try {
    return algebra_from_json(slurp(path));
  } catch (const std::invalid_argument& e) {
    throw ParseFailure(path + ": " + e.what());
  }
}

void print_operad(const Config& cfg, const OperadElement& x) {
  if (cfg.format == "json")
    std::printf("%s\n", operad_json(x).c_str());
  else if (cfg.format == "latex")
    std::printf("%s\n", operad_latex(x).c_str());
  else
    std::printf("%s", operad_ascii(x).c_str());
}

void print_env(const Config& cfg, const EnvElement& x) {
  if (cfg.format == "json")
    std::printf("%s\n", env_json(x).c_str());
  else if (cfg.format == "latex")
    std::printf("%s\n", env_latex(x).c_str());
  else
    std::printf("%s", env_ascii(x).c_str());
}

std::string alg_elem_str(const StructAlgebra& A, const AlgElement& x) {
  std::string out;
  for (int i = 0; i < A.dim; ++i) {
    if (x[i] == 0) continue;
    if (out.empty())
      out += x[i] < 0 ? "-" : "";
    else
      out += x[i] < 0 ? " - " : " + ";
    Rational m = x[i] < 0 ? Rational(-x[i]) : x[i];
    if (m != 1) out += rational_str(m) + "*";
    out += A.basis[i];
  }
  return out.empty() ? "0" : out;
}

void print_alg_elem(const Config& cfg, const StructAlgebra& A, const AlgElement& x) {
  if (cfg.format == "json") {
    Json terms = Json::array();
    for (int i = 0; i < A.dim; ++i)
      if (x[i] != 0) terms.push_back({{"coef", rational_str(x[i])}, {"basis", A.basis[i]}});
    std::printf("%s\n", Json{{"terms", terms}}.dump(2).c_str());
  } else {
    std::printf("%s\n", alg_elem_str(A, x).c_str());
  }
}

std::string word_letters_str(const StructAlgebra& A, const std::vector<int>& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ".";
    out += A.basis[w[i]];
  }
  return out;
}

void print_u_elem(const Config& cfg, const StructAlgebra& A, const UElement& x) {
  if (cfg.format == "json") {
    Json terms = Json::array();
    for (const auto& [w, c] : x) {
      Json word = Json::array();
      for (int i : w) word.push_back(A.basis[i]);
      terms.push_back({{"coef", rational_str(c)}, {"word", word}});
    }
    std::printf("%s\n", Json{{"terms", terms}}.dump(2).c_str());
  } else {
    if (x.empty()) {
      std::printf("0\n");
      return;
    }
    std::string out;
    for (const auto& [w, c] : x) {
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      Rational m = c < 0 ? Rational(-c) : c;
      if (m != 1 || w.empty()) out += rational_str(m);
      if (m != 1 && !w.empty()) out += "*";
      if (!w.empty()) out += word_letters_str(A, w);
    }
    std::printf("%s\n", out.c_str());
  }
}

std::string wordsum_text(const WordSum& ws) {
  std::string out;
  for (const auto& [w, c] : ws) {
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    Rational m = c < 0 ? Rational(-c) : c;
    if (m != 1) out += rational_str(m) + "*";
    out += word_str(w);
  }
  return out.empty() ? "0" : out;
}

PlanarTree single_tree_of(const EnvElement& x, const std::string& what) {
  if (x.terms.size() != 1) throw OpFailure(what + " must be a single-tree element");
  const auto& [f, c] = *x.terms.begin();
  if (f.size() != 1 || c != 1) throw OpFailure(what + " must be a single-tree element");
  return f[0];
}

// linear combination over the basis names: "e", "e+f", "2*e-1/3*h"
AlgElement parse_alg_expr(const StructAlgebra& A, const std::string& expr) {
  AlgElement out = alg_zero(A);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < expr.size() && expr[pos] == ' ') ++pos;
  };
  bool first = true;
  while (skip_ws(), pos < expr.size()) {
    int sign = 1;
    if (expr[pos] == '+' || expr[pos] == '-') {
      sign = expr[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseFailure("expected '+' or '-' in '" + expr + "'");
    }
    first = false;
    skip_ws();
    size_t start = pos;
    while (pos < expr.size() && expr[pos] != '+' && expr[pos] != '-') ++pos;
    std::string term = expr.substr(start, pos - start);
    while (!term.empty() && term.back() == ' ') term.pop_back();
    if (term.empty()) throw ParseFailure("empty term in '" + expr + "'");
    Rational coef = sign;
    std::string name = term;
    if (size_t star = term.find('*'); star != std::string::npos) {
      try {
        coef = sign * parse_rational(term.substr(0, star));
      } catch (const std::invalid_argument& e) {
        throw ParseFailure(std::string(e.what()) + " in '" + expr + "'");
      }
      name = term.substr(star + 1);
    }
    auto it = std::find(A.basis.begin(), A.basis.end(), name);
    if (it == A.basis.end()) throw ParseFailure("unknown basis name '" + name + "'");
    out[it - A.basis.begin()] += coef;
  }
  return out;
}

EnvElement generator(const Config& cfg, int i) {
  return env_tree(leaf_sym(cfg.alphabet[i]));
}

void print_env_series(const Config& cfg, const Series<FreeCarrier>& s) {
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& [k, e] : s.comp)
      arr.push_back({{"degree", k}, {"element", Json::parse(env_json(e))}});
    std::printf("%s\n", Json{{"series", arr}}.dump(2).c_str());
    return;
  }
  for (const auto& [k, e] : s.comp) {
    std::printf("degree %d:\n", k);
    if (cfg.format == "latex")
      std::printf("  %s\n", env_latex(e).c_str());
    else
      std::printf("%s", env_ascii(e).c_str());
  }
}

void print_u_series(const Config& cfg, const StructAlgebra& A, const Series<AlgCarrier>& s) {
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& [k, e] : s.comp) {
      Json terms = Json::array();
      for (const auto& [w, c] : e) {
        Json word = Json::array();
        for (int i : w) word.push_back(A.basis[i]);
        terms.push_back({{"coef", rational_str(c)}, {"word", word}});
      }
      arr.push_back({{"degree", k}, {"element", {{"terms", terms}}}});
    }
    std::printf("%s\n", Json{{"series", arr}}.dump(2).c_str());
    return;
  }
  Config flat = cfg;
  for (const auto& [k, e] : s.comp) {
    std::printf("degree %d: ", k);
    print_u_elem(flat, A, e);
  }
}

int cmd_check_axioms(const Config& cfg, int maxv, unsigned seed) {
  std::printf("seed %u\n", seed);
  long units = 0, assoc = 0;
  for (int v = 1; v <= maxv; ++v)
    for (int k = 1; k <= v; ++k)
      for (const auto& t : enumerate_partially_labeled(v, k)) {
        OperadElement x = op_term(t);
        if (!(compose_pt(op_unit(), 1, x) == x))
          throw OpFailure("left unit law fails at " + tree_str(t));
        for (int i = 1; i <= k; ++i)
          if (!(compose_pt(x, i, op_unit()) == x))
            throw OpFailure("right unit law fails at " + tree_str(t));
        ++units;
      }
  std::vector<PlanarTree> pool;
  int poolv = std::min(maxv, 3);
  for (int v = 1; v <= poolv; ++v)
    for (int k = 1; k <= v; ++k)
      for (const auto& t : enumerate_partially_labeled(v, k)) pool.push_back(t);
  for (const auto& xt : pool)
    for (const auto& yt : pool)
      for (const auto& zt : pool) {
        OperadElement x = op_term(xt), y = op_term(yt), z = op_term(zt);
        for (int i = 1; i <= x.arity; ++i)
          for (int j = 1; j <= y.arity; ++j) {
            if (!(compose_pt(x, i, compose_pt(y, j, z)) ==
                  compose_pt(compose_pt(x, i, y), i - 1 + j, z)))
              throw OpFailure("associativity fails at " + tree_str(xt) + ", " +
                              tree_str(yt) + ", " + tree_str(zt));
            ++assoc;
          }
      }
  std::printf("unit laws: %ld trees up to %d vertices\n", units, maxv);
  std::printf("associativity: %ld exhaustive instances up to %d vertices\n", assoc,
              poolv);
  return 0;
}

int cmd_magnus_verify(const Config& cfg, const std::string& name, int deg) {
  bool holds = false;
  if (name == "compbch1") {
    const FreeCarrier c;
    auto x = series_from(c, generator(cfg, 0), 1);
    auto y = series_from(c, generator(cfg, 1), 1);
    auto acted = series_tri(c, exp_wrt(c, Prod::Cat, x, deg), y, deg);
    holds = sharp(c, x, y, deg) == bch(c, Bracket::Lie, x, acted, deg);
  } else if (name == "compbch2") {
    const FreeCarrier c;
    auto x = series_from(c, generator(cfg, 0), 1);
    auto y = series_from(c, generator(cfg, 1), 1);
    auto cx = chi(c, x, deg);
    auto inner = bch(c, Bracket::Lie, x, exp_nabla(c, cx, y, deg), deg);
    holds = bch(c, Bracket::Double, cx, chi(c, y, deg), deg) == chi(c, inner, deg);
  } else if (name == "compbch3") {
    const FreeCarrier c{true};
    auto x = series_from(c, c.norm(generator(cfg, 0)), 1);
    auto y = series_from(c, c.norm(generator(cfg, 1)), 1);
    auto cx = chi(c, x, deg);
    auto lhs = exp_rt(c, bch(c, Bracket::Double, cx, chi(c, y, deg), deg), deg);
    auto rhs = series_from(c, c.unit(), 0);
    series_accum(c, rhs, x);
    series_accum(c, rhs, exp_nabla(c, cx, y, deg));
    holds = lhs == rhs;
  } else if (name == "bracexp") {
    const FreeCarrier c;
    const EnvElement a = generator(cfg, 0);
    const EnvElement b = generator(cfg, 1);
    auto x = series_from(c, a, 1);
    auto lhs = exp_nabla(c, chi(c, x, deg), series_from(c, b, 1), deg);
    auto rhs = series_from(c, b, 1);
    EnvElement word = env_unit();
    for (int n = 1; n + 1 <= deg; ++n) {
      word = concat(word, a);
      series_accum(c, rhs, series_from(c, brace(word, b), n + 1),
                   Rational(1) / factorial(n));
    }
    holds = lhs == rhs;
  } else if (name == "ode") {
    const FreeCarrier c;
    holds = series_is_zero(c, flow_residual(c, generator(cfg, 0), deg));
  } else {
    throw ParseFailure("unknown identity '" + name + "'");
  }
  if (cfg.format == "json")
    std::printf("%s\n",
                Json{{"identity", name}, {"degree", deg}, {"holds", holds}}.dump().c_str());
  else
    std::printf("identity %s %s through degree %d\n", name.c_str(),
                holds ? "holds" : "FAILS", deg);
  return holds ? 0 : 1;
}

int cmd_verify(const Config& cfg, const std::string& fixtures, const std::string& filter,
               unsigned seed) {
  std::printf("seed %u, fixtures %s\n", seed, fixtures.c_str());
  auto results = run_acceptance(fixtures, filter, seed);
  if (results.empty()) throw ParseFailure("no checks matched filter '" + filter + "'");
  int failed = 0;
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results) {
      arr.push_back({{"name", r.name}, {"passed", r.passed}, {"ms", r.ms}, {"detail", r.detail}});
      if (!r.passed) ++failed;
    }
    std::printf("%s\n", arr.dump(2).c_str());
  } else {
    for (const auto& r : results) {
      std::printf("[%s] %-32s (%8.1f ms)  %s\n", r.passed ? "pass" : "FAIL",
                  r.name.c_str(), r.ms, r.detail.c_str());
      if (!r.passed) ++failed;
    }
    std::printf("%zu checks, %d failed\n", results.size(), failed);
  }
  return failed == 0 ? 0 : 1;
}

int cmd_enumerate(const Config& cfg, int maxv) {
  Json arr = Json::array();
  for (int n = 1; n <= maxv; ++n) {
    size_t shapes = enumerate_shapes(n).size();
    size_t trees = enumerate_trees(n, cfg.alphabet).size();
    size_t forests = enumerate_forests(n, cfg.alphabet).size();
    if (cfg.format == "json")
      arr.push_back({{"vertices", n},
                     {"shapes", shapes},
                     {"trees", trees},
                     {"forests", forests}});
    else
      std::printf("%d vertices: %zu shapes, %zu trees, %zu forests (%zu symbols)\n", n,
                  shapes, trees, forests, cfg.alphabet.size());
  }
  if (cfg.format == "json") std::printf("%s\n", arr.dump(2).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  int exit_code = 0;
  try {
    cfg = load_config();
  } catch (const ParseFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  CLI::App app{"exact calculator for planar-tree operads, braces and Magnus expansions"};
  app.require_subcommand(1);
  int degree = cfg.degree;
  unsigned seed = 20240601;
  app.add_option("--degree", degree, "truncation degree")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "latex", "ascii"}));
  app.add_option("--seed", seed, "seed for sampled sweeps");

  // operad
  auto* operad = app.add_subcommand("operad", "planar-tree operad operations");
  operad->require_subcommand(1);
  auto* compose = operad->add_subcommand("compose", "partial composition of two elements");
  bool use_pt = false, use_lw = false;
  int slot = 1;
  std::string file_t, file_r;
  compose->add_flag("--pt", use_pt, "unsigned composition");
  compose->add_flag("--lw", use_lw, "signed composition with contraction");
  compose->add_option("-i,--slot", slot, "slot index (1-based)")->required();
  compose->add_option("T", file_t, "left element file")->required();
  compose->add_option("R", file_r, "right element file")->required();
  auto* check_ax = operad->add_subcommand("check-axioms", "operad axiom sweep");
  int maxv = 4;
  check_ax->add_option("--max-vertices", maxv, "vertex bound")->check(CLI::PositiveNumber);
  auto* oph = operad->add_subcommand("h", "evaluate a bracket/grafting word");
  std::string word_in;
  oph->add_option("word", word_in, "word like t(1,b(2,3))")->required();
  auto* opg = operad->add_subcommand("g", "decompose a basis tree into words");
  std::string g_file;
  opg->add_option("tree", g_file, "tree file")->required();

  // alg
  auto* alg = app.add_subcommand("alg", "enveloping-algebra operations");
  alg->require_subcommand(1);
  std::string alg_x, alg_y;
  auto* graft = alg->add_subcommand("graft", "leftmost grafting of one tree onto another");
  graft->add_option("x", alg_x)->required();
  graft->add_option("y", alg_y)->required();
  auto* tri = alg->add_subcommand("triangle", "D-product of two elements");
  tri->add_option("x", alg_x)->required();
  tri->add_option("y", alg_y)->required();
  auto* gl = alg->add_subcommand("gl", "Grossman-Larson product");
  gl->add_option("x", alg_x)->required();
  gl->add_option("y", alg_y)->required();
  auto* brc = alg->add_subcommand("brace", "brace with n slot elements and one target");
  int brace_n = 1;
  std::vector<std::string> brace_files;
  brc->add_option("-n", brace_n, "number of slot elements")->required();
  brc->add_option("files", brace_files, "slot files then the target file")->required();
  auto* aphi = alg->add_subcommand("phi", "word-to-envelope isomorphism");
  std::vector<std::string> phi_files;
  aphi->add_option("word", phi_files, "primitive element files")->required();
  auto* prim = alg->add_subcommand("primitive?", "test primitivity");
  prim->add_option("x", alg_x)->required();

  // algdef
  auto* algdef = app.add_subcommand("algdef", "structure-constant algebras");
  algdef->require_subcommand(1);
  auto* avalid = algdef->add_subcommand("validate", "check the defining axioms");
  std::string adef_file;
  avalid->add_option("file", adef_file)->required();
  auto* aeval = algdef->add_subcommand("eval", "evaluate a primitive free element");
  std::string aeval_elem;
  std::vector<std::string> assigns;
  aeval->add_option("file", adef_file)->required();
  aeval->add_option("element", aeval_elem, "primitive element file")->required();
  aeval->add_option("--assign", assigns, "generator assignment g=expr");

  // magnus
  auto* magnus = app.add_subcommand("magnus", "graded series layer");
  magnus->require_subcommand(1);
  auto* mchi = magnus->add_subcommand("chi", "product-switching Magnus expansion");
  std::string carrier = "free";
  mchi->add_option("--carrier", carrier, "free, prelie, or an algebra file");
  auto* mbch = magnus->add_subcommand("bch", "Baker-Campbell-Hausdorff series");
  std::string structure = "lie";
  mbch->add_option("--structure", structure)->check(CLI::IsMember({"lie", "double"}));
  magnus->add_subcommand("sharp", "composition product of two exponents");
  auto* mverify = magnus->add_subcommand("verify", "check a named identity");
  std::string identity;
  mverify->add_option("identity", identity,
                      "compbch1, compbch2, compbch3, bracexp, or ode")
      ->required();

  // verify / enumerate
  auto* verify = app.add_subcommand("verify", "run the fixture acceptance suite");
  std::string fixtures = cfg.fixtures, filter;
  verify->add_option("--fixtures", fixtures, "fixture directory");
  verify->add_option("--filter", filter, "substring filter on check names");
  auto* enumerate = app.add_subcommand("enumerate", "count shapes, trees and forests");
  int enum_v = 4;
  enumerate->add_option("--vertices", enum_v, "vertex bound")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);

    if (compose->parsed()) {
      if (use_pt == use_lw) throw ParseFailure("choose exactly one of --pt, --lw");
      OperadElement T = load_operad(file_t), R = load_operad(file_r);
      OperadElement out;
      try {
        out = use_pt ? compose_pt(T, slot, R) : compose_lw(T, slot, R);
      } catch (const std::exception& e) {
        throw OpFailure(e.what());
      }
      print_operad(cfg, out);
    } else if (check_ax->parsed()) {
      exit_code = cmd_check_axioms(cfg, maxv, seed);
    } else if (oph->parsed()) {
      PostLieWord w;
      try {
        w = parse_word(word_in);
      } catch (const std::invalid_argument& e) {
        throw ParseFailure(e.what());
      }
      try {
        print_operad(cfg, from_postlie_word(w));
      } catch (const std::exception& e) {
        throw OpFailure(e.what());
      }
    } else if (opg->parsed()) {
      PlanarTree t = load_tree(g_file);
      WordSum ws;
      try {
        ws = to_postlie_word(t);
      } catch (const std::exception& e) {
        throw OpFailure(e.what());
      }
      if (cfg.format == "json") {
        Json terms = Json::array();
        for (const auto& [w, coef] : ws)
          terms.push_back({{"coef", rational_str(coef)}, {"word", word_str(w)}});
        std::printf("%s\n", Json{{"terms", terms}}.dump(2).c_str());
      } else {
        std::printf("%s\n", wordsum_text(ws).c_str());
      }
    } else if (graft->parsed() || tri->parsed() || gl->parsed()) {
      EnvElement x = load_env(alg_x), y = load_env(alg_y);
      EnvElement out;
      try {
        if (graft->parsed())
          out = graft_tree(single_tree_of(x, "x"), single_tree_of(y, "y"));
        else if (tri->parsed())
          out = triangle(x, y);
        else
          out = gl_product(x, y);
      } catch (const OpFailure&) {
        throw;
      } catch (const std::exception& e) {
        throw OpFailure(e.what());
      }
      print_env(cfg, out);
    } else if (brc->parsed()) {
      if (static_cast<int>(brace_files.size()) != brace_n + 1)
        throw ParseFailure("brace -n " + std::to_string(brace_n) + " needs " +
                           std::to_string(brace_n + 1) + " files");
      EnvElement X = env_unit();
      for (int i = 0; i < brace_n; ++i) X = concat(X, load_env(brace_files[i]));
      EnvElement y = load_env(brace_files.back());
      try {
        print_env(cfg, brace(X, y));
      } catch (const std::exception& e) {
        throw OpFailure(e.what());
      }
    } else if (aphi->parsed()) {
      std::vector<EnvElement> word;
      for (const auto& f : phi_files) word.push_back(load_env(f));
      try {
        for (const auto& x : word)
          if (!is_primitive(x)) throw OpFailure("word entries must be primitive");
        print_env(cfg, phi(word));
      } catch (const OpFailure&) {
        throw;
      } catch (const std::exception& e) {
        throw OpFailure(e.what());
      }
    } else if (prim->parsed()) {
      bool p = is_primitive(load_env(alg_x));
      if (cfg.format == "json")
        std::printf("%s\n", Json{{"primitive", p}}.dump().c_str());
      else
        std::printf("%s\n", p ? "true" : "false");
      exit_code = p ? 0 : 1;
    } else if (avalid->parsed()) {
      StructAlgebra A = load_algebra(adef_file);
      ValidationReport r = validate(A);
      if (cfg.format == "json") {
        Json axioms = Json::array();
        for (const auto& a : r.axioms)
          axioms.push_back({{"name", a.axiom}, {"passed", a.passed}, {"witness", a.witness}});
        std::printf("%s\n", Json{{"ok", r.ok()}, {"axioms", axioms}}.dump(2).c_str());
      } else {
        for (const auto& a : r.axioms) {
          std::string w;
          for (int i : a.witness) w += " " + std::to_string(i);
          std::printf("[%s] %s%s\n", a.passed ? "pass" : "FAIL", a.axiom.c_str(),
                      w.empty() ? "" : (" at" + w).c_str());
        }
      }
      exit_code = r.ok() ? 0 : 1;
    } else if (aeval->parsed()) {
      StructAlgebra A = load_algebra(adef_file);
      EnvElement e = load_env(aeval_elem);
      std::map<std::string, AlgElement> assignment;
      for (const auto& s : assigns) {
        size_t eq = s.find('=');
        if (eq == std::string::npos) throw ParseFailure("--assign expects g=expr");
        assignment[s.substr(0, eq)] = parse_alg_expr(A, s.substr(eq + 1));
      }
      try {
        print_alg_elem(cfg, A, evaluate(A, e, assignment));
      } catch (const std::exception& e2) {
        throw OpFailure(e2.what());
      }
    } else if (mchi->parsed()) {
      try {
        if (carrier == "free" || carrier == "prelie") {
          const FreeCarrier c{carrier == "prelie"};
          print_env_series(cfg, chi(c, series_from(c, c.norm(generator(cfg, 0)), 1), degree));
        } else {
          StructAlgebra A = load_algebra(carrier);
          if (!validate(A).ok()) throw OpFailure(carrier + " fails validation");
          const AlgCarrier c{A};
          print_u_series(cfg, A, chi(c, series_from(c, u_letter(0), 1), degree));
        }
      } catch (const ParseFailure&) {
        throw;
      } catch (const OpFailure&) {
        throw;
      } catch (const std::exception& e) {
        throw OpFailure(e.what());
      }
    } else if (mbch->parsed()) {
      const FreeCarrier c;
      auto x = series_from(c, generator(cfg, 0), 1);
      auto y = series_from(c, generator(cfg, 1), 1);
      Bracket b = structure == "lie" ? Bracket::Lie : Bracket::Double;
      print_env_series(cfg, bch(c, b, x, y, degree));
    } else if (magnus->got_subcommand("sharp")) {
      const FreeCarrier c;
      auto x = series_from(c, generator(cfg, 0), 1);
      auto y = series_from(c, generator(cfg, 1), 1);
      print_env_series(cfg, sharp(c, x, y, degree));
    } else if (mverify->parsed()) {
      exit_code = cmd_magnus_verify(cfg, identity, degree);
    } else if (verify->parsed()) {
      exit_code = cmd_verify(cfg, fixtures, filter, seed);
    } else if (enumerate->parsed()) {
      exit_code = cmd_enumerate(cfg, enum_v);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseFailure& e) {
    if (cfg.format == "json")
      std::printf("%s\n", Json{{"error", e.what()}, {"kind", "parse"}}.dump().c_str());
    else
      std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const OpFailure& e) {
    if (cfg.format == "json")
      std::printf("%s\n", Json{{"error", e.what()}, {"kind", "precondition"}}.dump().c_str());
    else
      std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return exit_code;
}
