#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "postlie/envelope.hpp"
#include "postlie/operad.hpp"
#include "postlie/render.hpp"
#include "postlie/struct_algebra.hpp"
#include "postlie/tree.hpp"

using namespace postlie;

namespace {

int run(const std::string& args) {
  int r = std::system(("./postlie " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(r) ? WEXITSTATUS(r) : -1;
}

bool have_binary() {
  std::ifstream f("./postlie");
  return f.good();
}

}  // namespace

TEST_CASE("tree serialization round-trips") {
  std::vector<PlanarTree> samples = {
      leaf_sym("a"),
      leaf_lab(3),
      leaf_unl(),
      parse_tree("1[3,2[4]]"),
      parse_tree("*[*[1,2],*[3,5[4]]]"),
      node_sym("b", {leaf_sym("a"), node_unl({leaf_lab(1)})}),
  };
  for (const auto& t : samples) {
    CHECK(tree_from_json(tree_json(t)) == t);
    CHECK(!tree_ascii(t).empty());
    CHECK(!tree_latex(t).empty());
  }
  CHECK(tree_latex(leaf_unl()) == "\\T{\\uv}{}");
  CHECK(tree_latex(parse_tree("2[1]")) == "\\T{2}{\\T{1}{}}");
}

TEST_CASE("operad serialization round-trips") {
  OperadElement x = op_term(parse_tree("1[2,3]"));
  x = op_add(x, op_term(parse_tree("3[1,2]"), Rational(-7, 3)));
  x = op_add(x, op_term(parse_tree("2[1,3]"), Rational(1, 2)));
  CHECK(operad_from_json(operad_json(x)) == x);
  CHECK(operad_from_json(operad_json(op_zero(3))) == op_zero(3));

  OperadElement w = compose_lw(op_term(parse_tree("1[2[3]]")), 2,
                               op_term(parse_tree("*[1,2]")));
  CHECK(operad_from_json(operad_json(w)) == w);
  CHECK(operad_latex(w).find("\\uv") == std::string::npos);
  CHECK(operad_ascii(w).find("(-1)") != std::string::npos);

  CHECK_THROWS_AS((void)operad_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS((void)operad_from_json("{\"arity\":2,\"terms\":[]}]"),
                  std::invalid_argument);
  // terms must match the declared arity
  CHECK_THROWS_AS(
      (void)operad_from_json(
          "{\"arity\":3,\"terms\":[{\"coef\":\"1\",\"tree\":{\"d\":{\"lab\":1},"
          "\"c\":[]}}]}"),
      std::invalid_argument);
}

TEST_CASE("envelope serialization round-trips") {
  EnvElement x = env_unit();
  env_accum(x, env_term({parse_tree("b[a]"), parse_tree("a")}), Rational(-5, 4));
  env_accum(x, triangle(env_tree(parse_tree("a")), env_tree(parse_tree("b[a]"))));
  CHECK(env_from_json(env_json(x)) == x);
  CHECK(env_from_json(env_json(env_zero())) == env_zero());
  CHECK(!env_ascii(x).empty());
  CHECK(!env_latex(x).empty());
  CHECK_THROWS_AS((void)env_from_json("{\"terms\":3}"), std::invalid_argument);
}

TEST_CASE("algebra serialization round-trips") {
  StructAlgebra A;
  A.dim = 3;
  A.basis = {"e", "f", "h"};
  A.bracket_c[{0, 1, 2}] = 1;
  A.bracket_c[{1, 0, 2}] = -1;
  A.triangle_c[{2, 2, 0}] = Rational(1, 3);
  StructAlgebra B = algebra_from_json(algebra_json(A));
  CHECK(B.dim == A.dim);
  CHECK(B.basis == A.basis);
  CHECK(B.bracket_c == A.bracket_c);
  CHECK(B.triangle_c == A.triangle_c);
  CHECK_THROWS_AS(
      (void)algebra_from_json("{\"dim\":2,\"basis\":[\"x\"],\"bracket\":[],"
                              "\"triangle\":[]}"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)algebra_from_json("{\"dim\":1,\"basis\":[\"x\"],\"bracket\":"
                              "[[0,0,5,\"1\"]],\"triangle\":[]}"),
      std::invalid_argument);
}

TEST_CASE("rational strings round-trip") {
  for (const char* s : {"0", "1", "-1", "7/3", "-22/7", "1000000000000/7"}) {
    Rational r = parse_rational(s);
    CHECK(rational_str(r) == s);
    CHECK(parse_rational(rational_str(r)) == r);
  }
  CHECK_THROWS_AS((void)parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_rational("x"), std::invalid_argument);
}

TEST_CASE("driver exit codes") {
  if (!have_binary()) {
    MESSAGE("./postlie not present in working directory, skipping");
    return;
  }
  CHECK(run("enumerate --vertices 3") == 0);
  CHECK(run("--format json enumerate --vertices 2") == 0);
  CHECK(run("operad h 'b(1,2)'") == 0);
  CHECK(run("operad h 't(1,'") == 2);
  CHECK(run("nosuchverb") == 2);
  CHECK(run("operad compose -i 1 missing.json missing.json") == 2);
  CHECK(run("--degree 3 magnus verify ode") == 0);
  CHECK(run("--degree 3 magnus verify nosuchidentity") == 2);
  CHECK(run("--degree 2 magnus chi --carrier prelie") == 0);
  CHECK(run("--degree 2 magnus bch --structure double") == 0);

  std::ofstream("cli_test_nonprim.json")
      << "{\"terms\":[{\"coef\":\"1\",\"forest\":[{\"d\":{\"sym\":\"a\"},\"c\":[]},"
         "{\"d\":{\"sym\":\"a\"},\"c\":[]}]}]}";
  CHECK(run("alg primitive? cli_test_nonprim.json") == 1);
  std::ofstream("cli_test_prim.json")
      << "{\"terms\":[{\"coef\":\"1\",\"forest\":[{\"d\":{\"sym\":\"a\"},\"c\":[]}]}]}";
  CHECK(run("alg primitive? cli_test_prim.json") == 0);
  CHECK(run("alg phi cli_test_nonprim.json") == 1);
  CHECK(run("alg brace -n 1 cli_test_prim.json cli_test_nonprim.json") == 1);
  CHECK(run("alg gl cli_test_prim.json cli_test_prim.json") == 0);
  std::remove("cli_test_nonprim.json");
  std::remove("cli_test_prim.json");
}
