#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "postlie/envelope.hpp"
#include "postlie/struct_algebra.hpp"
#include "test_fixtures.hpp"

using namespace postlie;
using namespace postlie::fixtures;

namespace {

bool axiom_failed(const ValidationReport& r, const std::string& name) {
  for (const auto& a : r.axioms)
    if (a.axiom == name) return !a.passed && !a.witness.empty();
  return false;
}

}  // namespace

TEST_CASE("validation accepts the fixture algebras") {
  for (const auto& A : {sl2_trivial(), prelie_1d(), nonabelian_2d(), sl2_minus_ad()}) {
    const ValidationReport r = validate(A);
    CHECK(r.ok());
    CHECK(r.axioms.size() == 4);
    for (const auto& a : r.axioms) CHECK(a.witness.empty());
  }
}

TEST_CASE("validation rejects corrupted tensors with witnesses") {
  SUBCASE("broken antisymmetry") {
    StructAlgebra A = sl2_trivial();
    set3(A.bracket_c, 1, 0, 2, 1);
    const ValidationReport r = validate(A);
    CHECK_FALSE(r.ok());
    CHECK(axiom_failed(r, "antisymmetry"));
  }
  SUBCASE("broken Jacobi") {
    StructAlgebra A;
    A.dim = 3;
    A.basis = {"a", "b", "c"};
    set3(A.bracket_c, 0, 1, 2, 1);
    set3(A.bracket_c, 1, 0, 2, -1);
    set3(A.bracket_c, 0, 2, 0, 1);
    set3(A.bracket_c, 2, 0, 0, -1);
    const ValidationReport r = validate(A);
    CHECK_FALSE(r.ok());
    CHECK(axiom_failed(r, "jacobi"));
  }
  SUBCASE("triangle that is not a derivation of the bracket") {
    StructAlgebra A = nonabelian_2d();
    set3(A.triangle_c, 0, 1, 0, 1);
    const ValidationReport r = validate(A);
    CHECK_FALSE(r.ok());
    CHECK(axiom_failed(r, "triangle-derivation"));
  }
  SUBCASE("zero bracket forces the pre-Lie identity") {
    StructAlgebra A;
    A.dim = 2;
    A.basis = {"u", "v"};
    set3(A.triangle_c, 0, 0, 1, 1);
    set3(A.triangle_c, 1, 0, 0, 1);
    const ValidationReport r = validate(A);
    CHECK_FALSE(r.ok());
    CHECK(axiom_failed(r, "bracket-associator"));
  }
}

TEST_CASE("bilinear products") {
  const StructAlgebra A = sl2_minus_ad();
  const AlgElement e = basis_element(A, 0), f = basis_element(A, 1), h = basis_element(A, 2);

  CHECK(bracket(A, e, f) == h);
  CHECK(triangle(A, e, f) == alg_scale(-1, h));
  CHECK(alg_is_zero(bracket(A, e, e)));
  CHECK(alg_is_zero(double_bracket(A, e, e)));

  // x > y = -[x,y] makes the second Lie bracket the opposite one
  CHECK(double_bracket(A, e, f) == alg_scale(-1, bracket(A, e, f)));

  SUBCASE("double bracket satisfies Jacobi") {
    std::vector<AlgElement> samples = {e, f, h, alg_add(e, alg_scale(Rational(2), h)),
                                       alg_sub(f, alg_scale(Rational(1) / 3, e))};
    for (const auto& x : samples)
      for (const auto& y : samples)
        for (const auto& z : samples) {
          AlgElement s = double_bracket(A, x, double_bracket(A, y, z));
          s = alg_add(s, double_bracket(A, y, double_bracket(A, z, x)));
          s = alg_add(s, double_bracket(A, z, double_bracket(A, x, y)));
          CHECK(alg_is_zero(s));
        }
  }

  SUBCASE("dimension mismatch") {
    const StructAlgebra B = prelie_1d();
    CHECK_THROWS_AS((void)bracket(A, e, basis_element(B, 0)), std::invalid_argument);
    CHECK_THROWS_AS(alg_add(e, basis_element(B, 0)), std::invalid_argument);
  }
}

TEST_CASE("brace recursion") {
  const StructAlgebra A = sl2_minus_ad();
  std::vector<AlgElement> basis;
  for (int i = 0; i < A.dim; ++i) basis.push_back(basis_element(A, i));

  SUBCASE("low orders") {
    for (const auto& x : basis)
      for (const auto& y : basis) {
        CHECK(brace_eval(A, {}, y) == y);
        CHECK(brace_eval(A, {x}, y) == triangle(A, x, y));
      }
  }

  SUBCASE("antisymmetrized second brace is the bracket action") {
    for (const auto& x : basis)
      for (const auto& y : basis)
        for (const auto& z : basis) {
          const AlgElement lhs = alg_sub(brace_eval(A, {x, y}, z), brace_eval(A, {y, x}, z));
          CHECK(lhs == triangle(A, bracket(A, x, y), z));
        }
  }

  SUBCASE("trivial triangle kills all higher braces") {
    const StructAlgebra L = sl2_trivial();
    const AlgElement u = basis_element(L, 0), v = basis_element(L, 2);
    CHECK(brace_eval(L, {}, v) == v);
    CHECK(alg_is_zero(brace_eval(L, {u}, v)));
    CHECK(alg_is_zero(brace_eval(L, {u, v}, v)));
    CHECK(alg_is_zero(brace_eval(L, {u, u, v}, v)));
  }

  SUBCASE("one-dimensional pre-Lie braces") {
    const StructAlgebra P = prelie_1d();
    const AlgElement u = basis_element(P, 0);
    CHECK(brace_eval(P, {u}, u) == u);
    // T_2(e,e;e) = e>(e>e) - (e>e)>e = 0
    CHECK(alg_is_zero(brace_eval(P, {u, u}, u)));
  }
}

TEST_CASE("evaluation realizes the universal morphism") {
  const StructAlgebra A = sl2_minus_ad();
  const std::map<std::string, AlgElement> assign = {
      {"a", basis_element(A, 0)},
      {"b", alg_add(basis_element(A, 1), alg_scale(Rational(1) / 2, basis_element(A, 2)))},
      {"c", basis_element(A, 2)}};
  auto ev = [&](const EnvElement& x) { return evaluate(A, x, assign); };

  std::vector<PlanarTree> trees;
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_trees(n, {"a", "b"})) trees.push_back(t);
  REQUIRE(trees.size() == 22);

  SUBCASE("base cases") {
    CHECK(ev(env_tree(leaf_sym("a"))) == basis_element(A, 0));
    const PlanarTree chain = node_sym("a", {leaf_sym("a")});
    CHECK(ev(env_tree(chain)) == triangle(A, basis_element(A, 0), basis_element(A, 0)));
    const PlanarTree corolla = node_sym("c", {leaf_sym("a"), leaf_sym("b")});
    CHECK(ev(env_tree(corolla)) ==
          brace_eval(A, {assign.at("a"), assign.at("b")}, assign.at("c")));
  }

  SUBCASE("bracket and triangle are preserved") {
    for (const auto& s : trees)
      for (const auto& t : trees) {
        const EnvElement fs = env_tree(s), ft = env_tree(t);
        CHECK(ev(lie_bracket(fs, ft)) == bracket(A, ev(fs), ev(ft)));
        CHECK(ev(triangle(fs, ft)) == triangle(A, ev(fs), ev(ft)));
      }
  }

  SUBCASE("nested primitive combinations") {
    const EnvElement fa = env_tree(leaf_sym("a")), fb = env_tree(leaf_sym("b"));
    const EnvElement com = lie_bracket(fa, fb);
    const EnvElement nested = lie_bracket(com, env_tree(node_sym("a", {leaf_sym("b")})));
    REQUIRE(is_primitive(nested));
    CHECK(ev(nested) ==
          bracket(A, bracket(A, ev(fa), ev(fb)), ev(env_tree(node_sym("a", {leaf_sym("b")})))));
    CHECK(ev(triangle(com, fa)) == triangle(A, bracket(A, ev(fa), ev(fb)), ev(fa)));
    CHECK(ev(double_bracket(fa, fb)) == double_bracket(A, ev(fa), ev(fb)));
  }

  SUBCASE("free post-Lie identities map to identities") {
    const EnvElement x = env_tree(node_sym("a", {leaf_sym("b")}));
    const EnvElement y = env_tree(leaf_sym("b"));
    const EnvElement z = env_tree(node_sym("c", {leaf_sym("a"), leaf_sym("a")}));
    const EnvElement pl1_lhs = triangle(x, lie_bracket(y, z));
    const EnvElement pl1_rhs =
        env_add(lie_bracket(triangle(x, y), z), lie_bracket(y, triangle(x, z)));
    CHECK(ev(pl1_lhs) == ev(pl1_rhs));
    CHECK(ev(env_sub(pl1_lhs, pl1_rhs)) == alg_zero(A));
  }
}

TEST_CASE("free braces evaluate to brace_eval") {
  const StructAlgebra A = sl2_minus_ad();
  const std::map<std::string, AlgElement> assign = {
      {"a", basis_element(A, 0)},
      {"b", basis_element(A, 1)},
      {"c", alg_sub(basis_element(A, 2), basis_element(A, 0))},
      {"d", alg_add(basis_element(A, 1), basis_element(A, 2))}};
  auto ev = [&](const EnvElement& x) { return evaluate(A, x, assign); };

  const PlanarTree a = leaf_sym("a"), b = leaf_sym("b"), c = leaf_sym("c"), d = leaf_sym("d");
  const std::vector<std::vector<PlanarTree>> arg_lists = {
      {a},
      {a, b},
      {b, a},
      {a, b, c},
      {node_sym("a", {leaf_sym("b")}), c},
      {a, node_sym("c", {leaf_sym("d")}), b}};
  for (const auto& xs : arg_lists) {
    const EnvElement free_brace = brace(env_term(Forest(xs.begin(), xs.end())), env_tree(d));
    std::vector<AlgElement> vals;
    for (const auto& t : xs) vals.push_back(ev(env_tree(t)));
    CHECK(ev(free_brace) == brace_eval(A, vals, assign.at("d")));
  }
}

TEST_CASE("evaluation errors") {
  const StructAlgebra A = prelie_1d();
  const std::map<std::string, AlgElement> assign = {{"x", basis_element(A, 0)}};
  const PlanarTree x = leaf_sym("x");

  CHECK_THROWS_AS((void)evaluate(A, env_term({x, x}), assign), std::invalid_argument);
  CHECK_THROWS_AS((void)evaluate(A, env_tree(leaf_sym("y")), assign), std::invalid_argument);
  CHECK_THROWS_AS((void)evaluate(A, env_tree(leaf_lab(1)), assign), std::invalid_argument);
  CHECK_THROWS_AS((void)evaluate(A, env_unit(), assign), std::invalid_argument);
}
