#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "postlie/envelope.hpp"
#include "postlie/operad.hpp"

using namespace postlie;

namespace {

PlanarTree sym(const std::string& s) { return leaf_sym(s); }

// Replaces every label i by the i-th symbol; used to read an operadic tree
// as a generator-decorated one.
PlanarTree labels_to_symbols(const PlanarTree& t, const std::vector<std::string>& names) {
  PlanarTree out = t;
  if (out.dec.is_label()) out.dec = Decoration::of_symbol(names.at(out.dec.label - 1));
  for (auto& c : out.children) c = labels_to_symbols(c, names);
  return out;
}

std::vector<PlanarTree> trees_up_to(int maxv, const std::vector<std::string>& alphabet) {
  std::vector<PlanarTree> out;
  for (int n = 1; n <= maxv; ++n)
    for (const auto& t : enumerate_trees(n, alphabet)) out.push_back(t);
  return out;
}

EnvElement assoc_defect(const EnvElement& x, const EnvElement& y, const EnvElement& z) {
  return env_sub(triangle(x, triangle(y, z)), triangle(triangle(x, y), z));
}

}  // namespace

TEST_CASE("concatenation is the free word product") {
  const PlanarTree a = sym("a"), b = sym("b");
  const EnvElement ta = env_tree(a), tb = env_tree(b);

  CHECK(concat(env_unit(), ta) == ta);
  CHECK(concat(ta, env_unit()) == ta);
  CHECK(concat(ta, tb) == env_term({a, b}));
  CHECK(concat(tb, ta) == env_term({b, a}));
  CHECK(concat(ta, tb) != concat(tb, ta));

  const EnvElement tc = env_tree(node_sym("c", {sym("a")}));
  CHECK(concat(concat(ta, tb), tc) == concat(ta, concat(tb, tc)));
  CHECK(env_degree(concat(ta, tc)) == 3);
  CHECK(forest_degree({a, b}) == 2);

  const EnvElement mix = env_add(env_unit(), env_scale(Rational(2), ta));
  CHECK(concat(mix, tb) == env_add(tb, env_scale(Rational(2), env_term({a, b}))));
}

TEST_CASE("deshuffle splits forests over ordered subsequences") {
  const PlanarTree a = sym("a"), b = sym("b");

  EnvTensor du = deshuffle_tensor(env_unit());
  CHECK(du.size() == 1);
  CHECK(du[{Forest{}, Forest{}}] == 1);

  CHECK(is_primitive(env_tree(a)));
  CHECK(is_primitive(env_zero()));
  CHECK_FALSE(is_primitive(env_unit()));
  CHECK_FALSE(is_primitive(env_term({a, b})));

  EnvTensor dab = deshuffle_tensor(env_term({a, b}));
  CHECK(dab.size() == 4);
  CHECK(dab[{Forest{a, b}, Forest{}}] == 1);
  CHECK(dab[{Forest{}, Forest{a, b}}] == 1);
  CHECK(dab[{Forest{a}, Forest{b}}] == 1);
  CHECK(dab[{Forest{b}, Forest{a}}] == 1);

  // counit property: (eps x id) after the coproduct is the identity.
  for (const auto& f : enumerate_forests(3, {"a", "b"})) {
    const EnvElement x = env_term(f, Rational(3) / 7);
    EnvElement recovered;
    for (const auto& [pair, c] : deshuffle_tensor(x))
      if (pair.first.empty()) env_accum(recovered, env_term(pair.second), c);
    CHECK(recovered == x);
  }

  // coassociativity on a sample, comparing triple splits.
  const Forest f = {a, b, node_sym("a", {sym("b")})};
  std::map<std::tuple<Forest, Forest, Forest>, Rational> left, right;
  for (const auto& [p, c] : deshuffle_tensor(env_term(f)))
    for (const auto& [q, d] : deshuffle_tensor(env_term(p.first)))
      left[{q.first, q.second, p.second}] += c * d;
  for (const auto& [p, c] : deshuffle_tensor(env_term(f)))
    for (const auto& [q, d] : deshuffle_tensor(env_term(p.second)))
      right[{p.first, q.first, q.second}] += c * d;
  CHECK(left == right);
}

TEST_CASE("grafting attaches as leftmost child at every vertex") {
  const PlanarTree x = sym("x");
  const PlanarTree chain2 = node_sym("x", {sym("x")});
  const PlanarTree chain3 = node_sym("x", {node_sym("x", {sym("x")})});
  const PlanarTree corolla2 = node_sym("x", {sym("x"), sym("x")});

  CHECK(graft_tree(x, x) == env_tree(chain2));
  CHECK(graft_tree(x, chain2) == env_add(env_tree(corolla2), env_tree(chain3)));

  // leftmost insertion: grafting b onto a[c] at the root puts b before c.
  const PlanarTree host = node_sym("a", {sym("c")});
  EnvElement g = graft_tree(sym("b"), host);
  CHECK(g.terms.count({node_sym("a", {sym("b"), sym("c")})}) == 1);
  CHECK(g.terms.count({node_sym("a", {sym("c"), sym("b")})}) == 0);

  for (const auto& t : trees_up_to(3, {"x"}))
    for (const auto& s : trees_up_to(3, {"x"})) {
      const EnvElement g2 = graft_tree(t, s);
      Rational total = 0;
      for (const auto& [f, c] : g2.terms) {
        CHECK(forest_degree(f) == vertex_count(t) + vertex_count(s));
        total += c;
      }
      CHECK(total == vertex_count(s));
    }
}

TEST_CASE("triangle unit rules and left-factor recursion") {
  const PlanarTree a = sym("a"), b = sym("b"), c = sym("c");
  const EnvElement ta = env_tree(a), tb = env_tree(b), tc = env_tree(c);

  SUBCASE("unit rules") {
    for (const auto& f : enumerate_forests(3, {"a", "b"})) {
      const EnvElement X = env_term(f);
      CHECK(triangle(env_unit(), X) == X);
      if (!f.empty()) CHECK(triangle(X, env_unit()).is_zero());
    }
    CHECK(triangle(env_unit(), env_unit()) == env_unit());
    const EnvElement mixed = env_add(env_unit(), ta);
    CHECK(triangle(mixed, env_unit()) == env_unit());
  }

  SUBCASE("two-letter recursion") {
    for (const auto& x1 : trees_up_to(2, {"a", "b"}))
      for (const auto& x2 : trees_up_to(2, {"a", "b"}))
        for (const auto& y : trees_up_to(2, {"a", "b"})) {
          const EnvElement lhs = triangle(env_term({x1, x2}), env_tree(y));
          const EnvElement rhs =
              env_sub(triangle(env_tree(x1), triangle(env_tree(x2), env_tree(y))),
                      triangle(triangle(env_tree(x1), env_tree(x2)), env_tree(y)));
          CHECK(lhs == rhs);
        }
  }

  SUBCASE("single trees act as derivations of concat") {
    const EnvElement lhs = triangle(ta, env_term({b, c}));
    const EnvElement rhs = env_add(concat(triangle(ta, tb), tc), concat(tb, triangle(ta, tc)));
    CHECK(lhs == rhs);

    for (const auto& x : trees_up_to(3, {"x"}))
      for (const auto& f : enumerate_forests(3, {"x"})) {
        if (f.size() < 2) continue;
        EnvElement rhs2;
        for (size_t i = 0; i < f.size(); ++i) {
          Forest pre(f.begin(), f.begin() + i), post(f.begin() + i + 1, f.end());
          env_accum(rhs2, concat(env_term(pre),
                                 concat(triangle(env_tree(x), env_tree(f[i])), env_term(post))));
        }
        CHECK(triangle(env_tree(x), env_term(f)) == rhs2);
      }
  }

  SUBCASE("left-factor rule for a general left word") {
    // (x.X) > y = x > (X > y) - (x > X) > y with X a longer forest.
    for (const auto& x : trees_up_to(2, {"x"}))
      for (const auto& f : enumerate_forests(3, {"x"})) {
        const EnvElement X = env_term(f), y = env_tree(node_sym("x", {sym("x")}));
        const EnvElement lhs = triangle(concat(env_tree(x), X), y);
        const EnvElement rhs =
            env_sub(triangle(env_tree(x), triangle(X, y)), triangle(triangle(env_tree(x), X), y));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("post-Lie axioms hold on primitives") {
  auto pl1_defect = [](const EnvElement& x, const EnvElement& y, const EnvElement& z) {
    EnvElement lhs = triangle(x, lie_bracket(y, z));
    EnvElement rhs = env_add(lie_bracket(triangle(x, y), z), lie_bracket(y, triangle(x, z)));
    return env_sub(lhs, rhs);
  };
  auto pl2_defect = [](const EnvElement& x, const EnvElement& y, const EnvElement& z) {
    EnvElement lhs = triangle(lie_bracket(x, y), z);
    return env_sub(lhs, env_sub(assoc_defect(x, y, z), assoc_defect(y, x, z)));
  };

  SUBCASE("one generator, trees up to four vertices, exhaustive") {
    const auto trees = trees_up_to(4, {"x"});
    CHECK(trees.size() == 9);
    for (const auto& x : trees)
      for (const auto& y : trees)
        for (const auto& z : trees) {
          CHECK(pl1_defect(env_tree(x), env_tree(y), env_tree(z)).is_zero());
          CHECK(pl2_defect(env_tree(x), env_tree(y), env_tree(z)).is_zero());
        }
  }

  SUBCASE("two generators, trees up to three vertices, exhaustive") {
    const auto trees = trees_up_to(3, {"a", "b"});
    CHECK(trees.size() == 22);
    for (const auto& x : trees)
      for (const auto& y : trees)
        for (const auto& z : trees) {
          CHECK(pl1_defect(env_tree(x), env_tree(y), env_tree(z)).is_zero());
          CHECK(pl2_defect(env_tree(x), env_tree(y), env_tree(z)).is_zero());
        }
  }

  SUBCASE("commutator primitives") {
    const EnvElement u = lie_bracket(env_tree(sym("a")), env_tree(sym("b")));
    const EnvElement v = env_tree(node_sym("a", {sym("b")}));
    const EnvElement w = env_tree(sym("c"));
    REQUIRE(is_primitive(u));
    CHECK(pl1_defect(u, v, w).is_zero());
    CHECK(pl1_defect(v, u, w).is_zero());
    CHECK(pl1_defect(v, w, u).is_zero());
    CHECK(pl2_defect(u, v, w).is_zero());
    CHECK(pl2_defect(v, u, w).is_zero());
    CHECK(pl2_defect(v, w, u).is_zero());
    const EnvElement uu = lie_bracket(u, v);
    REQUIRE(is_primitive(uu));
    CHECK(pl2_defect(uu, v, w).is_zero());
  }
}

TEST_CASE("brace laws") {
  const PlanarTree a = sym("a"), b = sym("b"), c = sym("c"), d = sym("d");

  SUBCASE("unit and codomain") {
    for (const auto& y : trees_up_to(3, {"a", "b"})) {
      CHECK(brace(env_unit(), env_tree(y)) == env_tree(y));
      CHECK(is_primitive(brace(env_term({a, b}), env_tree(y))));
      CHECK(is_primitive(brace(env_term({a, b, c}), env_tree(y))));
    }
    CHECK_THROWS_AS(brace(env_tree(a), env_term({b, c})), std::invalid_argument);
  }

  SUBCASE("commutator letters collapse") {
    // xy - yx and [x,y] name the same element here, so the brace kills the
    // difference identically.
    const EnvElement k =
        env_sub(env_sub(concat(env_tree(a), env_tree(b)), concat(env_tree(b), env_tree(a))),
                lie_bracket(env_tree(a), env_tree(b)));
    CHECK(k.is_zero());
    CHECK(brace(k, env_tree(c)).is_zero());
  }

  SUBCASE("nesting expands over ordered partitions") {
    // T(X; T(Y;z)) = sum over ordered partitions J_0 u ... u J_m of the
    // positions of X of T(X_{J_0}, T(X_{J_1});y_1), ..., T(X_{J_m};y_m); z).
    auto partition_rhs = [](const Forest& X, const Forest& Y, const EnvElement& z) {
      const size_t p = X.size(), m = Y.size();
      EnvElement out;
      std::vector<size_t> blk(p, 0);
      while (true) {
        std::vector<Forest> J(m + 1);
        for (size_t j = 0; j < p; ++j) J[blk[j]].push_back(X[j]);
        EnvElement first = env_term(J[0]);
        for (size_t i = 1; i <= m; ++i)
          first = concat(first, brace(env_term(J[i]), env_tree(Y[i - 1])));
        env_accum(out, brace(first, z));
        size_t j = 0;
        while (j < p && ++blk[j] == m + 1) blk[j++] = 0;
        if (j == p || p == 0) break;
      }
      return out;
    };

    const std::vector<Forest> lefts = {{a}, {a, b}, {node_sym("a", {sym("b")})}, {a, b, c}};
    const std::vector<Forest> rights = {{c}, {c, d}, {node_sym("c", {sym("d")}), c}};
    for (const auto& X : lefts)
      for (const auto& Y : rights) {
        const EnvElement z = env_tree(sym("e"));
        const EnvElement lhs = brace(env_term(X), brace(env_term(Y), z));
        CHECK(lhs == partition_rhs(X, Y, z));
      }

    // explicit three-term instance with a single left letter
    const EnvElement z = env_tree(d);
    const EnvElement y1 = env_tree(b), y2 = env_tree(c), x = env_tree(a);
    const EnvElement lhs = brace(x, brace(concat(y1, y2), z));
    EnvElement rhs = brace(concat(x, concat(y1, y2)), z);
    env_accum(rhs, brace(concat(brace(x, y1), y2), z));
    env_accum(rhs, brace(concat(y1, brace(x, y2)), z));
    CHECK(lhs == rhs);
  }

  SUBCASE("nesting is the module law of the Grossman-Larson product") {
    for (const auto& f : enumerate_forests(2, {"a", "b"}))
      for (const auto& g : enumerate_forests(2, {"a", "b"})) {
        const EnvElement X = env_term(f), Y = env_term(g), z = env_tree(c);
        CHECK(triangle(X, triangle(Y, z)) == triangle(gl_product(X, Y), z));
      }
  }

  SUBCASE("bracket targets split over complementary subsets") {
    // T(X;[x,y]) = sum over I u J of [T(X_I;x), T(X_J;y)].
    const std::vector<Forest> lefts = {{a}, {a, b}, {a, b, node_sym("c", {sym("d")})}};
    for (const auto& X : lefts) {
      const EnvElement x = env_tree(c), y = env_tree(node_sym("d", {sym("a")}));
      const EnvElement lhs = triangle(env_term(X), lie_bracket(x, y));
      EnvElement rhs;
      const size_t p = X.size();
      for (size_t mask = 0; mask < (size_t(1) << p); ++mask) {
        Forest I, J;
        for (size_t j = 0; j < p; ++j) (mask >> j & 1 ? I : J).push_back(X[j]);
        env_accum(rhs, lie_bracket(brace(env_term(I), x), brace(env_term(J), y)));
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("braces of generators build corollas") {
  const PlanarTree a = sym("a"), b = sym("b"), c = sym("c"), d = sym("d"), e = sym("e");

  CHECK(brace(env_tree(a), env_tree(b)) == env_tree(node_sym("b", {a})));
  CHECK(brace(env_term({a, b}), env_tree(c)) == env_tree(node_sym("c", {a, b})));
  CHECK(brace(env_term({a, b, c}), env_tree(d)) == env_tree(node_sym("d", {a, b, c})));
  CHECK(brace(env_term({a, b, c, d}), env_tree(e)) == env_tree(node_sym("e", {a, b, c, d})));
  CHECK(brace(env_term({a, a}), env_tree(a)) == env_tree(node_sym("a", {a, a})));
}

TEST_CASE("brace matches the operadic corolla") {
  // the arity-3 corolla equals the difference of the two chain compositions,
  // and its symbol reading must agree with the brace on generators
  const PlanarTree chain = parse_tree("2[1]");
  const OperadElement corolla =
      op_sub(compose_pt(op_term(chain), 2, op_term(chain)), compose_pt(op_term(chain), 1, op_term(chain)));
  const std::vector<std::string> names = {"a", "b", "c"};
  EnvElement from_operad;
  for (const auto& [t, coef] : corolla.terms)
    env_accum(from_operad, env_tree(labels_to_symbols(t, names)), coef);

  const EnvElement from_brace = brace(env_term({sym("a"), sym("b")}), env_tree(sym("c")));
  CHECK(from_operad == from_brace);
  CHECK(from_brace == env_tree(node_sym("c", {sym("a"), sym("b")})));
}

TEST_CASE("Lie brackets") {
  const PlanarTree a = sym("a"), b = sym("b"), c = sym("c");
  const EnvElement ta = env_tree(a), tb = env_tree(b), tc = env_tree(c);

  CHECK(lie_bracket(ta, ta).is_zero());
  CHECK(is_primitive(lie_bracket(ta, tb)));
  CHECK(is_primitive(lie_bracket(lie_bracket(ta, tb), tc)));

  // Jacobi for the concatenation commutator
  EnvElement jac = lie_bracket(ta, lie_bracket(tb, tc));
  env_accum(jac, lie_bracket(tb, lie_bracket(tc, ta)));
  env_accum(jac, lie_bracket(tc, lie_bracket(ta, tb)));
  CHECK(jac.is_zero());

  SUBCASE("double bracket") {
    CHECK(double_bracket(ta, ta).is_zero());
    CHECK(double_bracket(env_tree(sym("x")), env_tree(sym("x"))).is_zero());
    CHECK(is_primitive(double_bracket(ta, tb)));
    CHECK_THROWS_AS(double_bracket(env_term({a, b}), tc), std::invalid_argument);

    const auto trees = trees_up_to(3, {"x"});
    for (const auto& x : trees)
      for (const auto& y : trees)
        for (const auto& z : trees) {
          EnvElement djac = double_bracket(env_tree(x), double_bracket(env_tree(y), env_tree(z)));
          env_accum(djac, double_bracket(env_tree(y), double_bracket(env_tree(z), env_tree(x))));
          env_accum(djac, double_bracket(env_tree(z), double_bracket(env_tree(x), env_tree(y))));
          CHECK(djac.is_zero());
        }

    const EnvElement u = lie_bracket(ta, tb);
    EnvElement djac = double_bracket(u, double_bracket(tb, tc));
    env_accum(djac, double_bracket(tb, double_bracket(tc, u)));
    env_accum(djac, double_bracket(tc, double_bracket(u, tb)));
    CHECK(djac.is_zero());
  }
}

TEST_CASE("Grossman-Larson product") {
  const PlanarTree a = sym("a"), b = sym("b"), c = sym("c");
  const EnvElement ta = env_tree(a), tb = env_tree(b), tc = env_tree(c);

  SUBCASE("units and the primitive shortcut") {
    for (const auto& f : enumerate_forests(3, {"a", "b"})) {
      const EnvElement X = env_term(f);
      CHECK(gl_product(env_unit(), X) == X);
      CHECK(gl_product(X, env_unit()) == X);
    }
    for (const auto& t : trees_up_to(3, {"a", "b"}))
      for (const auto& f : enumerate_forests(2, {"a", "b"})) {
        const EnvElement x = env_tree(t), X = env_term(f);
        CHECK(gl_product(x, X) == env_add(concat(x, X), triangle(x, X)));
      }
  }

  SUBCASE("associativity") {
    std::vector<EnvElement> samples;
    for (const auto& f : enumerate_forests(2, {"a", "b"})) samples.push_back(env_term(f));
    samples.push_back(env_add(env_unit(), env_scale(Rational(2), ta)));
    samples.push_back(lie_bracket(ta, tb));
    samples.push_back(env_term({node_sym("a", {sym("b")}), a}));
    for (const auto& A : samples)
      for (const auto& B : samples)
        for (const auto& C : samples)
          CHECK(gl_product(gl_product(A, B), C) == gl_product(A, gl_product(B, C)));
  }

  SUBCASE("counit and coproduct are morphisms") {
    std::vector<EnvElement> samples = {ta, env_term({a, b}), env_add(env_unit(), tc),
                                       env_term({node_sym("a", {sym("b")})}),
                                       env_term({a, b, c}, Rational(1) / 2)};
    for (const auto& A : samples)
      for (const auto& B : samples) {
        const EnvElement AB = gl_product(A, B);
        CHECK(counit(AB) == counit(A) * counit(B));
        EnvTensor rhs;
        for (const auto& [pa, ca] : deshuffle_tensor(A))
          for (const auto& [pb, cb] : deshuffle_tensor(B))
            tensor_accum(rhs,
                         tensor_product(gl_product(env_term(pa.first), env_term(pb.first)),
                                        gl_product(env_term(pa.second), env_term(pb.second))),
                         ca * cb);
        CHECK(deshuffle_tensor(AB) == rhs);
      }
  }
}

TEST_CASE("triangle is a comodule-algebra map up to degree six") {
  const PlanarTree a = sym("a"), b = sym("b");
  std::vector<EnvElement> samples;
  for (const auto& f : enumerate_forests(2, {"a", "b"})) samples.push_back(env_term(f));
  samples.push_back(env_term({a, b, a}));
  samples.push_back(env_term({node_sym("a", {sym("b"), sym("a")})}));
  samples.push_back(env_add(env_unit(), env_tree(node_sym("b", {sym("b")}))));

  for (const auto& X : samples)
    for (const auto& Y : samples) {
      // coproduct compatibility
      EnvTensor rhs;
      for (const auto& [px, cx] : deshuffle_tensor(X))
        for (const auto& [py, cy] : deshuffle_tensor(Y))
          tensor_accum(rhs,
                       tensor_product(triangle(env_term(px.first), env_term(py.first)),
                                      triangle(env_term(px.second), env_term(py.second))),
                       cx * cy);
      CHECK(deshuffle_tensor(triangle(X, Y)) == rhs);

      for (const auto& Z : samples) {
        // product compatibility
        EnvElement prod_rhs;
        for (const auto& [px, cx] : deshuffle_tensor(X))
          prod_rhs = env_add(prod_rhs,
                             env_scale(cx, concat(triangle(env_term(px.first), Y),
                                                  triangle(env_term(px.second), Z))));
        CHECK(triangle(X, concat(Y, Z)) == prod_rhs);
      }
    }
}

TEST_CASE("phi rewrites words into the Grossman-Larson picture") {
  const PlanarTree a = sym("a"), b = sym("b"), c = sym("c");
  const EnvElement ta = env_tree(a), tb = env_tree(b), tc = env_tree(c);
  const EnvElement com = lie_bracket(ta, tb);

  CHECK(phi({}) == env_unit());
  CHECK(phi({ta}) == ta);
  CHECK_THROWS_AS(phi({env_term({a, b})}), std::invalid_argument);

  const std::vector<std::vector<EnvElement>> words = {
      {ta, tb}, {ta, ta}, {ta, tb, tc}, {com, tc}, {tc, com}, {ta, tb, ta, tc}};
  for (const auto& w : words) {
    const EnvElement out = phi(w);

    // iterated Grossman-Larson product
    EnvElement glw = env_unit();
    for (auto it = w.rbegin(); it != w.rend(); ++it) glw = gl_product(*it, glw);
    CHECK(out == glw);

    // head recursion
    std::vector<EnvElement> tail(w.begin() + 1, w.end());
    CHECK(out == env_add(concat(w[0], phi(tail)), triangle(w[0], phi(tail))));

    // the image is the concatenation word up to lower filtration: applying
    // the reduced coproduct n-1 times kills the difference, but not the
    // image itself
    EnvElement lead = env_unit();
    for (const auto& x : w) lead = concat(lead, x);
    const int n_len = int(w.size());
    auto reduced_iter = [](const EnvElement& x, int times) {
      std::map<std::vector<Forest>, Rational> cur;
      for (const auto& [f, c] : x.terms)
        if (!f.empty()) cur[{f}] += c;
      for (int s = 0; s < times; ++s) {
        std::map<std::vector<Forest>, Rational> next;
        for (const auto& [vec, c] : cur)
          for (const auto& [pair, d] : deshuffle_tensor(env_term(vec[0]))) {
            if (pair.first.empty() || pair.second.empty()) continue;
            std::vector<Forest> key{pair.first, pair.second};
            key.insert(key.end(), vec.begin() + 1, vec.end());
            next[key] += c * d;
          }
        for (auto it = next.begin(); it != next.end();)
          it = it->second == 0 ? next.erase(it) : std::next(it);
        cur = std::move(next);
      }
      return cur;
    };
    REQUIRE(counit(out) == 0);
    CHECK(reduced_iter(env_sub(out, lead), n_len - 1).empty());
    if (n_len >= 2) CHECK_FALSE(reduced_iter(out, n_len - 1).empty());

    // coalgebra morphism: split the word, not the image
    EnvTensor rhs;
    const size_t n = w.size();
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
      std::vector<EnvElement> wl, wr;
      for (size_t j = 0; j < n; ++j) (mask >> j & 1 ? wl : wr).push_back(w[j]);
      tensor_accum(rhs, tensor_product(phi(wl), phi(wr)));
    }
    CHECK(deshuffle_tensor(out) == rhs);
  }
}

TEST_CASE("forest enumeration follows the Catalan numbers") {
  const std::vector<std::string> one = {"x"};
  const std::vector<size_t> catalan = {1, 1, 2, 5, 14, 42, 132};
  size_t total = 0;
  for (int n = 0; n <= 6; ++n) {
    const auto fs = enumerate_forests(n, one);
    CHECK(fs.size() == catalan[n]);
    total += fs.size();
    for (const auto& f : fs) CHECK(forest_degree(f) == n);
  }
  CHECK(total == 197);
  CHECK(enumerate_forests(2, {"a", "b"}).size() == 8);
}

TEST_CASE("nonplanar projection merges mirror orders") {
  const PlanarTree x = sym("x");
  const PlanarTree l = node_sym("x", {node_sym("x", {sym("x")}), sym("x")});
  const PlanarTree r = node_sym("x", {sym("x"), node_sym("x", {sym("x")})});
  CHECK(project_nonplanar(env_tree(l)) == project_nonplanar(env_tree(r)));
  CHECK(project_nonplanar(env_term({l, x})) == project_nonplanar(env_term({x, r})));

  EnvElement all4;
  for (const auto& t : enumerate_trees(4, {"x"})) env_accum(all4, env_tree(t));
  const EnvElement proj = project_nonplanar(all4);
  CHECK(proj.terms.size() == 4);
  Rational maxc = 0, sum = 0;
  for (const auto& [f, c] : proj.terms) {
    maxc = std::max(maxc, c);
    sum += c;
  }
  CHECK(maxc == 2);
  CHECK(sum == 5);
}

TEST_CASE("printing") {
  const PlanarTree a = sym("a"), b = sym("b");
  CHECK(env_str(env_zero()) == "0");
  CHECK(env_str(env_unit()) == "1");
  CHECK(forest_str({a, b}) == "a b");
  const EnvElement e = env_add(env_scale(Rational(-1) / 2, env_term({a, b})), env_tree(a));
  CHECK(env_str(e) == "a - 1/2*a b");
}
