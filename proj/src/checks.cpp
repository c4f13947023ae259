#include "postlie/checks.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "postlie/envelope.hpp"
#include "postlie/operad.hpp"
#include "postlie/render.hpp"
#include "postlie/series.hpp"
#include "postlie/struct_algebra.hpp"
#include "postlie/tree.hpp"
#include "postlie/uea.hpp"

namespace postlie {
namespace {

struct Ctx {
  std::string dir;
  unsigned seed;
};

// Returns the failure description, empty on success; fills detail with the
// scope that was covered.
using Body = std::function<std::string(const Ctx&, std::string&)>;

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

OperadElement opel(const Ctx& c, const std::string& name) {
  return operad_from_json(slurp(c.dir + "/" + name));
}

bool op_eq(const OperadElement& a, const OperadElement& b) { return a == b; }

std::vector<PlanarTree> trees_up_to(int maxv,
                                    const std::vector<std::string>& alphabet) {
  std::vector<PlanarTree> out;
  for (int n = 1; n <= maxv; ++n)
    for (const auto& t : enumerate_trees(n, alphabet)) out.push_back(t);
  return out;
}

int unlabeled_count(const PlanarTree& t) {
  int n = t.dec.is_unlabeled() ? 1 : 0;
  for (const auto& c : t.children) n += unlabeled_count(c);
  return n;
}

// the permutation induced on the composite when the outer tree is relabeled
std::vector<int> induced_perm(const std::vector<int>& sigma, int s, int n) {
  int m = static_cast<int>(sigma.size());
  int i = sigma[s - 1];
  std::vector<int> out(m + n - 1);
  auto g = [&](int l) { return l < s ? l : l + n - 1; };
  auto f = [&](int t) { return t < i ? t : t + n - 1; };
  for (int l = 1; l <= m; ++l)
    if (l != s) out[g(l) - 1] = f(sigma[l - 1]);
  for (int k = 1; k <= n; ++k) out[k + s - 2] = k + i - 1;
  return out;
}

// uniformly shaped partially labeled tree, at most maxv vertices, >=1 label
PlanarTree random_pl(std::mt19937& rng, int maxv) {
  int v = std::uniform_int_distribution<int>(1, maxv)(rng);
  std::vector<std::vector<int>> kids(v);
  for (int w = 1; w < v; ++w) {
    int p = std::uniform_int_distribution<int>(0, w - 1)(rng);
    int pos =
        std::uniform_int_distribution<int>(0, static_cast<int>(kids[p].size()))(rng);
    kids[p].insert(kids[p].begin() + pos, w);
  }
  int k = std::uniform_int_distribution<int>(1, v)(rng);
  std::vector<int> order(v);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> label(v, 0);
  for (int j = 0; j < k; ++j) label[order[j]] = j + 1;
  std::function<PlanarTree(int)> build = [&](int idx) {
    PlanarTree t;
    t.dec = label[idx] ? Decoration::of_label(label[idx]) : Decoration::unlabeled();
    for (int ch : kids[idx]) t.children.push_back(build(ch));
    return t;
  };
  return build(0);
}

EnvElement assoc_defect(const EnvElement& x, const EnvElement& y,
                        const EnvElement& z) {
  return env_sub(triangle(x, triangle(y, z)), triangle(triangle(x, y), z));
}

EnvElement pl1_defect(const EnvElement& x, const EnvElement& y,
                      const EnvElement& z) {
  EnvElement lhs = triangle(x, lie_bracket(y, z));
  EnvElement rhs =
      env_add(lie_bracket(triangle(x, y), z), lie_bracket(y, triangle(x, z)));
  return env_sub(lhs, rhs);
}

EnvElement pl2_defect(const EnvElement& x, const EnvElement& y,
                      const EnvElement& z) {
  EnvElement lhs = triangle(lie_bracket(x, y), z);
  return env_sub(lhs, env_sub(assoc_defect(x, y, z), assoc_defect(y, x, z)));
}

// iterated reduced coproduct, splitting the first tensor slot each round
std::map<std::vector<Forest>, Rational> reduced_iter(const EnvElement& x,
                                                     int times) {
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
}

// ---- criterion bodies ----

std::string chk_displays(const Ctx& c, std::string& detail) {
  if (!op_eq(compose_pt(opel(c, "corolla23.json"), 1, opel(c, "star_leaf.json")),
             opel(c, "compose_single_expected.json")))
    return "single-map composition display mismatch";
  if (!op_eq(compose_pt(opel(c, "corolla23.json"), 1, opel(c, "chain12.json")),
             opel(c, "compose_four_expected.json")))
    return "four-term composition display mismatch";
  if (!op_eq(compose_lw(opel(c, "chat_T.json"), 2, opel(c, "chat_R.json")),
             opel(c, "chat_expected.json")))
    return "signed composition display mismatch";
  PlanarTree con_in = tree_from_json(slurp(c.dir + "/contraction_input.json"));
  PlanarTree con_out = tree_from_json(slurp(c.dir + "/contraction_expected.json"));
  if (!(contract_all(con_in) == con_out)) return "contraction display mismatch";
  OperadElement chain = opel(c, "chain21.json");
  if (!op_eq(op_sub(compose_pt(chain, 2, chain), compose_pt(chain, 1, chain)),
             opel(c, "corolla_expected.json")))
    return "corolla identity display mismatch";
  detail = "5 displays";
  return "";
}

std::string chk_operad_axioms(const Ctx& c, std::string& detail) {
  long units = 0, equi = 0, assoc = 0;
  for (int v = 1; v <= 4; ++v)
    for (int k = 1; k <= v; ++k)
      for (const auto& t : enumerate_partially_labeled(v, k)) {
        OperadElement x = op_term(t);
        if (!op_eq(compose_pt(op_unit(), 1, x), x))
          return "left unit law fails at " + tree_str(t);
        for (int i = 1; i <= k; ++i)
          if (!op_eq(compose_pt(x, i, op_unit()), x))
            return "right unit law fails at " + tree_str(t);
        ++units;
      }

  const auto y2 = enumerate_labeled_trees(2);
  for (int v = 2; v <= 4; ++v)
    for (int k = 2; k <= v; ++k)
      for (const auto& xt : enumerate_partially_labeled(v, k)) {
        OperadElement x = op_term(xt);
        std::vector<int> sigma(k);
        std::iota(sigma.begin(), sigma.end(), 1);
        do {
          for (int s = 1; s <= k; ++s)
            for (const auto& yt : y2) {
              OperadElement y = op_term(yt);
              OperadElement lhs = compose_pt(symmetric_action(x, sigma), sigma[s - 1], y);
              OperadElement rhs =
                  symmetric_action(compose_pt(x, s, y), induced_perm(sigma, s, 2));
              if (!op_eq(lhs, rhs))
                return "equivariance fails at " + tree_str(xt);
              ++equi;
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
      }

  std::vector<PlanarTree> pool;
  for (int v = 1; v <= 3; ++v)
    for (int k = 1; k <= v; ++k)
      for (const auto& t : enumerate_partially_labeled(v, k)) pool.push_back(t);
  for (const auto& xt : pool)
    for (const auto& yt : pool)
      for (const auto& zt : pool) {
        OperadElement x = op_term(xt), y = op_term(yt), z = op_term(zt);
        int m = x.arity, n = y.arity;
        for (int i = 1; i <= m; ++i) {
          for (int j = 1; j <= n; ++j) {
            if (!op_eq(compose_pt(x, i, compose_pt(y, j, z)),
                       compose_pt(compose_pt(x, i, y), i - 1 + j, z)))
              return "sequential associativity fails at " + tree_str(xt) + ", " +
                     tree_str(yt) + ", " + tree_str(zt);
            ++assoc;
          }
          for (int j = i + 1; j <= m; ++j) {
            if (!op_eq(compose_pt(compose_pt(x, i, y), j + n - 1, z),
                       compose_pt(compose_pt(x, j, z), i, y)))
              return "parallel associativity fails at " + tree_str(xt) + ", " +
                     tree_str(yt) + ", " + tree_str(zt);
            ++assoc;
          }
        }
      }

  std::mt19937 rng(c.seed);
  for (int it = 0; it < 500; ++it) {
    PlanarTree xt = random_pl(rng, 6), yt = random_pl(rng, 6), zt = random_pl(rng, 6);
    OperadElement x = op_term(xt), y = op_term(yt), z = op_term(zt);
    int m = x.arity, n = y.arity;
    int i = std::uniform_int_distribution<int>(1, m)(rng);
    int j = std::uniform_int_distribution<int>(1, n)(rng);
    if (!op_eq(compose_pt(x, i, compose_pt(y, j, z)),
               compose_pt(compose_pt(x, i, y), i - 1 + j, z)))
      return "seeded sequential associativity fails at " + tree_str(xt) + ", " +
             tree_str(yt) + ", " + tree_str(zt);
    ++assoc;
    if (m >= 2) {
      int a = std::uniform_int_distribution<int>(1, m - 1)(rng);
      int b = std::uniform_int_distribution<int>(a + 1, m)(rng);
      if (!op_eq(compose_pt(compose_pt(x, a, y), b + n - 1, z),
                 compose_pt(compose_pt(x, b, z), a, y)))
        return "seeded parallel associativity fails at " + tree_str(xt) + ", " +
               tree_str(yt) + ", " + tree_str(zt);
      ++assoc;
    }
  }
  detail = std::to_string(units) + " unit, " + std::to_string(equi) +
           " equivariance, " + std::to_string(assoc) + " associativity instances";
  return "";
}

std::string chk_chat_assoc(const Ctx&, std::string& detail) {
  std::vector<PlanarTree> pool;
  for (int n = 2; n <= 3; ++n)
    for (const auto& t : lw_basis(n))
      if (!is_fully_labeled(t) && unlabeled_count(t) <= 2) pool.push_back(t);
  long checked = 0, undefined = 0;
  for (const auto& tt : pool)
    for (const auto& rt : pool)
      for (const auto& st : pool) {
        OperadElement t = op_term(tt), r = op_term(rt), s = op_term(st);
        for (int i = 1; i <= t.arity; ++i)
          for (int j = 1; j <= r.arity; ++j) {
            OperadElement lhs, rhs;
            bool lok = true, rok = true;
            try {
              lhs = compose_lw(t, i, compose_lw(r, j, s));
            } catch (const std::invalid_argument&) {
              lok = false;
            }
            try {
              rhs = compose_lw(compose_lw(t, i, r), i - 1 + j, s);
            } catch (const std::invalid_argument&) {
              rok = false;
            }
            if (lok != rok)
              return "one nesting undefined at " + tree_str(tt) + ", " +
                     tree_str(rt) + ", " + tree_str(st);
            if (!lok) {
              ++undefined;
              continue;
            }
            if (!op_eq(lhs, rhs))
              return "nested associativity fails at " + tree_str(tt) + ", " +
                     tree_str(rt) + ", " + tree_str(st);
            ++checked;
          }
      }
  detail = std::to_string(checked) + " nestings over " +
           std::to_string(pool.size()) + " trees (" + std::to_string(undefined) +
           " undefined)";
  return "";
}

std::string chk_psb(const Ctx&, std::string& detail) {
  long count = 0;
  for (int n = 2; n <= 4; ++n)
    for (const auto& t : lw_basis(n)) {
      if (!op_eq(from_postlie_word(to_postlie_word(t)), op_term(t)))
        return "section property fails at " + tree_str(t);
      ++count;
    }

  WordSum jacobi{{parse_word("b(1,b(2,3))"), 1},
                 {parse_word("b(b(1,2),3)"), -1},
                 {parse_word("b(2,b(1,3))"), -1}};
  WordSum pl1{{parse_word("t(3,b(1,2))"), 1},
              {parse_word("b(t(3,1),2)"), -1},
              {parse_word("b(1,t(3,2))"), -1}};
  WordSum pl2{{parse_word("t(b(1,2),3)"), 1},
              {parse_word("t(1,t(2,3))"), -1},
              {parse_word("t(t(1,2),3)"), 1},
              {parse_word("t(2,t(1,3))"), 1},
              {parse_word("t(t(2,1),3)"), -1}};
  Span ideal = ideal_span3();
  OperadElement him_j = from_postlie_word(jacobi);
  if (!from_postlie_word(pl1).is_zero()) return "grafting relator 1 has nonzero image";
  if (!from_postlie_word(pl2).is_zero()) return "grafting relator 2 has nonzero image";
  if (!op_eq(him_j, jacobi_generator())) return "Jacobi image is not the ideal generator";
  if (!ideal.contains(him_j)) return "Jacobi image escapes the ideal";
  if (ideal.contains(op_term(parse_tree("3[1,2]"))))
    return "ideal membership is not proper";
  detail = std::to_string(count) + " basis trees, 3 relators";
  return "";
}

std::string chk_postlie_axioms(const Ctx&, std::string& detail) {
  long count = 0;
  auto sweep = [&](const std::vector<PlanarTree>& pool) -> std::string {
    for (const auto& x : pool)
      for (const auto& y : pool)
        for (const auto& z : pool) {
          if (!pl1_defect(env_tree(x), env_tree(y), env_tree(z)).is_zero())
            return "derivation law fails at " + tree_str(x) + ", " + tree_str(y) +
                   ", " + tree_str(z);
          if (!pl2_defect(env_tree(x), env_tree(y), env_tree(z)).is_zero())
            return "associator law fails at " + tree_str(x) + ", " + tree_str(y) +
                   ", " + tree_str(z);
          ++count;
        }
    return "";
  };
  if (auto r = sweep(trees_up_to(4, {"a"})); !r.empty()) return r;
  if (auto r = sweep(trees_up_to(3, {"a", "b"})); !r.empty()) return r;
  detail = std::to_string(count) + " triples";
  return "";
}

std::string chk_braces(const Ctx& c, std::string& detail) {
  const auto pool = trees_up_to(3, {"a", "b"});
  std::vector<std::vector<Forest>> forests(4);
  for (int d = 1; d <= 3; ++d) forests[d] = enumerate_forests(d, {"a", "b"});
  std::mt19937 rng(c.seed);
  auto rand_tree = [&]() {
    return pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
  };
  auto rand_forest = [&]() {
    int d = std::uniform_int_distribution<int>(1, 3)(rng);
    const auto& fd = forests[d];
    return fd[std::uniform_int_distribution<size_t>(0, fd.size() - 1)(rng)];
  };

  const StructAlgebra A = [] {
    StructAlgebra B;
    B.dim = 3;
    B.basis = {"e", "f", "h"};
    auto set = [&](int i, int j, int k, Rational v) { B.bracket_c[{i, j, k}] = v; };
    set(0, 1, 2, 1); set(1, 0, 2, -1);
    set(2, 0, 0, 2); set(0, 2, 0, -2);
    set(2, 1, 1, -2); set(1, 2, 1, 2);
    for (const auto& [ijk, v] : B.bracket_c) B.triangle_c[ijk] = -v;
    return B;
  }();

  for (int it = 0; it < 200; ++it) {
    const auto xf = rand_forest();
    const auto yf = rand_forest();
    const PlanarTree z = rand_tree();
    EnvElement X = env_term(xf), Y = env_term(yf), Z = env_tree(z);

    // composition: T(X; T(Y; z)) = T(X * Y; z)
    if (!(triangle(X, triangle(Y, Z)) == triangle(gl_product(X, Y), Z)))
      return "brace composition fails at " + forest_str(xf) + " ; " + forest_str(yf);

    // bracket compatibility: T(X; [x,y]) splits over the coproduct of X
    const PlanarTree zx = rand_tree(), zy = rand_tree();
    EnvElement lhs = brace(X, lie_bracket(env_tree(zx), env_tree(zy)));
    EnvElement rhs = env_zero();
    for (const auto& [split, coef] : deshuffle_tensor(X))
      env_accum(rhs,
                lie_bracket(triangle(env_term(split.first), env_tree(zx)),
                            triangle(env_term(split.second), env_tree(zy))),
                coef);
    if (!(lhs == rhs)) return "brace bracket law fails at " + forest_str(xf);

    // recursion: peel the first argument
    if (xf.size() >= 2) {
      std::vector<PlanarTree> rest(xf.begin() + 1, xf.end());
      EnvElement rec = triangle(env_tree(xf[0]), brace(env_term(rest), Z));
      for (size_t k = 0; k < rest.size(); ++k) {
        EnvElement word = env_unit();
        for (size_t j = 0; j < rest.size(); ++j)
          word = concat(word, j == k ? triangle(env_tree(xf[0]), env_tree(rest[j]))
                                     : env_tree(rest[j]));
        env_accum(rec, brace(word, Z), Rational(-1));
      }
      if (!(brace(X, Z) == rec)) return "brace recursion fails at " + forest_str(xf);
    }

    // first-slot collapse on structure constants: swapping two adjacent
    // arguments differs by inserting their bracket
    {
      int m = std::uniform_int_distribution<int>(2, 3)(rng);
      std::vector<AlgElement> xs;
      for (int i = 0; i < m; ++i)
        xs.push_back(basis_element(A, std::uniform_int_distribution<int>(0, 2)(rng)));
      AlgElement y = basis_element(A, std::uniform_int_distribution<int>(0, 2)(rng));
      int k = std::uniform_int_distribution<int>(0, m - 2)(rng);
      auto swapped = xs;
      std::swap(swapped[k], swapped[k + 1]);
      auto contracted = xs;
      contracted[k] = bracket(A, xs[k], xs[k + 1]);
      contracted.erase(contracted.begin() + k + 1);
      AlgElement lhs2 = alg_sub(brace_eval(A, xs, y), brace_eval(A, swapped, y));
      if (!alg_is_zero(alg_sub(lhs2, brace_eval(A, contracted, y))))
        return "brace symmetry collapse fails on structure constants";
    }
  }
  detail = "200 seeded instances, 4 laws each";
  return "";
}

std::string chk_dbialgebra(const Ctx&, std::string& detail) {
  long count = 0;
  auto sweep = [&](const std::vector<std::string>& alphabet, int cap) -> std::string {
    std::vector<std::vector<Forest>> by_deg(cap + 1);
    for (int d = 1; d <= cap; ++d) by_deg[d] = enumerate_forests(d, alphabet);
    std::vector<PlanarTree> trees = trees_up_to(cap, alphabet);

    // unit laws and primitivity of the generators
    for (int d = 1; d <= cap; ++d)
      for (const auto& f : by_deg[d]) {
        EnvElement F = env_term(f);
        if (!(triangle(env_unit(), F) == F)) return "left unit action fails";
        if (!(triangle(F, env_unit()) == env_zero())) return "counit action fails";
      }
    for (const auto& t : trees)
      if (!is_primitive(env_tree(t))) return "tree is not primitive: " + tree_str(t);

    // coproduct is multiplicative over the D-product
    for (int i = 1; i < cap; ++i)
      for (int j = 1; i + j <= cap; ++j)
        for (const auto& fx : by_deg[i])
          for (const auto& fy : by_deg[j]) {
            EnvElement X = env_term(fx), Y = env_term(fy);
            EnvTensor lhs = deshuffle_tensor(triangle(X, Y));
            EnvTensor rhs;
            for (const auto& [sx, cx] : deshuffle_tensor(X))
              for (const auto& [sy, cy] : deshuffle_tensor(Y))
                tensor_accum(
                    rhs,
                    tensor_product(
                        triangle(env_term(sx.first), env_term(sy.first)),
                        triangle(env_term(sx.second), env_term(sy.second))),
                    cx * cy);
            if (lhs != rhs)
              return "coproduct compatibility fails at " + forest_str(fx) + " > " +
                     forest_str(fy);
            ++count;

            // and the Grossman-Larson product is a coalgebra morphism
            EnvTensor glhs = deshuffle_tensor(gl_product(X, Y));
            EnvTensor grhs;
            for (const auto& [sx, cx] : deshuffle_tensor(X))
              for (const auto& [sy, cy] : deshuffle_tensor(Y))
                tensor_accum(
                    grhs,
                    tensor_product(
                        gl_product(env_term(sx.first), env_term(sy.first)),
                        gl_product(env_term(sx.second), env_term(sy.second))),
                    cx * cy);
            if (glhs != grhs)
              return "GL coalgebra morphism fails at " + forest_str(fx) + " * " +
                     forest_str(fy);
            if (counit(gl_product(X, Y)) != counit(X) * counit(Y))
              return "GL counit fails";
          }

    // action on a product splits over the coproduct; GL is associative
    for (int i = 1; i <= cap - 2; ++i)
      for (int j = 1; i + j < cap; ++j)
        for (int k = 1; i + j + k <= cap; ++k)
          for (const auto& fx : by_deg[i])
            for (const auto& fy : by_deg[j])
              for (const auto& fz : by_deg[k]) {
                EnvElement X = env_term(fx), Y = env_term(fy), Z = env_term(fz);
                EnvElement lhs = triangle(X, concat(Y, Z));
                EnvElement rhs = env_zero();
                for (const auto& [sx, cx] : deshuffle_tensor(X))
                  env_accum(rhs,
                            concat(triangle(env_term(sx.first), Y),
                                   triangle(env_term(sx.second), Z)),
                            cx);
                if (!(lhs == rhs))
                  return "product action fails at " + forest_str(fx);
                if (!(gl_product(gl_product(X, Y), Z) ==
                      gl_product(X, gl_product(Y, Z))))
                  return "GL associativity fails at " + forest_str(fx) + ", " +
                         forest_str(fy) + ", " + forest_str(fz);
                ++count;
              }

    // left-multiplication expansion and primitives closed under commutator
    for (const auto& x : trees)
      for (const auto& t : trees) {
        if (vertex_count(x) + vertex_count(t) > cap) continue;
        if (!is_primitive(lie_bracket(env_tree(x), env_tree(t))))
          return "commutator of primitives is not primitive";
        for (const auto& y : trees) {
          if (vertex_count(x) + vertex_count(t) + vertex_count(y) > cap)
            continue;
          EnvElement xe = env_tree(x), te = env_tree(t), ye = env_tree(y);
          EnvElement lhs = triangle(concat(xe, te), ye);
          EnvElement rhs =
              env_sub(triangle(xe, triangle(te, ye)), triangle(triangle(xe, te), ye));
          if (!(lhs == rhs))
            return "left-multiplication law fails at " + tree_str(x) + ", " +
                   tree_str(t) + ", " + tree_str(y);
          ++count;
        }
      }
    return "";
  };
  if (auto r = sweep({"a"}, 6); !r.empty()) return r;
  if (auto r = sweep({"a", "b"}, 5); !r.empty()) return r;
  detail = std::to_string(count) + " instances through degree 6 (one symbol) and 5 (two)";
  return "";
}

std::string chk_phi(const Ctx&, std::string& detail) {
  std::vector<EnvElement> prims = {
      env_tree(parse_tree("a")), env_tree(parse_tree("b")),
      env_tree(parse_tree("b[a]")),
      lie_bracket(env_tree(parse_tree("a")), env_tree(parse_tree("b")))};
  long words = 0;
  std::vector<int> idx;
  std::function<std::string(int)> go = [&](int len) -> std::string {
    if (!idx.empty()) {
      std::vector<EnvElement> w;
      for (int i : idx) w.push_back(prims[i]);
      EnvElement out = phi(w);
      EnvElement lead = env_unit();
      for (const auto& x : w) lead = concat(lead, x);
      const int n = static_cast<int>(w.size());
      if (counit(out) != 0) return "image has nonzero counit";
      if (!reduced_iter(env_sub(out, lead), n - 1).empty())
        return "leading-term filtration fails at word length " + std::to_string(n);
      if (n >= 2 && reduced_iter(out, n - 1).empty())
        return "image collapses too deep at word length " + std::to_string(n);
      EnvTensor rhs;
      for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        std::vector<EnvElement> wl, wr;
        for (int j = 0; j < n; ++j) (mask >> j & 1 ? wl : wr).push_back(w[j]);
        tensor_accum(rhs, tensor_product(phi(wl), phi(wr)));
      }
      if (deshuffle_tensor(out) != rhs)
        return "coalgebra morphism fails at word length " + std::to_string(n);
      ++words;
    }
    if (len == 4) return "";
    for (int i = 0; i < static_cast<int>(prims.size()); ++i) {
      idx.push_back(i);
      if (auto r = go(len + 1); !r.empty()) return r;
      idx.pop_back();
    }
    return "";
  };
  if (auto r = go(0); !r.empty()) return r;
  detail = std::to_string(words) + " words over 4 primitives";
  return "";
}

std::string chk_chi(const Ctx&, std::string& detail) {
  const FreeCarrier fc;
  Series<FreeCarrier> x = series_from(fc, env_tree(parse_tree("a")), 1);
  Series<FreeCarrier> ch = chi(fc, x, 6);
  for (int k = 1; k <= 6; ++k)
    if (!fc.primitive(series_at(fc, ch, k)))
      return "degree " + std::to_string(k) + " component is not primitive";
  if (!(exp_wrt(fc, Prod::GL, ch, 6) == exp_wrt(fc, Prod::Cat, x, 6)))
    return "exponential matching fails through degree 6";
  detail = "degree 6, one generator";
  return "";
}

std::string chk_prelie_projection(const Ctx&, std::string& detail) {
  const FreeCarrier np{true};
  const FreeCarrier planar;
  const EnvElement a = env_tree(parse_tree("a"));
  Series<FreeCarrier> x = series_from(np, a, 1);
  Series<FreeCarrier> om = prelie_magnus(np, x, 5);
  const EnvElement aa = np.tri(a, a);
  if (!(series_at(np, om, 2) == np.scale(Rational(-1, 2), aa)))
    return "degree-2 coefficient is not -1/2";
  EnvElement deg3 = np.add(np.scale(Rational(1, 4), np.tri(aa, a)),
                           np.scale(Rational(1, 12), np.tri(a, aa)));
  if (!(series_at(np, om, 3) == deg3))
    return "degree-3 coefficients are not 1/4 and 1/12";
  Series<FreeCarrier> ch = chi(planar, series_from(planar, a, 1), 5);
  for (int k = 1; k <= 5; ++k)
    if (!(project_nonplanar(series_at(planar, ch, k)) == series_at(np, om, k)))
      return "projection disagrees with the Magnus expansion at degree " +
             std::to_string(k);
  detail = "coefficients -1/2, 1/4, 1/12; agreement through degree 5";
  return "";
}

std::string chk_comp_bch(const Ctx&, std::string& detail) {
  const FreeCarrier fc;
  const EnvElement a = env_tree(parse_tree("a"));
  const EnvElement b = env_tree(parse_tree("b"));
  Series<FreeCarrier> x = series_from(fc, a, 1);
  Series<FreeCarrier> y = series_from(fc, b, 1);
  const int cap = 4;

  Series<FreeCarrier> z = bch(fc, Bracket::Lie, x, y, cap);
  if (!(series_at(fc, z, 2) == env_scale(Rational(1, 2), lie_bracket(a, b))))
    return "BCH degree-2 coefficient is not 1/2";
  if (!(series_at(fc, z, 3) ==
        env_scale(Rational(1, 12), env_add(lie_bracket(a, lie_bracket(a, b)),
                                           lie_bracket(b, lie_bracket(b, a))))))
    return "BCH degree-3 coefficient is not 1/12";
  Series<FreeCarrier> w = bch(fc, Bracket::Double, x, y, cap);
  if (!(series_at(fc, w, 2) == env_scale(Rational(1, 2), double_bracket(a, b))))
    return "second-bracket BCH degree-2 coefficient is not 1/2";
  if (!(series_at(fc, w, 3) ==
        env_scale(Rational(1, 12),
                  env_add(double_bracket(a, double_bracket(a, b)),
                          double_bracket(b, double_bracket(b, a))))))
    return "second-bracket BCH degree-3 coefficient is not 1/12";

  Series<FreeCarrier> acted = series_tri(fc, exp_wrt(fc, Prod::Cat, x, cap), y, cap);
  if (!(sharp(fc, x, y, cap) == bch(fc, Bracket::Lie, x, acted, cap)))
    return "composition law via the acted argument fails";

  Series<FreeCarrier> chx = chi(fc, x, cap);
  Series<FreeCarrier> chy = chi(fc, y, cap);
  Series<FreeCarrier> inner =
      bch(fc, Bracket::Lie, x, exp_nabla(fc, chx, y, cap), cap);
  if (!(bch(fc, Bracket::Double, chx, chy, cap) == chi(fc, inner, cap)))
    return "composition law through chi fails";

  const FreeCarrier np{true};
  Series<FreeCarrier> xn = series_from(np, project_nonplanar(a), 1);
  Series<FreeCarrier> yn = series_from(np, project_nonplanar(b), 1);
  Series<FreeCarrier> cxn = chi(np, xn, cap);
  Series<FreeCarrier> cyn = chi(np, yn, cap);
  Series<FreeCarrier> lhs = exp_rt(np, bch(np, Bracket::Double, cxn, cyn, cap), cap);
  Series<FreeCarrier> rhs = series_from(np, np.unit(), 0);
  series_accum(np, rhs, xn);
  series_accum(np, rhs, exp_nabla(np, cxn, yn, cap));
  if (!(lhs == rhs)) return "composition law through the D-exponential fails";
  detail = "three laws through degree 4, BCH coefficients in both brackets";
  return "";
}

std::string chk_bracexp(const Ctx&, std::string& detail) {
  const FreeCarrier fc;
  const EnvElement a = env_tree(parse_tree("a"));
  const EnvElement b = env_tree(parse_tree("b"));
  Series<FreeCarrier> x = series_from(fc, a, 1);
  Series<FreeCarrier> y = series_from(fc, b, 1);
  const int cap = 6;
  Series<FreeCarrier> lhs = exp_nabla(fc, chi(fc, x, cap), y, cap);
  Series<FreeCarrier> rhs = y;
  EnvElement word = env_unit();
  for (int n = 1; n + 1 <= cap; ++n) {
    word = concat(word, a);
    series_accum(fc, rhs, series_from(fc, brace(word, b), n + 1),
                 Rational(1) / factorial(n));
  }
  if (!(lhs == rhs)) return "brace expansion differs from the operator exponential";
  detail = "degree 6 total, braces through 5 arguments";
  return "";
}

std::string chk_flow_ode(const Ctx& c, std::string& detail) {
  const FreeCarrier fc;
  if (!series_is_zero(fc, flow_residual(fc, env_tree(parse_tree("a")), 4)))
    return "residual is nonzero on the free carrier";
  StructAlgebra A = algebra_from_json(slurp(c.dir + "/alg_lie_trivial.json"));
  if (!validate(A).ok()) return "trivial-action fixture fails validation";
  const AlgCarrier ac{A};
  if (!series_is_zero(ac, flow_residual(ac, u_letter(0), 4)))
    return "residual is nonzero on the trivial-action fixture";
  detail = "through t^4, free and trivial-action carriers";
  return "";
}

std::string chk_counting(const Ctx&, std::string& detail) {
  std::vector<long long> cat{1};
  for (int n = 1; n <= 7; ++n) {
    long long s = 0;
    for (int i = 0; i < n; ++i) s += cat[i] * cat[n - 1 - i];
    cat.push_back(s);
  }
  for (int n = 1; n <= 7; ++n) {
    if (static_cast<long long>(enumerate_shapes(n).size()) != cat[n - 1])
      return "shape count differs at " + std::to_string(n) + " vertices";
    if (static_cast<long long>(enumerate_trees(n, {"a"}).size()) != cat[n - 1])
      return "one-symbol tree count differs at " + std::to_string(n);
    long long two = cat[n - 1] << n;
    if (static_cast<long long>(enumerate_trees(n, {"a", "b"}).size()) != two)
      return "two-symbol tree count differs at " + std::to_string(n);
  }
  for (int n = 0; n <= 6; ++n)
    if (static_cast<long long>(enumerate_forests(n, {"a"}).size()) != cat[n])
      return "forest count differs at degree " + std::to_string(n);
  detail = "shapes, trees and forests vs the recursion, n <= 7";
  return "";
}

std::string chk_negative_control(const Ctx& c, std::string& detail) {
  for (const char* name :
       {"alg_lie_trivial.json", "alg_prelie_1d.json", "alg_nonabelian_2d.json"}) {
    StructAlgebra A = algebra_from_json(slurp(c.dir + "/" + name));
    if (!validate(A).ok()) return std::string(name) + " fails validation";
    StructAlgebra B = algebra_from_json(algebra_json(A));
    if (B.dim != A.dim || B.basis != A.basis || B.bracket_c != A.bracket_c ||
        B.triangle_c != A.triangle_c)
      return std::string(name) + " does not round-trip";
  }
  StructAlgebra bad = algebra_from_json(slurp(c.dir + "/alg_corrupted.json"));
  ValidationReport r = validate(bad);
  if (r.ok()) return "corrupted fixture passes validation";
  bool witnessed = false;
  for (const auto& a : r.axioms) witnessed |= !a.passed && !a.witness.empty();
  if (!witnessed) return "corrupted fixture rejected without a witness";
  detail = "3 fixtures valid, corrupted fixture rejected with witness";
  return "";
}

const std::vector<std::pair<const char*, Body>>& check_table() {
  static const std::vector<std::pair<const char*, Body>> table = {
      {"operad/displays", chk_displays},
      {"operad/axioms", chk_operad_axioms},
      {"operad/chat-assoc", chk_chat_assoc},
      {"operad/psb", chk_psb},
      {"freepostlie/postlie-axioms", chk_postlie_axioms},
      {"freepostlie/braces", chk_braces},
      {"freepostlie/d-bialgebra", chk_dbialgebra},
      {"freepostlie/phi", chk_phi},
      {"magnus/chi", chk_chi},
      {"magnus/prelie-projection", chk_prelie_projection},
      {"magnus/comp-bch", chk_comp_bch},
      {"magnus/brace-exponential", chk_bracexp},
      {"magnus/flow-ode", chk_flow_ode},
      {"trees/counting", chk_counting},
      {"structconst/negative-control", chk_negative_control},
  };
  return table;
}

}  // namespace

std::vector<CheckResult> run_acceptance(const std::string& fixtures_dir,
                                        const std::string& filter,
                                        unsigned seed) {
  Ctx ctx{fixtures_dir, seed};
  std::vector<CheckResult> out;
  for (const auto& [name, body] : check_table()) {
    if (!filter.empty() && std::string(name).find(filter) == std::string::npos)
      continue;
    CheckResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      std::string detail;
      std::string failure = body(ctx, detail);
      r.passed = failure.empty();
      r.detail = r.passed ? detail : failure;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
               .count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace postlie
