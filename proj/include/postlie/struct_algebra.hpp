#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "postlie/envelope.hpp"
#include "postlie/rational.hpp"

namespace postlie {

/// Finite-dimensional algebra with two bilinear products given by sparse
/// structure constants: [e_i,e_j] = sum_k c(i,j,k) e_k and
/// e_i > e_j = sum_k t(i,j,k) e_k. Indices are 0-based.
struct StructAlgebra {
  int dim = 0;
  std::vector<std::string> basis;
  std::map<std::tuple<int, int, int>, Rational> bracket_c;
  std::map<std::tuple<int, int, int>, Rational> triangle_c;
};

/// Coefficient vector in the basis of a StructAlgebra.
using AlgElement = std::vector<Rational>;

AlgElement alg_zero(const StructAlgebra& A);
AlgElement basis_element(const StructAlgebra& A, int i);
AlgElement alg_add(const AlgElement& x, const AlgElement& y);
AlgElement alg_sub(const AlgElement& x, const AlgElement& y);
AlgElement alg_scale(const Rational& c, const AlgElement& x);
bool alg_is_zero(const AlgElement& x);

/// Bilinear contraction with the bracket tensor.
AlgElement bracket(const StructAlgebra& A, const AlgElement& x, const AlgElement& y);
/// Bilinear contraction with the triangle tensor.
AlgElement triangle(const StructAlgebra& A, const AlgElement& x, const AlgElement& y);
/// x > y - y > x + [x,y].
AlgElement double_bracket(const StructAlgebra& A, const AlgElement& x, const AlgElement& y);

/// One axiom outcome; witness holds offending basis indices when it failed.
struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::vector<int> witness;
};

struct ValidationReport {
  std::vector<AxiomResult> axioms;
  bool ok() const {
    for (const auto& a : axioms)
      if (!a.passed) return false;
    return true;
  }
};

/// Checks antisymmetry, the Jacobi identity, and both post-Lie axioms on all
/// basis triples; failures carry a witness instead of throwing.
ValidationReport validate(const StructAlgebra& A);

/// T_n(x_1,...,x_n;y) through the recursion
/// T_n(x_1,...;y) = x_1 > T_{n-1}(x_2,...;y)
///                  - sum_k T_{n-1}(x_2,...,x_1 > x_k,...;y).
AlgElement brace_eval(const StructAlgebra& A, const std::vector<AlgElement>& xs,
                      const AlgElement& y);

/// Evaluates a primitive element of the free enveloping algebra in A: a tree
/// with root generator g and subtrees s_1..s_k maps to
/// T_k(eval(s_1),...,eval(s_k); assignment(g)), and a length-n forest in a
/// primitive combination maps to 1/n times its left-nested bracket word.
AlgElement evaluate(const StructAlgebra& A, const EnvElement& e,
                    const std::map<std::string, AlgElement>& assignment);

}  // namespace postlie
