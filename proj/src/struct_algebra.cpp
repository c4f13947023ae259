#include "postlie/struct_algebra.hpp"

#include <stdexcept>

namespace postlie {

namespace {

void check_dim(const StructAlgebra& A, const AlgElement& x) {
  if (int(x.size()) != A.dim) throw std::invalid_argument("element dimension mismatch");
}

AlgElement contract(const StructAlgebra& A,
                    const std::map<std::tuple<int, int, int>, Rational>& tensor,
                    const AlgElement& x, const AlgElement& y) {
  check_dim(A, x);
  check_dim(A, y);
  AlgElement out(A.dim, Rational(0));
  for (const auto& [ijk, v] : tensor) {
    const auto& [i, j, k] = ijk;
    const Rational p = x[i] * y[j];
    if (p != 0) out[k] += p * v;
  }
  return out;
}

}  // namespace

AlgElement alg_zero(const StructAlgebra& A) { return AlgElement(A.dim, Rational(0)); }

AlgElement basis_element(const StructAlgebra& A, int i) {
  if (i < 0 || i >= A.dim) throw std::out_of_range("basis index out of range");
  AlgElement e(A.dim, Rational(0));
  e[i] = 1;
  return e;
}

AlgElement alg_add(const AlgElement& x, const AlgElement& y) {
  if (x.size() != y.size()) throw std::invalid_argument("element dimension mismatch");
  AlgElement out = x;
  for (size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

AlgElement alg_sub(const AlgElement& x, const AlgElement& y) {
  if (x.size() != y.size()) throw std::invalid_argument("element dimension mismatch");
  AlgElement out = x;
  for (size_t i = 0; i < y.size(); ++i) out[i] -= y[i];
  return out;
}

AlgElement alg_scale(const Rational& c, const AlgElement& x) {
  AlgElement out = x;
  for (auto& v : out) v *= c;
  return out;
}

bool alg_is_zero(const AlgElement& x) {
  for (const auto& v : x)
    if (v != 0) return false;
  return true;
}

AlgElement bracket(const StructAlgebra& A, const AlgElement& x, const AlgElement& y) {
  return contract(A, A.bracket_c, x, y);
}

AlgElement triangle(const StructAlgebra& A, const AlgElement& x, const AlgElement& y) {
  return contract(A, A.triangle_c, x, y);
}

AlgElement double_bracket(const StructAlgebra& A, const AlgElement& x, const AlgElement& y) {
  AlgElement out = alg_sub(triangle(A, x, y), triangle(A, y, x));
  return alg_add(out, bracket(A, x, y));
}

ValidationReport validate(const StructAlgebra& A) {
  ValidationReport report;
  std::vector<AlgElement> e;
  for (int i = 0; i < A.dim; ++i) e.push_back(basis_element(A, i));

  AxiomResult anti{"antisymmetry"};
  for (int i = 0; i < A.dim && anti.passed; ++i)
    for (int j = i; j < A.dim && anti.passed; ++j)
      if (!alg_is_zero(alg_add(bracket(A, e[i], e[j]), bracket(A, e[j], e[i])))) {
        anti.passed = false;
        anti.witness = {i, j};
      }
  report.axioms.push_back(anti);

  AxiomResult jacobi{"jacobi"};
  for (int i = 0; i < A.dim && jacobi.passed; ++i)
    for (int j = 0; j < A.dim && jacobi.passed; ++j)
      for (int k = 0; k < A.dim && jacobi.passed; ++k) {
        AlgElement s = bracket(A, e[i], bracket(A, e[j], e[k]));
        s = alg_add(s, bracket(A, e[j], bracket(A, e[k], e[i])));
        s = alg_add(s, bracket(A, e[k], bracket(A, e[i], e[j])));
        if (!alg_is_zero(s)) {
          jacobi.passed = false;
          jacobi.witness = {i, j, k};
        }
      }
  report.axioms.push_back(jacobi);

  // x > [y,z] = [x > y, z] + [y, x > z]
  AxiomResult pl1{"triangle-derivation"};
  for (int i = 0; i < A.dim && pl1.passed; ++i)
    for (int j = 0; j < A.dim && pl1.passed; ++j)
      for (int k = 0; k < A.dim && pl1.passed; ++k) {
        AlgElement lhs = triangle(A, e[i], bracket(A, e[j], e[k]));
        AlgElement rhs = alg_add(bracket(A, triangle(A, e[i], e[j]), e[k]),
                                 bracket(A, e[j], triangle(A, e[i], e[k])));
        if (!alg_is_zero(alg_sub(lhs, rhs))) {
          pl1.passed = false;
          pl1.witness = {i, j, k};
        }
      }
  report.axioms.push_back(pl1);

  // [x,y] > z = a(x,y,z) - a(y,x,z) with a the triangle associator
  auto assoc = [&](const AlgElement& x, const AlgElement& y, const AlgElement& z) {
    return alg_sub(triangle(A, x, triangle(A, y, z)), triangle(A, triangle(A, x, y), z));
  };
  AxiomResult pl2{"bracket-associator"};
  for (int i = 0; i < A.dim && pl2.passed; ++i)
    for (int j = 0; j < A.dim && pl2.passed; ++j)
      for (int k = 0; k < A.dim && pl2.passed; ++k) {
        AlgElement lhs = triangle(A, bracket(A, e[i], e[j]), e[k]);
        AlgElement rhs = alg_sub(assoc(e[i], e[j], e[k]), assoc(e[j], e[i], e[k]));
        if (!alg_is_zero(alg_sub(lhs, rhs))) {
          pl2.passed = false;
          pl2.witness = {i, j, k};
        }
      }
  report.axioms.push_back(pl2);

  return report;
}

AlgElement brace_eval(const StructAlgebra& A, const std::vector<AlgElement>& xs,
                      const AlgElement& y) {
  check_dim(A, y);
  if (xs.empty()) return y;
  const AlgElement& x1 = xs.front();
  std::vector<AlgElement> rest(xs.begin() + 1, xs.end());
  AlgElement out = triangle(A, x1, brace_eval(A, rest, y));
  for (size_t k = 0; k < rest.size(); ++k) {
    std::vector<AlgElement> hit = rest;
    hit[k] = triangle(A, x1, rest[k]);
    out = alg_sub(out, brace_eval(A, hit, y));
  }
  return out;
}

namespace {

AlgElement evaluate_tree(const StructAlgebra& A, const PlanarTree& t,
                         const std::map<std::string, AlgElement>& assignment) {
  if (!t.dec.is_symbol())
    throw std::invalid_argument("evaluation requires generator-decorated trees");
  auto it = assignment.find(t.dec.symbol);
  if (it == assignment.end())
    throw std::invalid_argument("unassigned generator: " + t.dec.symbol);
  std::vector<AlgElement> args;
  args.reserve(t.children.size());
  for (const auto& c : t.children) args.push_back(evaluate_tree(A, c, assignment));
  return brace_eval(A, args, it->second);
}

}  // namespace

AlgElement evaluate(const StructAlgebra& A, const EnvElement& e,
                    const std::map<std::string, AlgElement>& assignment) {
  if (!is_primitive(e)) throw std::invalid_argument("evaluation requires a primitive element");
  AlgElement out = alg_zero(A);
  for (const auto& [f, c] : e.terms) {
    AlgElement word = evaluate_tree(A, f.front(), assignment);
    for (size_t i = 1; i < f.size(); ++i)
      word = bracket(A, word, evaluate_tree(A, f[i], assignment));
    out = alg_add(out, alg_scale(c / Rational(f.size()), word));
  }
  return out;
}

}  // namespace postlie
