#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "postlie/rational.hpp"
#include "postlie/tree.hpp"

namespace postlie {

/// Ordered sequence of planar trees; the empty forest is the algebra unit.
using Forest = std::vector<PlanarTree>;

/// Total vertex count of the forest.
int forest_degree(const Forest& f);

/// Rational linear combination of forests; zero coefficients are never stored.
struct EnvElement {
  std::map<Forest, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const EnvElement& a, const EnvElement& b) {
    return a.terms == b.terms;
  }
  friend bool operator!=(const EnvElement& a, const EnvElement& b) {
    return !(a == b);
  }
};

EnvElement env_zero();
/// The empty forest with coefficient 1.
EnvElement env_unit();
EnvElement env_term(const Forest& f, const Rational& c = 1);
/// Single-tree forest.
EnvElement env_tree(const PlanarTree& t, const Rational& c = 1);
EnvElement env_add(const EnvElement& a, const EnvElement& b);
EnvElement env_sub(const EnvElement& a, const EnvElement& b);
EnvElement env_scale(const Rational& c, const EnvElement& a);
void env_accum(EnvElement& acc, const EnvElement& more, const Rational& c = 1);

/// Largest forest degree present (0 for the zero element).
int env_degree(const EnvElement& a);
/// Coefficient of the empty forest.
Rational counit(const EnvElement& a);
/// Drops every forest of degree greater than cap.
EnvElement truncate(const EnvElement& a, int cap);
/// Keeps only the forests of degree exactly d.
EnvElement degree_part(const EnvElement& a, int d);

/// Bilinear extension of forest juxtaposition; associative with unit 1.
EnvElement concat(const EnvElement& a, const EnvElement& b);

/// Rational linear combination of ordered pairs of forests.
using EnvTensor = std::map<std::pair<Forest, Forest>, Rational>;

EnvTensor tensor_product(const EnvElement& a, const EnvElement& b);
void tensor_accum(EnvTensor& acc, const EnvTensor& more, const Rational& c = 1);

/// Deshuffle coproduct: every forest splits over the ordered complementary
/// subsequences of its trees, so single trees are primitive.
EnvTensor deshuffle_tensor(const EnvElement& a);
/// The coproduct as (left, right) summands, coefficients folded into the left.
std::vector<std::pair<EnvElement, EnvElement>> deshuffle(const EnvElement& a);

/// True iff deshuffle(a) = a x 1 + 1 x a.
bool is_primitive(const EnvElement& a);

/// Sum over the vertices v of s of the tree obtained by attaching t as the
/// new leftmost child of v.
EnvElement graft_tree(const PlanarTree& t, const PlanarTree& s);

/// The D-product on the enveloping algebra: single trees graft leftmost,
/// forests act on a single tree through the left-factor recursion
/// (x.X) > y = x > (X > y) - (x > X) > y, and multi-tree targets split the
/// left factor through the iterated deshuffle coproduct.
EnvElement triangle(const EnvElement& x, const EnvElement& y);

/// T(X;y) = X > y; y must be primitive.
EnvElement brace(const EnvElement& X, const EnvElement& y);

/// Commutator xy - yx of the concatenation product.
EnvElement lie_bracket(const EnvElement& x, const EnvElement& y);

/// x > y - y > x + [x,y] on primitive arguments; the second Lie structure.
EnvElement double_bracket(const EnvElement& x, const EnvElement& y);

/// Grossman-Larson product A * B = A_(1) . (A_(2) > B).
EnvElement gl_product(const EnvElement& A, const EnvElement& B);

/// Image of a word of primitives under M_{x1} o ... o M_{xn} applied to the
/// unit, where M_x(A) = x.A + x > A; equals the iterated Grossman-Larson
/// product of the entries.
EnvElement phi(const std::vector<EnvElement>& word);

/// All forests with total vertex count n over the given symbol alphabet.
std::vector<Forest> enumerate_forests(int n, const std::vector<std::string>& alphabet);

/// Sorts children recursively and the trees of each forest: the projection
/// onto the symmetrized, order-forgetting model.
EnvElement project_nonplanar(const EnvElement& a);

std::string forest_str(const Forest& f);
std::string env_str(const EnvElement& a);

}  // namespace postlie
