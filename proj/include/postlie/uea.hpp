#pragma once

#include <map>
#include <utility>
#include <vector>

#include "postlie/rational.hpp"
#include "postlie/struct_algebra.hpp"

namespace postlie {

/// Element of the enveloping algebra of a StructAlgebra in the ordered-word
/// basis: sorted index words with rational coefficients; the empty word is
/// the unit. Out-of-order products straighten through the bracket.
using UElement = std::map<std::vector<int>, Rational>;

UElement u_zero();
UElement u_unit();
UElement u_letter(int i, const Rational& c = 1);
/// Degree-one element from a coefficient vector.
UElement u_from_alg(const AlgElement& x);
/// Extracts the single-letter part as a coefficient vector.
AlgElement u_to_alg(const StructAlgebra& A, const UElement& x);

UElement u_add(const UElement& a, const UElement& b);
UElement u_sub(const UElement& a, const UElement& b);
UElement u_scale(const Rational& c, const UElement& a);
void u_accum(UElement& acc, const UElement& more, const Rational& c = 1);
bool u_is_zero(const UElement& a);
/// Coefficient of the empty word.
Rational u_counit(const UElement& a);

/// Associative product with PBW straightening: xy = yx + [x,y] rewrites
/// every word into sorted normal form.
UElement u_mul(const StructAlgebra& A, const UElement& a, const UElement& b);

using UTensor = std::map<std::pair<std::vector<int>, std::vector<int>>, Rational>;

/// Coproduct with the letters primitive; splits every word over ordered
/// complementary subsequences (sorted words stay sorted).
UTensor u_deshuffle(const UElement& a);
bool u_primitive(const UElement& a);

/// D-product: a word acts on a single letter through the brace recursion and
/// on longer words through the iterated coproduct.
UElement u_tri(const StructAlgebra& A, const UElement& x, const UElement& y);

/// Grossman-Larson product A * B = A_(1) . (A_(2) > B).
UElement u_gl(const StructAlgebra& A, const UElement& x, const UElement& y);

}  // namespace postlie
