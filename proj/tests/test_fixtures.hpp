#pragma once

#include <map>
#include <tuple>

#include "postlie/struct_algebra.hpp"

namespace postlie::fixtures {

inline void set3(std::map<std::tuple<int, int, int>, Rational>& m, int i, int j,
                 int k, Rational v) {
  m[{i, j, k}] = v;
}

// [e,f] = h, [h,e] = 2e, [h,f] = -2f, trivial triangle
inline StructAlgebra sl2_trivial() {
  StructAlgebra A;
  A.dim = 3;
  A.basis = {"e", "f", "h"};
  set3(A.bracket_c, 0, 1, 2, 1);
  set3(A.bracket_c, 1, 0, 2, -1);
  set3(A.bracket_c, 2, 0, 0, 2);
  set3(A.bracket_c, 0, 2, 0, -2);
  set3(A.bracket_c, 2, 1, 1, -2);
  set3(A.bracket_c, 1, 2, 1, 2);
  return A;
}

inline StructAlgebra prelie_1d() {
  StructAlgebra A;
  A.dim = 1;
  A.basis = {"e"};
  set3(A.triangle_c, 0, 0, 0, 1);
  return A;
}

// [x,y] = y, trivial triangle
inline StructAlgebra nonabelian_2d() {
  StructAlgebra A;
  A.dim = 2;
  A.basis = {"x", "y"};
  set3(A.bracket_c, 0, 1, 1, 1);
  set3(A.bracket_c, 1, 0, 1, -1);
  return A;
}

// the bracket of sl2 with x > y = -[x,y]: both products nonzero
inline StructAlgebra sl2_minus_ad() {
  StructAlgebra A = sl2_trivial();
  for (const auto& [ijk, v] : A.bracket_c) A.triangle_c[ijk] = -v;
  return A;
}

}  // namespace postlie::fixtures
