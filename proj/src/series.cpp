#include "postlie/series.hpp"

#include <vector>

namespace postlie {

Rational bernoulli(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli: negative index");
  std::vector<Rational> b(k + 1);
  b[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational s = 0;
    for (int j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * b[j];
    b[m] = -s / (m + 1);
  }
  return b[k];
}

}  // namespace postlie
