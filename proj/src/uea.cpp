#include "postlie/uea.hpp"

#include <algorithm>
#include <stdexcept>

namespace postlie {

UElement u_zero() { return {}; }

UElement u_unit() {
  UElement r;
  r[{}] = 1;
  return r;
}

UElement u_letter(int i, const Rational& c) {
  UElement r;
  if (c != 0) r[{i}] = c;
  return r;
}

UElement u_from_alg(const AlgElement& x) {
  UElement r;
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (x[i] != 0) r[{i}] = x[i];
  return r;
}

AlgElement u_to_alg(const StructAlgebra& A, const UElement& x) {
  AlgElement v(A.dim, Rational(0));
  for (const auto& [w, c] : x)
    if (w.size() == 1) v[w[0]] += c;
  return v;
}

void u_accum(UElement& acc, const UElement& more, const Rational& c) {
  if (c == 0) return;
  for (const auto& [w, d] : more) {
    auto it = acc.find(w);
    if (it == acc.end()) {
      acc.emplace(w, c * d);
    } else {
      it->second += c * d;
      if (it->second == 0) acc.erase(it);
    }
  }
}

UElement u_add(const UElement& a, const UElement& b) {
  UElement r = a;
  u_accum(r, b);
  return r;
}

UElement u_sub(const UElement& a, const UElement& b) {
  UElement r = a;
  u_accum(r, b, Rational(-1));
  return r;
}

UElement u_scale(const Rational& c, const UElement& a) {
  UElement r;
  if (c == 0) return r;
  for (const auto& [w, d] : a) r[w] = c * d;
  return r;
}

bool u_is_zero(const UElement& a) { return a.empty(); }

Rational u_counit(const UElement& a) {
  auto it = a.find({});
  return it == a.end() ? Rational(0) : it->second;
}

namespace {

// Rewrites a word into the sorted basis through xy = yx + [x,y], accumulating
// into acc. Each swap lowers the inversion count and each bracket shortens the
// word, so the worklist terminates.
void straighten_into(const StructAlgebra& A, std::vector<int> w, Rational c,
                     UElement& acc) {
  std::vector<std::pair<std::vector<int>, Rational>> work;
  work.emplace_back(std::move(w), std::move(c));
  while (!work.empty()) {
    auto [word, coef] = std::move(work.back());
    work.pop_back();
    size_t i = 0;
    while (i + 1 < word.size() && word[i] <= word[i + 1]) ++i;
    if (i + 1 >= word.size()) {
      auto it = acc.find(word);
      if (it == acc.end()) {
        acc.emplace(std::move(word), coef);
      } else {
        it->second += coef;
        if (it->second == 0) acc.erase(it);
      }
      continue;
    }
    int a = word[i];
    int b = word[i + 1];
    auto swapped = word;
    std::swap(swapped[i], swapped[i + 1]);
    work.emplace_back(std::move(swapped), coef);
    for (int k = 0; k < A.dim; ++k) {
      auto it = A.bracket_c.find({a, b, k});
      if (it == A.bracket_c.end() || it->second == 0) continue;
      std::vector<int> contracted;
      contracted.reserve(word.size() - 1);
      for (size_t j = 0; j < word.size(); ++j) {
        if (j == i + 1) continue;
        contracted.push_back(j == i ? k : word[j]);
      }
      work.emplace_back(std::move(contracted), coef * it->second);
    }
  }
}

}  // namespace

UElement u_mul(const StructAlgebra& A, const UElement& a, const UElement& b) {
  UElement out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      straighten_into(A, std::move(w), ca * cb, out);
    }
  return out;
}

UTensor u_deshuffle(const UElement& a) {
  UTensor out;
  for (const auto& [w, c] : a) {
    size_t m = w.size();
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
      std::vector<int> left, right;
      for (size_t p = 0; p < m; ++p)
        (mask >> p & 1 ? left : right).push_back(w[p]);
      auto key = std::make_pair(std::move(left), std::move(right));
      auto it = out.find(key);
      if (it == out.end()) {
        out.emplace(std::move(key), c);
      } else {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

bool u_primitive(const UElement& a) {
  if (u_counit(a) != 0) return false;
  UTensor expected;
  for (const auto& [w, c] : a) {
    expected[{w, {}}] += c;
    expected[{{}, w}] += c;
  }
  std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
  return u_deshuffle(a) == expected;
}

namespace {

// One word acting on another: the brace recursion on a single target letter,
// extended to longer targets by distributing the source letters over ordered
// blocks, one block per target letter.
UElement tri_words(const StructAlgebra& A, const std::vector<int>& F,
                   const std::vector<int>& G) {
  if (G.empty()) return F.empty() ? u_unit() : u_zero();
  if (F.empty()) {
    UElement r;
    r[G] = 1;
    return r;
  }
  if (G.size() == 1) {
    std::vector<AlgElement> xs;
    xs.reserve(F.size());
    for (int i : F) xs.push_back(basis_element(A, i));
    return u_from_alg(brace_eval(A, xs, basis_element(A, G[0])));
  }
  size_t m = F.size();
  size_t n = G.size();
  UElement out;
  std::vector<size_t> assign(m, 0);
  while (true) {
    std::vector<std::vector<AlgElement>> blocks(n);
    for (size_t p = 0; p < m; ++p)
      blocks[assign[p]].push_back(basis_element(A, F[p]));
    UElement term = u_unit();
    for (size_t i = 0; i < n && !u_is_zero(term); ++i) {
      AlgElement fi = brace_eval(A, blocks[i], basis_element(A, G[i]));
      term = u_mul(A, term, u_from_alg(fi));
    }
    u_accum(out, term);
    size_t p = 0;
    while (p < m && ++assign[p] == n) assign[p++] = 0;
    if (p == m) break;
  }
  return out;
}

}  // namespace

UElement u_tri(const StructAlgebra& A, const UElement& x, const UElement& y) {
  UElement out;
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y)
      u_accum(out, tri_words(A, wx, wy), cx * cy);
  return out;
}

UElement u_gl(const StructAlgebra& A, const UElement& x, const UElement& y) {
  UElement out;
  for (const auto& [split, c] : u_deshuffle(x)) {
    UElement left;
    left[split.first] = 1;
    UElement acted = u_tri(A, UElement{{split.second, Rational(1)}}, y);
    u_accum(out, u_mul(A, left, acted), c);
  }
  return out;
}

}  // namespace postlie
