#include "postlie/envelope.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "postlie/operad.hpp"

namespace postlie {

namespace {

void add_forest(EnvElement& acc, const Forest& f, const Rational& c) {
  if (c == 0) return;
  auto it = acc.terms.find(f);
  if (it == acc.terms.end()) {
    acc.terms.emplace(f, c);
  } else {
    it->second += c;
    if (it->second == 0) acc.terms.erase(it);
  }
}

}  // namespace

int forest_degree(const Forest& f) {
  int d = 0;
  for (const auto& t : f) d += vertex_count(t);
  return d;
}

EnvElement env_zero() { return {}; }

EnvElement env_unit() { return env_term(Forest{}, 1); }

EnvElement env_term(const Forest& f, const Rational& c) {
  EnvElement a;
  add_forest(a, f, c);
  return a;
}

EnvElement env_tree(const PlanarTree& t, const Rational& c) {
  return env_term(Forest{t}, c);
}

EnvElement env_add(const EnvElement& a, const EnvElement& b) {
  EnvElement out = a;
  env_accum(out, b);
  return out;
}

EnvElement env_sub(const EnvElement& a, const EnvElement& b) {
  EnvElement out = a;
  env_accum(out, b, -1);
  return out;
}

EnvElement env_scale(const Rational& c, const EnvElement& a) {
  EnvElement out;
  for (const auto& [f, d] : a.terms) add_forest(out, f, c * d);
  return out;
}

void env_accum(EnvElement& acc, const EnvElement& more, const Rational& c) {
  for (const auto& [f, d] : more.terms) add_forest(acc, f, c * d);
}

int env_degree(const EnvElement& a) {
  int d = 0;
  for (const auto& [f, c] : a.terms) d = std::max(d, forest_degree(f));
  return d;
}

Rational counit(const EnvElement& a) {
  auto it = a.terms.find(Forest{});
  return it == a.terms.end() ? Rational(0) : it->second;
}

EnvElement truncate(const EnvElement& a, int cap) {
  EnvElement out;
  for (const auto& [f, c] : a.terms)
    if (forest_degree(f) <= cap) out.terms.emplace(f, c);
  return out;
}

EnvElement degree_part(const EnvElement& a, int d) {
  EnvElement out;
  for (const auto& [f, c] : a.terms)
    if (forest_degree(f) == d) out.terms.emplace(f, c);
  return out;
}

EnvElement concat(const EnvElement& a, const EnvElement& b) {
  EnvElement out;
  for (const auto& [f, c] : a.terms)
    for (const auto& [g, d] : b.terms) {
      Forest fg = f;
      fg.insert(fg.end(), g.begin(), g.end());
      add_forest(out, fg, c * d);
    }
  return out;
}

EnvTensor tensor_product(const EnvElement& a, const EnvElement& b) {
  EnvTensor out;
  for (const auto& [f, c] : a.terms)
    for (const auto& [g, d] : b.terms) out[{f, g}] += c * d;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

void tensor_accum(EnvTensor& acc, const EnvTensor& more, const Rational& c) {
  if (c == 0) return;
  for (const auto& [fg, d] : more) {
    auto it = acc.find(fg);
    if (it == acc.end()) {
      acc.emplace(fg, c * d);
    } else {
      it->second += c * d;
      if (it->second == 0) acc.erase(it);
    }
  }
}

EnvTensor deshuffle_tensor(const EnvElement& a) {
  EnvTensor out;
  for (const auto& [f, c] : a.terms) {
    const size_t m = f.size();
    for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
      Forest left, right;
      for (size_t j = 0; j < m; ++j)
        (mask >> j & 1 ? left : right).push_back(f[j]);
      auto it = out.find({left, right});
      if (it == out.end()) {
        out.emplace(std::make_pair(left, right), c);
      } else {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

std::vector<std::pair<EnvElement, EnvElement>> deshuffle(const EnvElement& a) {
  std::vector<std::pair<EnvElement, EnvElement>> out;
  for (const auto& [fg, c] : deshuffle_tensor(a))
    out.emplace_back(env_term(fg.first, c), env_term(fg.second));
  return out;
}

bool is_primitive(const EnvElement& a) {
  EnvTensor expected = tensor_product(a, env_unit());
  tensor_accum(expected, tensor_product(env_unit(), a));
  return deshuffle_tensor(a) == expected;
}

EnvElement graft_tree(const PlanarTree& t, const PlanarTree& s) {
  EnvElement out;
  for (const auto& path : vertex_paths(s)) {
    PlanarTree grown = s;
    PlanarTree* v = &grown;
    for (int step : path) v = &v->children[step];
    v->children.insert(v->children.begin(), t);
    add_forest(out, Forest{grown}, 1);
  }
  return out;
}

namespace {

// Forest acting on a single tree; the result is a combination of single
// trees, which the recursion below relies on.
EnvElement tri_forest_tree(const Forest& F, const PlanarTree& t);

// Derivation action of a single tree on a forest.
EnvElement tri_tree_forest(const PlanarTree& x, const Forest& Y) {
  EnvElement out;
  for (size_t i = 0; i < Y.size(); ++i) {
    for (const auto& [g, c] : graft_tree(x, Y[i]).terms) {
      Forest f = Y;
      f[i] = g[0];
      add_forest(out, f, c);
    }
  }
  return out;
}

std::map<std::pair<Forest, PlanarTree>, EnvElement> tri_memo;
std::mutex tri_memo_mutex;

EnvElement tri_forest_tree(const Forest& F, const PlanarTree& t) {
  if (F.empty()) return env_tree(t);
  if (F.size() == 1) return graft_tree(F[0], t);
  const auto key = std::make_pair(F, t);
  {
    std::lock_guard<std::mutex> lock(tri_memo_mutex);
    auto it = tri_memo.find(key);
    if (it != tri_memo.end()) return it->second;
  }
  const PlanarTree& x = F[0];
  const Forest rest(F.begin() + 1, F.end());
  EnvElement out;
  for (const auto& [g, c] : tri_forest_tree(rest, t).terms)
    env_accum(out, graft_tree(x, g[0]), c);
  for (const auto& [g, c] : tri_tree_forest(x, rest).terms)
    env_accum(out, tri_forest_tree(g, t), -c);
  std::lock_guard<std::mutex> lock(tri_memo_mutex);
  return tri_memo.emplace(key, std::move(out)).first->second;
}

// F > (y_1 ... y_n) for n >= 2: split F over the iterated deshuffle and act
// factorwise, multiplying the resulting single-tree combinations in order.
void tri_forest_forest(const Forest& F, const Forest& Y, const Rational& coef,
                       EnvElement& acc) {
  const size_t m = F.size(), n = Y.size();
  std::vector<size_t> part(m, 0);
  while (true) {
    std::vector<Forest> blocks(n);
    for (size_t j = 0; j < m; ++j) blocks[part[j]].push_back(F[j]);
    std::vector<std::pair<Forest, Rational>> partial{{Forest{}, coef}};
    for (size_t i = 0; i < n && !partial.empty(); ++i) {
      EnvElement factor = tri_forest_tree(blocks[i], Y[i]);
      std::vector<std::pair<Forest, Rational>> next;
      for (const auto& [f, c] : partial)
        for (const auto& [g, d] : factor.terms) {
          Forest fg = f;
          fg.push_back(g[0]);
          next.emplace_back(std::move(fg), c * d);
        }
      partial = std::move(next);
    }
    for (const auto& [f, c] : partial) add_forest(acc, f, c);
    size_t j = 0;
    while (j < m && ++part[j] == n) part[j++] = 0;
    if (j == m) break;
  }
}

}  // namespace

EnvElement triangle(const EnvElement& x, const EnvElement& y) {
  EnvElement out;
  for (const auto& [F, c] : x.terms)
    for (const auto& [G, d] : y.terms) {
      const Rational coef = c * d;
      if (G.empty()) {
        if (F.empty()) add_forest(out, Forest{}, coef);
      } else if (F.empty()) {
        add_forest(out, G, coef);
      } else if (G.size() == 1) {
        env_accum(out, tri_forest_tree(F, G[0]), coef);
      } else {
        tri_forest_forest(F, G, coef, out);
      }
    }
  return out;
}

EnvElement brace(const EnvElement& X, const EnvElement& y) {
  if (!is_primitive(y)) throw std::invalid_argument("brace target is not primitive");
  return triangle(X, y);
}

EnvElement lie_bracket(const EnvElement& x, const EnvElement& y) {
  return env_sub(concat(x, y), concat(y, x));
}

EnvElement double_bracket(const EnvElement& x, const EnvElement& y) {
  if (!is_primitive(x) || !is_primitive(y))
    throw std::invalid_argument("double bracket arguments must be primitive");
  EnvElement out = env_sub(triangle(x, y), triangle(y, x));
  env_accum(out, lie_bracket(x, y));
  return out;
}

EnvElement gl_product(const EnvElement& A, const EnvElement& B) {
  EnvElement out;
  for (const auto& [fg, c] : deshuffle_tensor(A))
    env_accum(out, concat(env_term(fg.first), triangle(env_term(fg.second), B)), c);
  return out;
}

EnvElement phi(const std::vector<EnvElement>& word) {
  for (const auto& x : word)
    if (!is_primitive(x)) throw std::invalid_argument("word entries must be primitive");
  EnvElement out = env_unit();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = env_add(concat(*it, out), triangle(*it, out));
  return out;
}

std::vector<Forest> enumerate_forests(int n, const std::vector<std::string>& alphabet) {
  if (n == 0) return {Forest{}};
  std::vector<Forest> out;
  for (int k = 1; k <= n; ++k) {
    const auto heads = enumerate_trees(k, alphabet);
    const auto tails = enumerate_forests(n - k, alphabet);
    for (const auto& h : heads)
      for (const auto& tail : tails) {
        Forest f{h};
        f.insert(f.end(), tail.begin(), tail.end());
        out.push_back(std::move(f));
      }
  }
  return out;
}

EnvElement project_nonplanar(const EnvElement& a) {
  EnvElement out;
  for (const auto& [f, c] : a.terms) {
    Forest g;
    g.reserve(f.size());
    for (const auto& t : f) g.push_back(nonplanar_normalize(t));
    std::sort(g.begin(), g.end());
    add_forest(out, g, c);
  }
  return out;
}

std::string forest_str(const Forest& f) {
  if (f.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += ' ';
    s += tree_str(f[i]);
  }
  return s;
}

std::string env_str(const EnvElement& a) {
  if (a.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [f, c] : a.terms) {
    if (c < 0) {
      s += first ? "-" : " - ";
    } else if (!first) {
      s += " + ";
    }
    Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1 || f.empty()) {
      s += rational_str(mag);
      if (!f.empty()) s += '*';
    }
    if (!f.empty()) s += forest_str(f);
    first = false;
  }
  return s;
}

}  // namespace postlie
