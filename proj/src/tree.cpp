#include "postlie/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

namespace postlie {

bool operator<(const PlanarTree& a, const PlanarTree& b) {
  if (!(a.dec == b.dec)) return a.dec < b.dec;
  return std::lexicographical_compare(a.children.begin(), a.children.end(),
                                      b.children.begin(), b.children.end());
}

PlanarTree leaf_sym(const std::string& s) { return PlanarTree(Decoration::of_symbol(s)); }
PlanarTree leaf_lab(int l) { return PlanarTree(Decoration::of_label(l)); }
PlanarTree leaf_unl() { return PlanarTree(Decoration::unlabeled()); }
PlanarTree node_sym(const std::string& s, std::vector<PlanarTree> c) {
  return PlanarTree(Decoration::of_symbol(s), std::move(c));
}
PlanarTree node_lab(int l, std::vector<PlanarTree> c) {
  return PlanarTree(Decoration::of_label(l), std::move(c));
}
PlanarTree node_unl(std::vector<PlanarTree> c) {
  return PlanarTree(Decoration::unlabeled(), std::move(c));
}

int vertex_count(const PlanarTree& t) {
  int n = 1;
  for (const auto& c : t.children) n += vertex_count(c);
  return n;
}

static void collect_paths(const PlanarTree& t, VertexPath& cur,
                          std::vector<VertexPath>& out) {
  out.push_back(cur);
  for (int i = 0; i < (int)t.children.size(); ++i) {
    cur.push_back(i);
    collect_paths(t.children[i], cur, out);
    cur.pop_back();
  }
}

std::vector<VertexPath> vertex_paths(const PlanarTree& t) {
  std::vector<VertexPath> out;
  VertexPath cur;
  collect_paths(t, cur, out);
  return out;
}

std::vector<int> canonical_vertex_order(const PlanarTree& t) {
  std::vector<int> out(vertex_count(t));
  for (int i = 0; i < (int)out.size(); ++i) out[i] = i;
  return out;
}

const PlanarTree& subtree_at(const PlanarTree& t, const VertexPath& p) {
  const PlanarTree* cur = &t;
  for (int i : p) {
    if (i < 0 || i >= (int)cur->children.size())
      throw std::out_of_range("bad vertex path");
    cur = &cur->children[i];
  }
  return *cur;
}

static PlanarTree* mutable_subtree_at(PlanarTree& t, const VertexPath& p) {
  PlanarTree* cur = &t;
  for (int i : p) cur = &cur->children[i];
  return cur;
}

const Decoration& decoration_at(const PlanarTree& t, int handle) {
  auto paths = vertex_paths(t);
  if (handle < 0 || handle >= (int)paths.size())
    throw std::out_of_range("bad vertex handle");
  return subtree_at(t, paths[handle]).dec;
}

int parent_of(const PlanarTree& t, int handle) {
  auto paths = vertex_paths(t);
  if (handle < 0 || handle >= (int)paths.size())
    throw std::out_of_range("bad vertex handle");
  if (handle == 0) return -1;
  VertexPath pp = paths[handle];
  pp.pop_back();
  for (int i = 0; i < (int)paths.size(); ++i)
    if (paths[i] == pp) return i;
  return -1;
}

bool is_proper_ancestor(const VertexPath& a, const VertexPath& b) {
  if (a.size() >= b.size()) return false;
  return std::equal(a.begin(), a.end(), b.begin());
}

std::vector<AngleAddress> minimal_angles(const PlanarTree& t, bool labeled_only) {
  auto paths = vertex_paths(t);
  std::vector<AngleAddress> out;
  for (int h = 0; h < (int)paths.size(); ++h) {
    if (labeled_only && !subtree_at(t, paths[h]).dec.is_label()) continue;
    out.push_back({h, 0});
  }
  return out;
}

std::optional<int> find_label(const PlanarTree& t, int label) {
  auto paths = vertex_paths(t);
  for (int h = 0; h < (int)paths.size(); ++h) {
    const Decoration& d = subtree_at(t, paths[h]).dec;
    if (d.is_label() && d.label == label) return h;
  }
  return std::nullopt;
}

std::vector<int> incoming_edges(const PlanarTree& t, int label) {
  auto v = find_label(t, label);
  if (!v) throw std::invalid_argument("label not present");
  auto paths = vertex_paths(t);
  VertexPath base = paths[*v];
  std::vector<int> out;
  for (int k = 0; k < (int)subtree_at(t, base).children.size(); ++k) {
    VertexPath cp = base;
    cp.push_back(k);
    for (int h = 0; h < (int)paths.size(); ++h)
      if (paths[h] == cp) { out.push_back(h); break; }
  }
  return out;
}

PlanarTree contract_edge(const PlanarTree& t, int v) {
  auto paths = vertex_paths(t);
  if (v < 0 || v >= (int)paths.size()) throw std::out_of_range("bad vertex handle");
  const VertexPath& p = paths[v];
  if (p.empty()) throw std::invalid_argument("cannot contract at the root");
  if (!subtree_at(t, p).dec.is_unlabeled())
    throw std::invalid_argument("contracted vertex must be unlabeled");
  PlanarTree out = t;
  VertexPath pp(p.begin(), p.end() - 1);
  int pos = p.back();
  PlanarTree* par = mutable_subtree_at(out, pp);
  std::vector<PlanarTree> grand = std::move(par->children[pos].children);
  par->children.erase(par->children.begin() + pos);
  par->children.insert(par->children.begin() + pos,
                       std::make_move_iterator(grand.begin()),
                       std::make_move_iterator(grand.end()));
  return out;
}

PlanarTree contract_all(const PlanarTree& t) {
  PlanarTree out(t.dec);
  for (const auto& c : t.children) {
    PlanarTree cc = contract_all(c);
    if (t.dec.is_unlabeled() && cc.dec.is_unlabeled()) {
      for (auto& g : cc.children) out.children.push_back(std::move(g));
    } else {
      out.children.push_back(std::move(cc));
    }
  }
  return out;
}

std::pair<PlanarTree, int> s2_flip(const PlanarTree& t, int v, bool transpose) {
  auto paths = vertex_paths(t);
  if (v < 0 || v >= (int)paths.size()) throw std::out_of_range("bad vertex handle");
  const PlanarTree& tv = subtree_at(t, paths[v]);
  if (!tv.dec.is_unlabeled()) throw std::invalid_argument("flip vertex must be unlabeled");
  if (tv.children.size() != 2) throw std::invalid_argument("flip vertex must have 2 incoming edges");
  if (!transpose) return {t, +1};
  PlanarTree out = t;
  PlanarTree* w = mutable_subtree_at(out, paths[v]);
  std::swap(w->children[0], w->children[1]);
  return {out, -1};
}

const std::vector<PlanarTree>& enumerate_shapes(int n) {
  static std::map<int, std::vector<PlanarTree>> cache;
  static std::recursive_mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<PlanarTree> out;
  if (n >= 1) {
    // root plus an ordered list of subtree shapes with n-1 vertices in total
    std::vector<std::vector<std::vector<PlanarTree>>> lists(n);  // lists[m] = child lists of total size m
    lists[0] = {{}};
    for (int m = 1; m < n; ++m) {
      for (int first = 1; first <= m; ++first)
        for (const auto& head : enumerate_shapes(first))
          for (const auto& rest : lists[m - first]) {
            std::vector<PlanarTree> l;
            l.push_back(head);
            l.insert(l.end(), rest.begin(), rest.end());
            lists[m].push_back(std::move(l));
          }
    }
    for (auto& l : lists[n - 1]) out.push_back(node_unl(std::move(l)));
  }
  return cache.emplace(n, std::move(out)).first->second;
}

static void assign_decorations(const PlanarTree& shape,
                               const std::vector<Decoration>& decs,
                               int& next, PlanarTree& out) {
  out.dec = decs[next++];
  out.children.resize(shape.children.size());
  for (int i = 0; i < (int)shape.children.size(); ++i)
    assign_decorations(shape.children[i], decs, next, out.children[i]);
}

std::vector<PlanarTree> enumerate_trees(int n, const std::vector<std::string>& alphabet) {
  std::vector<PlanarTree> out;
  if (n < 1 || alphabet.empty()) return out;
  std::vector<int> choice(n, 0);
  for (const auto& shape : enumerate_shapes(n)) {
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      std::vector<Decoration> decs(n);
      for (int i = 0; i < n; ++i) decs[i] = Decoration::of_symbol(alphabet[choice[i]]);
      PlanarTree t;
      int next = 0;
      assign_decorations(shape, decs, next, t);
      out.push_back(std::move(t));
      int k = n - 1;
      while (k >= 0 && choice[k] == (int)alphabet.size() - 1) choice[k--] = 0;
      if (k < 0) break;
      ++choice[k];
    }
  }
  return out;
}

std::vector<PlanarTree> enumerate_labeled_trees(int n) {
  std::vector<PlanarTree> out;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  for (const auto& shape : enumerate_shapes(n)) {
    std::vector<int> p = perm;
    do {
      std::vector<Decoration> decs(n);
      for (int i = 0; i < n; ++i) decs[i] = Decoration::of_label(p[i]);
      PlanarTree t;
      int next = 0;
      assign_decorations(shape, decs, next, t);
      out.push_back(std::move(t));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return out;
}

std::vector<PlanarTree> enumerate_partially_labeled(int vertices, int labels) {
  std::vector<PlanarTree> out;
  if (labels > vertices) return out;
  // choose which vertices (in canonical order) carry labels, then each bijection
  std::vector<int> mask(vertices, 0);
  std::fill(mask.end() - labels, mask.end(), 1);
  for (const auto& shape : enumerate_shapes(vertices)) {
    std::vector<int> m = mask;
    do {
      std::vector<int> lp(labels);
      for (int i = 0; i < labels; ++i) lp[i] = i + 1;
      do {
        std::vector<Decoration> decs(vertices);
        int li = 0;
        for (int i = 0; i < vertices; ++i)
          decs[i] = m[i] ? Decoration::of_label(lp[li++]) : Decoration::unlabeled();
        PlanarTree t;
        int next = 0;
        assign_decorations(shape, decs, next, t);
        out.push_back(std::move(t));
      } while (std::next_permutation(lp.begin(), lp.end()));
    } while (std::next_permutation(m.begin(), m.end()));
  }
  return out;
}

std::string tree_str(const PlanarTree& t) {
  std::string d;
  switch (t.dec.kind) {
    case Decoration::Kind::Unlabeled: d = "*"; break;
    case Decoration::Kind::Label: d = std::to_string(t.dec.label); break;
    case Decoration::Kind::Symbol: d = t.dec.symbol; break;
  }
  if (t.children.empty()) return d;
  d += "[";
  for (int i = 0; i < (int)t.children.size(); ++i) {
    if (i) d += ",";
    d += tree_str(t.children[i]);
  }
  d += "]";
  return d;
}

namespace {

struct TreeParser {
  const std::string& s;
  size_t pos = 0;

  explicit TreeParser(const std::string& str) : s(str) {}

  void skip_ws() { while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos; }

  PlanarTree parse() {
    skip_ws();
    PlanarTree t(parse_decoration());
    skip_ws();
    if (pos < s.size() && s[pos] == '[') {
      ++pos;
      skip_ws();
      if (pos < s.size() && s[pos] == ']') { ++pos; return t; }
      while (true) {
        t.children.push_back(parse());
        skip_ws();
        if (pos < s.size() && s[pos] == ',') { ++pos; continue; }
        if (pos < s.size() && s[pos] == ']') { ++pos; break; }
        throw std::invalid_argument("expected ',' or ']' at position " + std::to_string(pos));
      }
    }
    return t;
  }

  Decoration parse_decoration() {
    skip_ws();
    if (pos >= s.size()) throw std::invalid_argument("unexpected end of input");
    if (s[pos] == '*') { ++pos; return Decoration::unlabeled(); }
    if (std::isdigit((unsigned char)s[pos])) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      return Decoration::of_label(std::stoi(s.substr(start, pos - start)));
    }
    if (std::isalpha((unsigned char)s[pos]) || s[pos] == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum((unsigned char)s[pos]) || s[pos] == '_' || s[pos] == '\''))
        ++pos;
      return Decoration::of_symbol(s.substr(start, pos - start));
    }
    throw std::invalid_argument(std::string("unexpected character '") + s[pos] + "'");
  }
};

}  // namespace

PlanarTree parse_tree(const std::string& s) {
  TreeParser p(s);
  PlanarTree t = p.parse();
  p.skip_ws();
  if (p.pos != s.size()) throw std::invalid_argument("trailing input after tree");
  return t;
}

}  // namespace postlie
