#include "postlie/operad.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

namespace postlie {

namespace {

void collect_labels(const PlanarTree& t, std::vector<int>& out) {
  if (t.dec.is_label()) out.push_back(t.dec.label);
  for (const auto& c : t.children) collect_labels(c, out);
}

void add_term(std::map<PlanarTree, Rational>& m, const PlanarTree& t, const Rational& c) {
  if (c == 0) return;
  auto it = m.find(t);
  if (it == m.end()) {
    m.emplace(t, c);
  } else {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

PlanarTree relabel(const PlanarTree& t, const std::function<int(int)>& f) {
  PlanarTree out(t.dec.is_label() ? Decoration::of_label(f(t.dec.label)) : t.dec);
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(relabel(c, f));
  return out;
}

PlanarTree* subtree_ptr(PlanarTree& t, const VertexPath& p) {
  PlanarTree* cur = &t;
  for (int i : p) cur = &cur->children[i];
  return cur;
}

void labeled_paths_rec(const PlanarTree& t, VertexPath& cur, std::vector<VertexPath>& out) {
  if (t.dec.is_label()) out.push_back(cur);
  for (int i = 0; i < (int)t.children.size(); ++i) {
    cur.push_back(i);
    labeled_paths_rec(t.children[i], cur, out);
    cur.pop_back();
  }
}

std::vector<VertexPath> labeled_paths(const PlanarTree& t) {
  std::vector<VertexPath> out;
  VertexPath cur;
  labeled_paths_rec(t, cur, out);
  return out;
}

void unlabeled_paths_rec(const PlanarTree& t, VertexPath& cur, std::vector<VertexPath>& out) {
  if (t.dec.is_unlabeled()) out.push_back(cur);
  for (int i = 0; i < (int)t.children.size(); ++i) {
    cur.push_back(i);
    unlabeled_paths_rec(t.children[i], cur, out);
    cur.pop_back();
  }
}

std::vector<VertexPath> unlabeled_paths(const PlanarTree& t) {
  std::vector<VertexPath> out;
  VertexPath cur;
  unlabeled_paths_rec(t, cur, out);
  return out;
}

VertexPath label_path(const PlanarTree& t, int label) {
  std::function<bool(const PlanarTree&, VertexPath&)> walk =
      [&](const PlanarTree& u, VertexPath& cur) -> bool {
    if (u.dec.is_label() && u.dec.label == label) return true;
    for (int i = 0; i < (int)u.children.size(); ++i) {
      cur.push_back(i);
      if (walk(u.children[i], cur)) return true;
      cur.pop_back();
    }
    return false;
  };
  VertexPath cur;
  if (!walk(t, cur)) throw std::invalid_argument("label not present");
  return cur;
}

PlanarTree contract_at_path(const PlanarTree& t, const VertexPath& p) {
  // same splice as contract_edge, addressed by path
  PlanarTree out = t;
  VertexPath pp(p.begin(), p.end() - 1);
  PlanarTree* par = subtree_ptr(out, pp);
  int pos = p.back();
  std::vector<PlanarTree> grand = std::move(par->children[pos].children);
  par->children.erase(par->children.begin() + pos);
  par->children.insert(par->children.begin() + pos,
                       std::make_move_iterator(grand.begin()),
                       std::make_move_iterator(grand.end()));
  return out;
}

// All graftings of the children of the vertex at `slot` of T onto the labeled
// vertices of R: the slot vertex is replaced by R, and every map from its
// incoming edges to labeled vertices of R contributes one term. Fibers keep
// their order and enter to the left of existing children.
void graft_terms(const PlanarTree& T, const VertexPath& slot, const PlanarTree& R,
                 const Rational& coef, std::map<PlanarTree, Rational>& acc) {
  const std::vector<PlanarTree>& in_edges = subtree_at(T, slot).children;
  int k = (int)in_edges.size();
  std::vector<VertexPath> targets = labeled_paths(R);
  int L = (int)targets.size();
  if (k > 0 && L == 0) return;  // no labeled vertex to graft onto

  std::vector<int> phi(k, 0);
  while (true) {
    PlanarTree rcopy = R;
    // process targets last-to-first so recorded paths stay valid
    for (int v = L - 1; v >= 0; --v) {
      std::vector<PlanarTree> fiber;
      for (int j = 0; j < k; ++j)
        if (phi[j] == v) fiber.push_back(in_edges[j]);
      if (fiber.empty()) continue;
      PlanarTree* tv = subtree_ptr(rcopy, targets[v]);
      tv->children.insert(tv->children.begin(),
                          std::make_move_iterator(fiber.begin()),
                          std::make_move_iterator(fiber.end()));
    }
    PlanarTree term = T;
    *subtree_ptr(term, slot) = std::move(rcopy);
    add_term(acc, term, coef);

    int j = k - 1;
    while (j >= 0 && phi[j] == L - 1) phi[j--] = 0;
    if (j < 0) break;
    ++phi[j];
  }
}

// signed composition at a slot whose parent is labeled: sum over the flips of
// the unlabeled binary vertices of R, contract R's unlabeled region, graft,
// then contract the edge above the region's root copy
void signed_graft(const PlanarTree& T, const VertexPath& slot, const PlanarTree& R,
                  const Rational& coef, std::map<PlanarTree, Rational>& acc) {
  std::vector<VertexPath> unl = unlabeled_paths(R);
  int u = (int)unl.size();
  for (int mask = 0; mask < (1 << u); ++mask) {
    PlanarTree rs = R;
    int sign = 1;
    for (int v = u - 1; v >= 0; --v) {
      if (!(mask >> v & 1)) continue;
      PlanarTree* tv = subtree_ptr(rs, unl[v]);
      std::swap(tv->children[0], tv->children[1]);
      sign = -sign;
    }
    std::map<PlanarTree, Rational> plain;
    graft_terms(T, slot, contract_all(rs), coef * sign, plain);
    for (const auto& [term, c] : plain)
      add_term(acc, contract_at_path(term, slot), c);
  }
}

// common case analysis of the signed composition, labels already final
void plug_core(const PlanarTree& T, const VertexPath& slot, const PlanarTree& R,
               const Rational& coef, std::map<PlanarTree, Rational>& acc) {
  bool signed_case = false;
  if (!is_fully_labeled(R)) {
    if (!is_w_tree(R)) throw std::invalid_argument("not a W-tree");
    if (!slot.empty()) {
      VertexPath pp(slot.begin(), slot.end() - 1);
      signed_case = subtree_at(T, pp).dec.is_label();
    }
  }
  if (signed_case)
    signed_graft(T, slot, R, coef, acc);
  else
    graft_terms(T, slot, R, coef, acc);
}

enum class Mode { Plain, Signed };

// relabel T and R around slot i and graft; Mode::Signed applies the case
// analysis of the LW composition
void compose_basis(const PlanarTree& T, int i, const PlanarTree& R, int n,
                   const Rational& coef, std::map<PlanarTree, Rational>& acc, Mode mode) {
  PlanarTree Tr = relabel(T, [&](int l) { return l <= i ? l : l + n - 1; });
  PlanarTree Rr = relabel(R, [&](int l) { return l + i - 1; });
  VertexPath slot = label_path(Tr, i);
  if (mode == Mode::Signed)
    plug_core(Tr, slot, Rr, coef, acc);
  else
    graft_terms(Tr, slot, Rr, coef, acc);
}

}  // namespace

int tree_arity(const PlanarTree& t) {
  std::vector<int> labels;
  collect_labels(t, labels);
  std::sort(labels.begin(), labels.end());
  for (int k = 0; k < (int)labels.size(); ++k)
    if (labels[k] != k + 1) throw std::invalid_argument("labels are not a bijection onto {1..n}");
  if (labels.empty()) throw std::invalid_argument("tree has no labeled vertex");
  return (int)labels.size();
}

bool is_fully_labeled(const PlanarTree& t) {
  if (!t.dec.is_label()) return false;
  for (const auto& c : t.children)
    if (!is_fully_labeled(c)) return false;
  return true;
}

namespace {
bool w_rec(const PlanarTree& t) {  // subtree conditions below an unlabeled vertex
  if (t.dec.is_unlabeled()) {
    if (t.children.size() != 2) return false;
    return w_rec(t.children[0]) && w_rec(t.children[1]);
  }
  return is_fully_labeled(t);  // labeled vertex: nothing unlabeled below
}
}  // namespace

bool is_w_tree(const PlanarTree& t) {
  return t.dec.is_unlabeled() && w_rec(t);
}

bool is_lw_tree(const PlanarTree& t) { return is_fully_labeled(t) || is_w_tree(t); }

OperadElement op_zero(int arity) { return {arity, {}}; }

OperadElement op_term(const PlanarTree& t, const Rational& c) {
  OperadElement x{tree_arity(t), {}};
  if (c != 0) x.terms.emplace(t, c);
  return x;
}

OperadElement op_unit() { return op_term(leaf_lab(1)); }

OperadElement op_add(const OperadElement& a, const OperadElement& b) {
  if (a.arity != b.arity) throw std::invalid_argument("arity mismatch");
  OperadElement out = a;
  for (const auto& [t, c] : b.terms) add_term(out.terms, t, c);
  return out;
}

OperadElement op_sub(const OperadElement& a, const OperadElement& b) {
  return op_add(a, op_scale(-1, b));
}

OperadElement op_scale(const Rational& c, const OperadElement& a) {
  OperadElement out{a.arity, {}};
  if (c == 0) return out;
  for (const auto& [t, k] : a.terms) out.terms.emplace(t, c * k);
  return out;
}

OperadElement compose_pt(const OperadElement& T, int i, const OperadElement& R) {
  if (i < 1 || i > T.arity) throw std::out_of_range("slot out of range");
  OperadElement out = op_zero(T.arity + R.arity - 1);
  for (const auto& [t, ct] : T.terms)
    for (const auto& [r, cr] : R.terms)
      compose_basis(t, i, r, R.arity, ct * cr, out.terms, Mode::Plain);
  return out;
}

OperadElement symmetric_action(const OperadElement& x, const std::vector<int>& sigma) {
  if ((int)sigma.size() != x.arity) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(sigma.size(), false);
  for (int v : sigma) {
    if (v < 1 || v > (int)sigma.size() || seen[v - 1])
      throw std::invalid_argument("not a permutation");
    seen[v - 1] = true;
  }
  OperadElement out = op_zero(x.arity);
  for (const auto& [t, c] : x.terms)
    add_term(out.terms, relabel(t, [&](int l) { return sigma[l - 1]; }), c);
  return out;
}

OperadElement compose_lw(const OperadElement& T, int i, const OperadElement& R) {
  if (i < 1 || i > T.arity) throw std::out_of_range("slot out of range");
  OperadElement out = op_zero(T.arity + R.arity - 1);
  for (const auto& [r, cr] : R.terms)
    if (!is_lw_tree(r)) throw std::invalid_argument("not a W-tree");
  for (const auto& [t, ct] : T.terms)
    for (const auto& [r, cr] : R.terms)
      compose_basis(t, i, r, R.arity, ct * cr, out.terms, Mode::Signed);
  return out;
}

std::map<PlanarTree, Rational> plug_lw(const PlanarTree& T, int label,
                                       const PlanarTree& R) {
  std::vector<int> lt, lr;
  collect_labels(T, lt);
  collect_labels(R, lr);
  std::set<int> st(lt.begin(), lt.end());
  st.erase(label);
  for (int l : lr)
    if (st.count(l)) throw std::invalid_argument("label collision in plug");
  VertexPath slot = label_path(T, label);
  std::map<PlanarTree, Rational> acc;
  plug_core(T, slot, R, 1, acc);
  return acc;
}

// ---------------------------------------------------------------------------
// composition words

PostLieWord PostLieWord::leaf_of(int l) {
  PostLieWord w;
  w.node = Node::Leaf;
  w.leaf = l;
  return w;
}

PostLieWord PostLieWord::bracket(PostLieWord a, PostLieWord b) {
  PostLieWord w;
  w.node = Node::Bracket;
  w.args = {std::move(a), std::move(b)};
  return w;
}

PostLieWord PostLieWord::triangle(PostLieWord a, PostLieWord b) {
  PostLieWord w;
  w.node = Node::Triangle;
  w.args = {std::move(a), std::move(b)};
  return w;
}

bool operator==(const PostLieWord& a, const PostLieWord& b) {
  return a.node == b.node && a.leaf == b.leaf && a.args == b.args;
}

bool operator<(const PostLieWord& a, const PostLieWord& b) {
  if (a.node != b.node) return a.node < b.node;
  if (a.leaf != b.leaf) return a.leaf < b.leaf;
  return std::lexicographical_compare(a.args.begin(), a.args.end(),
                                      b.args.begin(), b.args.end());
}

static void word_leaves_rec(const PostLieWord& w, std::vector<int>& out) {
  if (w.node == PostLieWord::Node::Leaf) {
    out.push_back(w.leaf);
    return;
  }
  for (const auto& a : w.args) word_leaves_rec(a, out);
}

std::vector<int> word_leaves(const PostLieWord& w) {
  std::vector<int> out;
  word_leaves_rec(w, out);
  return out;
}

std::string word_str(const PostLieWord& w) {
  switch (w.node) {
    case PostLieWord::Node::Leaf: return std::to_string(w.leaf);
    case PostLieWord::Node::Bracket:
      return "b(" + word_str(w.args[0]) + "," + word_str(w.args[1]) + ")";
    case PostLieWord::Node::Triangle:
      return "t(" + word_str(w.args[0]) + "," + word_str(w.args[1]) + ")";
  }
  return {};
}

namespace {
struct WordParser {
  const std::string& s;
  size_t pos = 0;
  explicit WordParser(const std::string& str) : s(str) {}
  void skip_ws() { while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos; }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw std::invalid_argument(std::string("expected '") + c + "' in word");
    ++pos;
  }
  PostLieWord parse() {
    skip_ws();
    if (pos >= s.size()) throw std::invalid_argument("unexpected end of word");
    char c = s[pos];
    if (std::isdigit((unsigned char)c)) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      return PostLieWord::leaf_of(std::stoi(s.substr(start, pos - start)));
    }
    if (c == 'b' || c == 'B' || c == 't' || c == 'T') {
      ++pos;
      expect('(');
      PostLieWord a = parse();
      expect(',');
      PostLieWord b = parse();
      expect(')');
      return (c == 'b' || c == 'B') ? PostLieWord::bracket(std::move(a), std::move(b))
                                    : PostLieWord::triangle(std::move(a), std::move(b));
    }
    throw std::invalid_argument(std::string("unexpected character '") + c + "' in word");
  }
};
}  // namespace

PostLieWord parse_word(const std::string& s) {
  WordParser p(s);
  PostLieWord w = p.parse();
  p.skip_ws();
  if (p.pos != s.size()) throw std::invalid_argument("trailing input after word");
  return w;
}

namespace {

using TermMap = std::map<PlanarTree, Rational>;

// evaluate a word with pairwise-distinct leaf labels; labels pass through
TermMap eval_word(const PostLieWord& w, int& fresh) {
  if (w.node == PostLieWord::Node::Leaf) return {{leaf_lab(w.leaf), 1}};
  TermMap A = eval_word(w.args[0], fresh);
  TermMap B = eval_word(w.args[1], fresh);
  int s1 = fresh++, s2 = fresh++;
  PlanarTree gen = w.node == PostLieWord::Node::Bracket
                       ? node_unl({leaf_lab(s1), leaf_lab(s2)})
                       : node_lab(s2, {leaf_lab(s1)});
  TermMap cur{{gen, 1}};
  // plug the right argument into slot 2, then the left into slot 1
  TermMap step;
  for (const auto& [t, ct] : cur)
    for (const auto& [r, cr] : B) plug_core(t, label_path(t, s2), r, ct * cr, step);
  TermMap out;
  for (const auto& [t, ct] : step)
    for (const auto& [r, cr] : A) plug_core(t, label_path(t, s1), r, ct * cr, out);
  return out;
}

}  // namespace

OperadElement from_postlie_word(const PostLieWord& w) {
  std::vector<int> leaves = word_leaves(w);
  std::vector<int> sorted = leaves;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < (int)sorted.size(); ++k)
    if (sorted[k] != k + 1)
      throw std::invalid_argument("word leaves must be a bijection onto {1..n}");
  int fresh = (int)leaves.size() + 1;
  OperadElement out = op_zero((int)leaves.size());
  out.terms = eval_word(w, fresh);
  return out;
}

OperadElement from_postlie_word(const WordSum& ws) {
  if (ws.empty()) throw std::invalid_argument("empty word combination");
  OperadElement out = op_zero(0);
  bool first = true;
  for (const auto& [w, c] : ws) {
    OperadElement e = op_scale(c, from_postlie_word(w));
    if (first) {
      out = std::move(e);
      first = false;
    } else {
      out = op_add(out, e);
    }
  }
  return out;
}

namespace {

WordSum word_scale(const Rational& c, const WordSum& ws) {
  WordSum out;
  for (const auto& [w, k] : ws) out.emplace(w, c * k);
  return out;
}

void word_accum(WordSum& acc, const WordSum& ws, const Rational& c = 1) {
  for (const auto& [w, k] : ws) {
    auto it = acc.find(w);
    if (it == acc.end()) {
      if (c * k != 0) acc.emplace(w, c * k);
    } else {
      it->second += c * k;
      if (it->second == 0) acc.erase(it);
    }
  }
}

// bilinear combination of two word sums under a binary node
WordSum word_combine(PostLieWord::Node node, const WordSum& A, const WordSum& B) {
  WordSum out;
  for (const auto& [wa, ca] : A)
    for (const auto& [wb, cb] : B) {
      PostLieWord w = node == PostLieWord::Node::Bracket
                          ? PostLieWord::bracket(wa, wb)
                          : PostLieWord::triangle(wa, wb);
      word_accum(out, {{w, 1}}, ca * cb);
    }
  return out;
}

// substitute a word sum for the (unique) leaf labeled l
WordSum word_subst(const PostLieWord& w, int l, const WordSum& repl) {
  if (w.node == PostLieWord::Node::Leaf)
    return w.leaf == l ? repl : WordSum{{w, 1}};
  WordSum A = word_subst(w.args[0], l, repl);
  WordSum B = word_subst(w.args[1], l, repl);
  return word_combine(w.node, A, B);
}

WordSum word_subst(const WordSum& ws, int l, const WordSum& repl) {
  WordSum out;
  for (const auto& [w, c] : ws) word_accum(out, word_subst(w, l, repl), c);
  return out;
}

// word sum evaluating to the corolla with root label rho and leaves lambda,
// left to right
WordSum corolla_word(int rho, const std::vector<int>& lambda);

WordSum tree_word(const PlanarTree& t) {
  if (t.children.empty()) {
    if (!t.dec.is_label()) throw std::invalid_argument("not an LW basis tree");
    return {{PostLieWord::leaf_of(t.dec.label), 1}};
  }
  if (t.dec.is_unlabeled()) {
    if (t.children.size() != 2) throw std::invalid_argument("not an LW basis tree");
    return word_combine(PostLieWord::Node::Bracket, tree_word(t.children[0]),
                        tree_word(t.children[1]));
  }
  // labeled root: peel the skeleton corolla, then substitute subtree words
  std::vector<int> roots;
  for (const auto& c : t.children) {
    if (!c.dec.is_label()) throw std::invalid_argument("not an LW basis tree");
    roots.push_back(c.dec.label);
  }
  WordSum out = corolla_word(t.dec.label, roots);
  for (const auto& c : t.children)
    if (!c.children.empty()) out = word_subst(out, c.dec.label, tree_word(c));
  return out;
}

WordSum corolla_word(int rho, const std::vector<int>& lambda) {
  // C(rho; l1..lk) = l1 |> C(rho; l2..lk) - sum_j C(rho; l2,..,lj[l1],..,lk):
  // grafting the leftmost leaf back in lands it either at the root (leftmost
  // position) or on one of the other leaves
  if (lambda.size() == 1)
    return {{PostLieWord::triangle(PostLieWord::leaf_of(lambda[0]),
                                   PostLieWord::leaf_of(rho)),
             1}};
  std::vector<int> rest(lambda.begin() + 1, lambda.end());
  WordSum out = word_combine(PostLieWord::Node::Triangle,
                             {{PostLieWord::leaf_of(lambda[0]), 1}},
                             corolla_word(rho, rest));
  for (size_t j = 0; j < rest.size(); ++j) {
    std::vector<PlanarTree> kids;
    for (size_t k = 0; k < rest.size(); ++k) {
      if (k == j)
        kids.push_back(node_lab(rest[k], {leaf_lab(lambda[0])}));
      else
        kids.push_back(leaf_lab(rest[k]));
    }
    word_accum(out, tree_word(node_lab(rho, std::move(kids))), -1);
  }
  return out;
}

}  // namespace

WordSum to_postlie_word(const PlanarTree& t) {
  (void)tree_arity(t);  // validates the label bijection
  if (!is_lw_tree(t)) throw std::invalid_argument("not an LW basis tree");
  return tree_word(t);
}

// ---------------------------------------------------------------------------
// decomposition into 2-vertex generators

namespace {
PlanarTree generator_tree(PostLieWord::Node node) {
  return node == PostLieWord::Node::Bracket ? node_unl({leaf_lab(1), leaf_lab(2)})
                                            : node_lab(2, {leaf_lab(1)});
}
}  // namespace

Decomposition corolla_decompose(const PlanarTree& t) {
  int n = tree_arity(t);
  if (n < 2) throw std::invalid_argument("decomposition needs arity >= 2");
  Decomposition out;
  for (const auto& [w, c] : to_postlie_word(t)) {
    DecompChain chain;
    chain.coef = c;
    std::vector<PostLieWord> pending{w};
    while (true) {
      int s = -1;
      for (int j = 0; j < (int)pending.size(); ++j)
        if (pending[j].node != PostLieWord::Node::Leaf) { s = j; break; }
      if (s < 0) break;
      PostLieWord node = pending[s];
      chain.steps.push_back({generator_tree(node.node), s + 1});
      pending[s] = node.args[0];
      pending.insert(pending.begin() + s + 1, node.args[1]);
    }
    chain.sigma.reserve(pending.size());
    for (const auto& leafw : pending) chain.sigma.push_back(leafw.leaf);
    out.push_back(std::move(chain));
  }
  return out;
}

OperadElement recompose(const Decomposition& d) {
  if (d.empty()) throw std::invalid_argument("empty decomposition");
  OperadElement total = op_zero((int)d.front().sigma.size());
  for (const auto& chain : d) {
    OperadElement x = op_unit();
    for (const auto& step : chain.steps)
      x = compose_lw(x, step.slot, op_term(step.generator));
    x = symmetric_action(x, chain.sigma);
    total = op_add(total, op_scale(chain.coef, x));
  }
  return total;
}

// ---------------------------------------------------------------------------
// planarity forgetting

PlanarTree nonplanar_normalize(const PlanarTree& t) {
  PlanarTree out(t.dec);
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(nonplanar_normalize(c));
  std::sort(out.children.begin(), out.children.end());
  return out;
}

namespace {
bool has_unlabeled(const PlanarTree& t) {
  if (t.dec.is_unlabeled()) return true;
  for (const auto& c : t.children)
    if (has_unlabeled(c)) return true;
  return false;
}
}  // namespace

OperadElement forget_planarity(const OperadElement& x) {
  OperadElement out = op_zero(x.arity);
  for (const auto& [t, c] : x.terms) {
    if (has_unlabeled(t)) continue;
    add_term(out.terms, nonplanar_normalize(t), c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// LW basis and the ideal at low arity

std::vector<PlanarTree> lw_basis(int n) {
  std::vector<PlanarTree> out = enumerate_labeled_trees(n);
  for (int u = 1; u <= n - 1; ++u)
    for (const auto& t : enumerate_partially_labeled(n + u, n))
      if (is_w_tree(t)) out.push_back(t);
  return out;
}

OperadElement antisym_generator() {
  return op_add(op_term(node_unl({leaf_lab(1), leaf_lab(2)})),
                op_term(node_unl({leaf_lab(2), leaf_lab(1)})));
}

OperadElement jacobi_generator() {
  OperadElement a = op_term(node_unl({leaf_lab(1), node_unl({leaf_lab(2), leaf_lab(3)})}));
  OperadElement b = op_term(node_unl({node_unl({leaf_lab(1), leaf_lab(2)}), leaf_lab(3)}));
  OperadElement c = op_term(node_unl({leaf_lab(2), node_unl({leaf_lab(1), leaf_lab(3)})}));
  return op_sub(op_sub(a, b), c);
}

Span::Span(std::vector<PlanarTree> basis) {
  for (int k = 0; k < (int)basis.size(); ++k) index_.emplace(basis[k], k);
}

std::vector<Rational> Span::reduce(const OperadElement& x) const {
  std::vector<Rational> v(index_.size(), 0);
  for (const auto& [t, c] : x.terms) {
    auto it = index_.find(t);
    if (it == index_.end()) throw std::invalid_argument("element outside span basis");
    v[it->second] = c;
  }
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational& f = v[pivots_[r]];
    if (f == 0) continue;
    Rational ff = f;
    for (size_t k = 0; k < v.size(); ++k) v[k] -= ff * rows_[r][k];
  }
  return v;
}

void Span::add(const OperadElement& x) {
  std::vector<Rational> v = reduce(x);
  int p = -1;
  for (int k = 0; k < (int)v.size(); ++k)
    if (v[k] != 0) { p = k; break; }
  if (p < 0) return;
  Rational inv = v[p];
  for (auto& c : v) c /= inv;
  // keep rows fully reduced against the new pivot
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rational f = rows_[r][p];
    if (f == 0) continue;
    for (size_t k = 0; k < v.size(); ++k) rows_[r][k] -= f * v[k];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
}

bool Span::contains(const OperadElement& x) const {
  for (const Rational& c : reduce(x))
    if (c != 0) return false;
  return true;
}

Span ideal_span3() {
  Span span(lw_basis(3));
  std::vector<OperadElement> seeds;

  OperadElement a2 = antisym_generator();
  for (const auto& x : lw_basis(2)) {
    OperadElement xe = op_term(x);
    for (int i = 1; i <= 2; ++i) {
      seeds.push_back(compose_lw(xe, i, a2));
      seeds.push_back(compose_lw(a2, i, xe));
    }
  }
  seeds.push_back(jacobi_generator());

  std::vector<int> perm{1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    for (const auto& s : seeds) span.add(symmetric_action(s, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return span;
}

}  // namespace postlie
