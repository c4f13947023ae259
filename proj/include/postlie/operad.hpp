#pragma once

#include <map>
#include <string>
#include <vector>

#include "postlie/rational.hpp"
#include "postlie/tree.hpp"

namespace postlie {

/// Arity-n rational linear combination of partially labeled planar trees; the
/// labels of every term form a bijection onto {1..n}. Zero coefficients are
/// never stored.
struct OperadElement {
  int arity = 1;
  std::map<PlanarTree, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const OperadElement& a, const OperadElement& b) {
    return a.arity == b.arity && a.terms == b.terms;
  }
};

/// Number of labeled vertices; throws unless the labels are a bijection onto
/// {1..n}.
int tree_arity(const PlanarTree& t);

bool is_fully_labeled(const PlanarTree& t);

/// Root unlabeled; unlabeled vertices closed under taking parents; every
/// unlabeled vertex has exactly two incoming edges.
bool is_w_tree(const PlanarTree& t);

/// Fully labeled, or a W-tree.
bool is_lw_tree(const PlanarTree& t);

OperadElement op_zero(int arity);
OperadElement op_term(const PlanarTree& t, const Rational& c = 1);
/// The operadic unit: a single vertex labeled 1.
OperadElement op_unit();

OperadElement op_add(const OperadElement& a, const OperadElement& b);
OperadElement op_sub(const OperadElement& a, const OperadElement& b);
OperadElement op_scale(const Rational& c, const OperadElement& a);

/// Partial composition of the plain planar-tree operad: substitute the vertex
/// labeled i of T by R, summing over all maps from the incoming edges of that
/// vertex to the labeled minimal angles of R; grafted edges enter to the left
/// of existing children, fibers in incoming order; labels re-indexed.
OperadElement compose_pt(const OperadElement& T, int i, const OperadElement& R);

/// Relabel every labeled vertex l -> sigma[l-1] in every term.
OperadElement symmetric_action(const OperadElement& x, const std::vector<int>& sigma);

/// Signed composition: when the vertex labeled i has a labeled parent and the
/// R-term has unlabeled vertices, sum over all sign flips of the unlabeled
/// binary vertices, contract the unlabeled region of R and then the edge above
/// its root copy; otherwise plain composition. R-terms must be fully labeled
/// or W-trees.
OperadElement compose_lw(const OperadElement& T, int i, const OperadElement& R);

/// Graft composition keeping every label as it is (no re-indexation); the slot
/// is the vertex of T labeled `label`, and the labels of R must be disjoint
/// from the remaining labels of T. Same case analysis as compose_lw.
std::map<PlanarTree, Rational> plug_lw(const PlanarTree& T, int label,
                                       const PlanarTree& R);

/// Formal composition word over the binary generators: leaves carry labels.
struct PostLieWord {
  enum class Node { Leaf, Bracket, Triangle };
  Node node = Node::Leaf;
  int leaf = 0;
  std::vector<PostLieWord> args;  // two entries for Bracket/Triangle

  static PostLieWord leaf_of(int l);
  static PostLieWord bracket(PostLieWord a, PostLieWord b);
  static PostLieWord triangle(PostLieWord a, PostLieWord b);

  friend bool operator==(const PostLieWord& a, const PostLieWord& b);
  friend bool operator<(const PostLieWord& a, const PostLieWord& b);
};

/// Rational combination of words.
using WordSum = std::map<PostLieWord, Rational>;

/// Leaf labels, left to right.
std::vector<int> word_leaves(const PostLieWord& w);

/// Textual form: leaves are integers, `b(u,v)` is the bracket, `t(u,v)` the
/// triangle (u acting on v).
std::string word_str(const PostLieWord& w);
PostLieWord parse_word(const std::string& s);

/// Evaluate a word (leaf labels a bijection onto {1..n}) in the tree operad:
/// the bracket maps to the unlabeled-root corolla with children 1,2 and the
/// triangle to the 2-chain with root 2 and child 1.
OperadElement from_postlie_word(const PostLieWord& w);
OperadElement from_postlie_word(const WordSum& ws);

/// Section of from_postlie_word on basis trees: evaluating the returned
/// combination gives back exactly the input tree.
WordSum to_postlie_word(const PlanarTree& t);

/// One composition chain: fold X -> compose_lw(X, slot, generator) starting
/// from the operadic unit, then relabel j -> sigma[j-1].
struct DecompStep {
  PlanarTree generator;  // 2-vertex basis tree
  int slot = 1;
};
struct DecompChain {
  Rational coef = 1;
  std::vector<DecompStep> steps;
  std::vector<int> sigma;
};
using Decomposition = std::vector<DecompChain>;

/// Decompose a basis tree (>= 2 vertices) into weighted chains of 2-vertex
/// generators; recompose() reproduces the tree exactly.
Decomposition corolla_decompose(const PlanarTree& t);
OperadElement recompose(const Decomposition& d);

/// Children recursively sorted by the canonical tree order.
PlanarTree nonplanar_normalize(const PlanarTree& t);

/// Send each fully labeled term to its canonical non-planar representative;
/// terms containing an unlabeled vertex map to 0.
OperadElement forget_planarity(const OperadElement& x);

/// All basis trees of LW(n): fully labeled n-vertex trees and W-trees with n
/// labels.
std::vector<PlanarTree> lw_basis(int n);

/// Arity-2 ideal generator: the symmetrized bracket corolla.
OperadElement antisym_generator();
/// Arity-3 ideal generator: the Jacobi combination of W-trees.
OperadElement jacobi_generator();

/// Row-reduced span of operad elements over a fixed basis, exact arithmetic.
class Span {
 public:
  explicit Span(std::vector<PlanarTree> basis);
  void add(const OperadElement& x);
  bool contains(const OperadElement& x) const;
  int rank() const { return (int)rows_.size(); }

 private:
  std::vector<Rational> reduce(const OperadElement& x) const;
  std::map<PlanarTree, int> index_;
  std::vector<std::vector<Rational>> rows_;  // echelon, pivot scaled to 1
  std::vector<int> pivots_;
};

/// Span of the arity-3 component of the operad ideal generated by the two
/// generators, closed under all arity-3 compositions and relabelings.
Span ideal_span3();

}  // namespace postlie
