#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace postlie {

/// Vertex decoration: a generator symbol, a positive operad label, or unlabeled.
struct Decoration {
  enum class Kind { Unlabeled, Label, Symbol };
  Kind kind = Kind::Unlabeled;
  int label = 0;        // valid when kind == Label
  std::string symbol;   // valid when kind == Symbol

  static Decoration unlabeled() { return {}; }
  static Decoration of_label(int l) { return {Kind::Label, l, {}}; }
  static Decoration of_symbol(std::string s) { return {Kind::Symbol, 0, std::move(s)}; }

  bool is_unlabeled() const { return kind == Kind::Unlabeled; }
  bool is_label() const { return kind == Kind::Label; }
  bool is_symbol() const { return kind == Kind::Symbol; }

  friend bool operator==(const Decoration& a, const Decoration& b) {
    return a.kind == b.kind && a.label == b.label && a.symbol == b.symbol;
  }
  friend bool operator<(const Decoration& a, const Decoration& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.label != b.label) return a.label < b.label;
    return a.symbol < b.symbol;
  }
};

/// Planar rooted tree; children are kept in left-to-right planar order.
/// Structural equality decides tree equality, and operator< is the canonical
/// total order used to keep linear combinations sorted.
struct PlanarTree {
  Decoration dec;
  std::vector<PlanarTree> children;

  PlanarTree() = default;
  explicit PlanarTree(Decoration d, std::vector<PlanarTree> c = {})
      : dec(std::move(d)), children(std::move(c)) {}

  friend bool operator==(const PlanarTree& a, const PlanarTree& b) {
    return a.dec == b.dec && a.children == b.children;
  }
  friend bool operator!=(const PlanarTree& a, const PlanarTree& b) { return !(a == b); }
  friend bool operator<(const PlanarTree& a, const PlanarTree& b);
};

/// Convenience constructors.
PlanarTree leaf_sym(const std::string& s);
PlanarTree leaf_lab(int l);
PlanarTree leaf_unl();
PlanarTree node_sym(const std::string& s, std::vector<PlanarTree> c);
PlanarTree node_lab(int l, std::vector<PlanarTree> c);
PlanarTree node_unl(std::vector<PlanarTree> c);

int vertex_count(const PlanarTree& t);

/// Path from the root: successive child indices. The root is the empty path.
using VertexPath = std::vector<int>;

/// Vertices in the canonical order `<` (pre-order: root, then each child's
/// subtree left to right). Handles are indices into this sequence.
std::vector<int> canonical_vertex_order(const PlanarTree& t);

/// Paths of all vertices, listed in canonical order (handle -> path).
std::vector<VertexPath> vertex_paths(const PlanarTree& t);

const PlanarTree& subtree_at(const PlanarTree& t, const VertexPath& p);
const Decoration& decoration_at(const PlanarTree& t, int handle);

/// Handle of the parent, or -1 for the root.
int parent_of(const PlanarTree& t, int handle);

/// True when vertex a lies on the path from b to the root (a strictly above b
/// is excluded: a must be a proper ancestor). This is the level order b ≺ a.
bool is_proper_ancestor(const VertexPath& a, const VertexPath& b);

/// Angle at a vertex; position 0 is the minimal angle (between the outgoing
/// edge and the leftmost incoming edge).
struct AngleAddress {
  int vertex = 0;
  int position = 0;
  friend bool operator==(const AngleAddress& a, const AngleAddress& b) {
    return a.vertex == b.vertex && a.position == b.position;
  }
};

/// Minimal angles in the order induced by `<` on their vertices; with
/// labeled_only set, restricted to labeled vertices.
std::vector<AngleAddress> minimal_angles(const PlanarTree& t, bool labeled_only = false);

/// Handle of the vertex carrying the given operad label, if any.
std::optional<int> find_label(const PlanarTree& t, int label);

/// Incoming edges of the vertex labeled `label`, left to right. An edge is
/// identified by the handle of its child endpoint.
std::vector<int> incoming_edges(const PlanarTree& t, int label);

/// Contract the edge between the unlabeled non-root vertex v and its parent;
/// v's children are spliced into the parent's child list at v's position.
PlanarTree contract_edge(const PlanarTree& t, int v);

/// Contract every edge whose two endpoints are unlabeled.
PlanarTree contract_all(const PlanarTree& t);

/// Swap (or keep) the two subtrees of an unlabeled binary vertex; the sign is
/// +1 for the identity, -1 for the transposition.
std::pair<PlanarTree, int> s2_flip(const PlanarTree& t, int v, bool transpose);

/// All planar shapes with n vertices (every vertex unlabeled).
const std::vector<PlanarTree>& enumerate_shapes(int n);

/// All n-vertex trees decorated from the given symbol alphabet.
std::vector<PlanarTree> enumerate_trees(int n, const std::vector<std::string>& alphabet);

/// All n-vertex fully labeled trees (labels a bijection onto {1..n}).
std::vector<PlanarTree> enumerate_labeled_trees(int n);

/// All trees with `vertices` vertices of which `labels` carry a bijection onto
/// {1..labels} and the rest are unlabeled.
std::vector<PlanarTree> enumerate_partially_labeled(int vertices, int labels);

/// Textual form `d[c1,...,ck]`; d is a symbol, an integer label, or `*` for
/// unlabeled; leaves print without brackets.
std::string tree_str(const PlanarTree& t);
PlanarTree parse_tree(const std::string& s);

}  // namespace postlie
