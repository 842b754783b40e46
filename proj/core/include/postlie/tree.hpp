#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <vector>

#include "postlie/decvec.hpp"
#include "postlie/lincomb.hpp"

namespace postlie {

struct TreeBranch;

/// Non-planar rooted tree with node decorations in N^{d+1}, Kernel(a) edges
/// and terminal noise edges. Values are immutable and always canonical: the
/// branch list is sorted, so structural equality is isomorphism.
///
/// Noise edges end in undecorated leaves that can never be grafted on or
/// decorated, so each node only records how many it carries.
///
/// Nodes may carry a mark. Marks are only used transiently to follow the
/// vertices of one operand through a product; public results carry none.
class DecoratedTree {
 public:
  using Branch = TreeBranch;

  static DecoratedTree node(DecVec dec, unsigned noise = 0, std::vector<Branch> branches = {},
                            bool marked = false);
  /// X^0, the empty tree.
  static DecoratedTree unit(std::size_t components);

  const DecVec& dec() const { return n_->dec; }
  unsigned noise() const { return n_->noise; }
  bool marked() const { return n_->marked; }
  const std::vector<Branch>& branches() const { return n_->branches; }
  std::size_t components() const { return n_->dec.size(); }

  /// Vertices that can be grafted on or decorated (noise leaves excluded).
  std::size_t vertex_count() const { return n_->vertices; }
  /// Kernel plus noise edges.
  std::size_t edge_count() const { return n_->edges; }
  bool has_marks() const { return n_->any_mark; }
  std::size_t hash() const { return n_->hash; }

  friend bool operator==(const DecoratedTree& a, const DecoratedTree& b);
  friend std::strong_ordering operator<=>(const DecoratedTree& a, const DecoratedTree& b);

 private:
  struct Node {
    DecVec dec;
    unsigned noise = 0;
    bool marked = false;
    bool any_mark = false;
    std::vector<Branch> branches;
    std::size_t vertices = 1;
    std::size_t edges = 0;
    std::size_t hash = 0;
  };
  explicit DecoratedTree(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  std::shared_ptr<const Node> n_;
};

/// Kernel(edge) edge to a child subtree.
struct TreeBranch {
  DecVec edge;
  DecoratedTree child;
  friend bool operator==(const TreeBranch&, const TreeBranch&) = default;
  friend std::strong_ordering operator<=>(const TreeBranch& a, const TreeBranch& b) {
    if (auto c = a.edge <=> b.edge; c != 0) return c;
    return a.child <=> b.child;
  }
};

using TreeComb = LinComb<DecoratedTree>;

/// Edge decoration of the raw (possibly non-canonical) tree representation.
struct EdgeDec {
  enum class Kind { Noise, Kernel };
  Kind kind = Kind::Kernel;
  DecVec a;

  static EdgeDec noise() { return {Kind::Noise, {}}; }
  static EdgeDec kernel(DecVec a) { return {Kind::Kernel, a}; }
};

struct RawChild;

/// Tree with explicitly ordered children, as read from user input. Noise
/// children appear as ordinary children here.
struct RawTree {
  DecVec dec;
  std::vector<RawChild> children;
};

struct RawChild {
  EdgeDec edge;
  RawTree tree;
};

/// Canonical representative of a raw tree. Throws std::invalid_argument when a
/// noise child is decorated or has children of its own.
DecoratedTree canonicalize(const RawTree& raw);
/// Expands noise counts into explicit children, in canonical order.
RawTree to_raw(const DecoratedTree& t);

/// Identifies the roots: decorations add, children are united.
DecoratedTree tree_product(const DecoratedTree& a, const DecoratedTree& b);
/// I_a(tau): new zero-decorated root with one Kernel(a) edge to tau.
DecoratedTree planted(const DecVec& a, const DecoratedTree& tau);
bool is_planted(const DecoratedTree& t);
/// Sum over edges of |e|_s; noise edges count 0.
std::int64_t grading(const DecoratedTree& t, const Scaling& s);

DecoratedTree mark_all(const DecoratedTree& t);
DecoratedTree strip_marks(const DecoratedTree& t);
TreeComb strip_marks(const TreeComb& x);
/// Preorder indices of the marked vertices.
std::vector<std::size_t> marked_vertices(const DecoratedTree& t);

/// Calls f(index, subtree) for every eligible vertex in preorder.
template <class F>
void for_each_vertex(const DecoratedTree& t, F&& f, std::size_t offset = 0) {
  f(offset, t);
  std::size_t next = offset + 1;
  for (const auto& br : t.branches()) {
    for_each_vertex(br.child, f, next);
    next += br.child.vertex_count();
  }
}

/// Replaces the subtree rooted at preorder vertex `index` by f(subtree).
template <class F>
DecoratedTree rebuild_at(const DecoratedTree& t, std::size_t index, F&& f) {
  if (index == 0) return f(t);
  --index;
  std::vector<DecoratedTree::Branch> branches = t.branches();
  for (auto& br : branches) {
    if (index < br.child.vertex_count()) {
      br.child = rebuild_at(br.child, index, f);
      return DecoratedTree::node(t.dec(), t.noise(), std::move(branches), t.marked());
    }
    index -= br.child.vertex_count();
  }
  throw std::out_of_range("rebuild_at: vertex index out of range");
}

/// Same node with a different decoration.
DecoratedTree with_dec(const DecoratedTree& t, const DecVec& dec);
/// Same node with one more Kernel(a) branch.
DecoratedTree with_branch(const DecoratedTree& t, const DecVec& a, const DecoratedTree& child);

}  // namespace postlie

template <>
struct std::hash<postlie::DecoratedTree> {
  std::size_t operator()(const postlie::DecoratedTree& t) const noexcept { return t.hash(); }
};
