#include "postlie/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace postlie {

DecoratedTree DecoratedTree::node(DecVec dec, unsigned noise, std::vector<Branch> branches,
                                  bool marked) {
  auto n = std::make_shared<Node>();
  n->dec = dec;
  n->noise = noise;
  n->marked = marked;
  n->any_mark = marked;
  n->edges = noise;
  n->hash = dec.hash() * 31u + noise * 7u + (marked ? 0x9e3779b9u : 0u);
  for (const auto& br : branches) {
    require_same_dim(dec, br.edge);
    require_same_dim(dec, br.child.dec());
  }
  std::sort(branches.begin(), branches.end());
  for (const auto& br : branches) {
    n->vertices += br.child.vertex_count();
    n->edges += 1 + br.child.edge_count();
    n->any_mark = n->any_mark || br.child.has_marks();
    n->hash = (n->hash * 1000003u) ^ (br.edge.hash() * 17u + br.child.hash());
  }
  n->branches = std::move(branches);
  return DecoratedTree(std::move(n));
}

DecoratedTree DecoratedTree::unit(std::size_t components) {
  return node(DecVec(components));
}

bool operator==(const DecoratedTree& a, const DecoratedTree& b) {
  if (a.n_ == b.n_) return true;
  if (a.n_->hash != b.n_->hash) return false;
  return a.n_->dec == b.n_->dec && a.n_->noise == b.n_->noise &&
         a.n_->marked == b.n_->marked && a.n_->branches == b.n_->branches;
}

std::strong_ordering operator<=>(const DecoratedTree& a, const DecoratedTree& b) {
  if (a.n_ == b.n_) return std::strong_ordering::equal;
  if (auto c = a.n_->dec <=> b.n_->dec; c != 0) return c;
  if (auto c = a.n_->noise <=> b.n_->noise; c != 0) return c;
  if (auto c = a.n_->marked <=> b.n_->marked; c != 0) return c;
  const auto& x = a.n_->branches;
  const auto& y = b.n_->branches;
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

DecoratedTree canonicalize(const RawTree& raw) {
  unsigned noise = 0;
  std::vector<DecoratedTree::Branch> branches;
  for (const auto& ch : raw.children) {
    if (ch.edge.kind == EdgeDec::Kind::Noise) {
      require_same_dim(raw.dec, ch.tree.dec);
      if (!ch.tree.dec.is_zero() || !ch.tree.children.empty())
        throw std::invalid_argument("noise edge must end in an undecorated leaf");
      ++noise;
    } else {
      branches.push_back({ch.edge.a, canonicalize(ch.tree)});
    }
  }
  return DecoratedTree::node(raw.dec, noise, std::move(branches));
}

RawTree to_raw(const DecoratedTree& t) {
  RawTree r{t.dec(), {}};
  for (unsigned i = 0; i < t.noise(); ++i)
    r.children.push_back({EdgeDec::noise(), RawTree{DecVec(t.components()), {}}});
  for (const auto& br : t.branches()) r.children.push_back({EdgeDec::kernel(br.edge), to_raw(br.child)});
  return r;
}

DecoratedTree tree_product(const DecoratedTree& a, const DecoratedTree& b) {
  std::vector<DecoratedTree::Branch> branches = a.branches();
  branches.insert(branches.end(), b.branches().begin(), b.branches().end());
  return DecoratedTree::node(a.dec() + b.dec(), a.noise() + b.noise(), std::move(branches),
                             a.marked() || b.marked());
}

DecoratedTree planted(const DecVec& a, const DecoratedTree& tau) {
  return DecoratedTree::node(DecVec(tau.components()), 0, {{a, tau}});
}

bool is_planted(const DecoratedTree& t) {
  return t.dec().is_zero() && t.noise() == 0 && t.branches().size() == 1;
}

std::int64_t grading(const DecoratedTree& t, const Scaling& s) {
  std::int64_t g = 0;
  for (const auto& br : t.branches()) g += snorm(br.edge, s) + grading(br.child, s);
  return g;
}

namespace {

DecoratedTree set_marks(const DecoratedTree& t, bool mark) {
  if (!mark && !t.has_marks()) return t;
  std::vector<DecoratedTree::Branch> branches = t.branches();
  for (auto& br : branches) br.child = set_marks(br.child, mark);
  return DecoratedTree::node(t.dec(), t.noise(), std::move(branches), mark);
}

}  // namespace

DecoratedTree mark_all(const DecoratedTree& t) { return set_marks(t, true); }
DecoratedTree strip_marks(const DecoratedTree& t) { return set_marks(t, false); }

TreeComb strip_marks(const TreeComb& x) {
  TreeComb out;
  for (const auto& [t, c] : x) out.add(strip_marks(t), c);
  return out;
}

std::vector<std::size_t> marked_vertices(const DecoratedTree& t) {
  std::vector<std::size_t> out;
  for_each_vertex(t, [&](std::size_t i, const DecoratedTree& v) {
    if (v.marked()) out.push_back(i);
  });
  return out;
}

DecoratedTree with_dec(const DecoratedTree& t, const DecVec& dec) {
  return DecoratedTree::node(dec, t.noise(), t.branches(), t.marked());
}

DecoratedTree with_branch(const DecoratedTree& t, const DecVec& a, const DecoratedTree& child) {
  std::vector<DecoratedTree::Branch> branches = t.branches();
  branches.push_back({a, child});
  return DecoratedTree::node(t.dec(), t.noise(), std::move(branches), t.marked());
}

}  // namespace postlie
