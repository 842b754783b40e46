#include "postlie/t0tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace postlie {

T0Tree T0Tree::node(std::size_t components, std::vector<DecVec> monomials,
                    std::vector<T0Tree> children) {
  auto n = std::make_shared<Node>();
  n->components = components;
  for (const auto& m : monomials) {
    if (m.size() != components) throw DimensionError("monomial dimension mismatch");
    if (m.is_zero()) throw std::invalid_argument("X^0 is not a polynomial factor");
  }
  for (const auto& c : children)
    if (c.components() != components) throw DimensionError("child dimension mismatch");
  std::sort(monomials.begin(), monomials.end());
  std::sort(children.begin(), children.end());
  n->hash = components * 0x51ed27u;
  for (const auto& m : monomials) n->hash = n->hash * 131u + m.hash();
  n->hash = n->hash * 7919u + monomials.size();
  for (const auto& c : children) {
    n->vertices += c.vertex_count();
    n->hash = (n->hash * 1000003u) ^ c.hash();
  }
  n->monomials = std::move(monomials);
  n->children = std::move(children);
  return T0Tree(std::move(n));
}

bool operator==(const T0Tree& a, const T0Tree& b) {
  if (a.n_ == b.n_) return true;
  if (a.n_->hash != b.n_->hash) return false;
  return a.n_->components == b.n_->components && a.n_->monomials == b.n_->monomials &&
         a.n_->children == b.n_->children;
}

std::strong_ordering operator<=>(const T0Tree& a, const T0Tree& b) {
  if (a.n_ == b.n_) return std::strong_ordering::equal;
  if (auto c = a.n_->components <=> b.n_->components; c != 0) return c;
  const auto& x = a.n_->monomials;
  const auto& y = b.n_->monomials;
  if (auto c = std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end()); c != 0)
    return c;
  const auto& p = a.n_->children;
  const auto& q = b.n_->children;
  return std::lexicographical_compare_three_way(p.begin(), p.end(), q.begin(), q.end());
}

T0Tree t0_with_child(const T0Tree& t, const T0Tree& child) {
  auto children = t.children();
  children.push_back(child);
  return T0Tree::node(t.components(), t.monomials(), std::move(children));
}

T0Tree t0_with_monomials(const T0Tree& t, std::vector<DecVec> monomials) {
  return T0Tree::node(t.components(), std::move(monomials), t.children());
}

}  // namespace postlie
