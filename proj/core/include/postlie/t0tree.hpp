#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <vector>

#include "postlie/decvec.hpp"
#include "postlie/lincomb.hpp"

namespace postlie {

/// Tree whose edges all carry (I, 0) and whose nodes each carry a noise and a
/// multiset of polynomial factors X^{l_j}. The factors are kept apart:
/// X^{l} X^{m} is not X^{l+m}. Factors X^0 are not allowed.
class T0Tree {
 public:
  static T0Tree node(std::size_t components, std::vector<DecVec> monomials = {},
                     std::vector<T0Tree> children = {});

  std::size_t components() const { return n_->components; }
  const std::vector<DecVec>& monomials() const { return n_->monomials; }
  const std::vector<T0Tree>& children() const { return n_->children; }
  std::size_t vertex_count() const { return n_->vertices; }
  std::size_t edge_count() const { return n_->vertices - 1; }
  std::size_t hash() const { return n_->hash; }

  friend bool operator==(const T0Tree& a, const T0Tree& b);
  friend std::strong_ordering operator<=>(const T0Tree& a, const T0Tree& b);

 private:
  struct Node {
    std::size_t components = 0;
    std::vector<DecVec> monomials;
    std::vector<T0Tree> children;
    std::size_t vertices = 1;
    std::size_t hash = 0;
  };
  explicit T0Tree(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

using T0Comb = LinComb<T0Tree>;

T0Tree t0_with_child(const T0Tree& t, const T0Tree& child);
T0Tree t0_with_monomials(const T0Tree& t, std::vector<DecVec> monomials);

template <class F>
void for_each_vertex(const T0Tree& t, F&& f, std::size_t offset = 0) {
  f(offset, t);
  std::size_t next = offset + 1;
  for (const auto& c : t.children()) {
    for_each_vertex(c, f, next);
    next += c.vertex_count();
  }
}

template <class F>
T0Tree rebuild_at(const T0Tree& t, std::size_t index, F&& f) {
  if (index == 0) return f(t);
  --index;
  std::vector<T0Tree> children = t.children();
  for (auto& c : children) {
    if (index < c.vertex_count()) {
      c = rebuild_at(c, index, f);
      return T0Tree::node(t.components(), t.monomials(), std::move(children));
    }
    index -= c.vertex_count();
  }
  throw std::out_of_range("rebuild_at: vertex index out of range");
}

}  // namespace postlie
