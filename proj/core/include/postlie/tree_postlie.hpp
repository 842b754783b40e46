#pragma once

#include <cstddef>

#include "postlie/envelope.hpp"
#include "postlie/grafting.hpp"
#include "postlie/t0tree.hpp"
#include "postlie/tree.hpp"

namespace postlie {

/// I_a(tau), kept unwrapped.
struct Planted {
  DecVec a;
  DecoratedTree tree;
  friend bool operator==(const Planted&, const Planted&) = default;
  friend std::strong_ordering operator<=>(const Planted& x, const Planted& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.tree <=> y.tree;
  }
};

using VBasis = Generator<Planted>;
using VComb = LinComb<VBasis>;

DecoratedTree to_tree(const Planted& p);
/// Throws std::invalid_argument when t is not planted.
Planted to_planted(const DecoratedTree& t);

/// Span of planted trees and X_i with the deformed grafting post-Lie product.
class TreeAlgebra {
 public:
  using Abelian = Planted;
  explicit TreeAlgebra(std::size_t components) : components_(components) {}
  std::size_t x_count() const { return components_; }
  LinComb<Planted> bracket_with_x(const Planted& g, std::size_t i) const;
  VComb post(const VBasis& x, const VBasis& y) const;

 private:
  std::size_t components_;
};

using TreeEnvelope = Envelope<TreeAlgebra>;
using TreeEnvBasis = EnvBasis<Planted>;
using TreeEnvElement = LinComb<TreeEnvBasis>;

VComb post_product(const VBasis& u, const VBasis& v);
VComb bracket0_trees(const VBasis& u, const VBasis& v);

/// sigma ⋆_2 tau for sigma = X^k prod I_{a_i}(sigma_i): the forest is grafted
/// into I_b(tau) by the envelope action with tau's vertices marked, then k is
/// distributed over the marked vertices.
TreeComb star2(const TreeEnvelope& env, const TreeEnvBasis& sigma, const DecoratedTree& tau,
               const DecVec& b);

struct IdentificationReport {
  TreeEnvElement via_star2;
  TreeEnvElement via_triangle;
  bool ok() const { return via_star2 == via_triangle; }
};

IdentificationReport verify_identification(const TreeEnvelope& env, const TreeEnvBasis& sigma,
                                           const DecoratedTree& tau, const DecVec& b);

/// I_a(tau) over T0 trees.
struct T0Planted {
  DecVec a;
  T0Tree tree;
  friend bool operator==(const T0Planted&, const T0Planted&) = default;
  friend std::strong_ordering operator<=>(const T0Planted& x, const T0Planted& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.tree <=> y.tree;
  }
};

using V0Basis = Generator<T0Planted>;
using V0Comb = LinComb<V0Basis>;

/// Planted T0 trees and X_i with the T0 deformed product and the T0 ↑^i.
class T0Algebra {
 public:
  using Abelian = T0Planted;
  explicit T0Algebra(std::size_t components) : components_(components) {}
  std::size_t x_count() const { return components_; }
  LinComb<T0Planted> bracket_with_x(const T0Planted& g, std::size_t i) const;
  V0Comb post(const V0Basis& x, const V0Basis& y) const;

 private:
  std::size_t components_;
};

using T0Envelope = Envelope<T0Algebra>;

}  // namespace postlie
