#pragma once

#include <compare>
#include <cstddef>
#include <variant>
#include <vector>

#include "postlie/tree_postlie.hpp"

namespace postlie {

struct PlanarSlot;

/// Planar tree without node decorations. Polynomial decorations are carried
/// by terminal X_i edges; the noises sit in front of all other slots.
struct PlanarTree {
  unsigned noise = 0;
  std::vector<PlanarSlot> slots;

  std::size_t vertex_count() const;
  std::size_t edge_count() const;
};

/// One ordered child slot: a terminal X_i edge or a Kernel(a) edge to a subtree.
struct PlanarSlot {
  bool is_x = false;
  std::size_t i = 0;
  DecVec a;
  PlanarTree child;

  static PlanarSlot x(std::size_t i) { return {true, i, {}, {}}; }
  static PlanarSlot kernel(const DecVec& a, PlanarTree child) { return {false, 0, a, std::move(child)}; }
};

bool operator==(const PlanarTree& a, const PlanarTree& b);
std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b);
bool operator==(const PlanarSlot& a, const PlanarSlot& b);
std::strong_ordering operator<=>(const PlanarSlot& a, const PlanarSlot& b);

/// I_a(tau) with tau planar.
struct PlanarPlanted {
  DecVec a;
  PlanarTree tree;
  friend bool operator==(const PlanarPlanted&, const PlanarPlanted&) = default;
  friend std::strong_ordering operator<=>(const PlanarPlanted& x, const PlanarPlanted& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.tree <=> y.tree;
  }
};

using PlanarV = Generator<PlanarPlanted>;
using PlanarComb = LinComb<PlanarTree>;
using PlanarVComb = LinComb<PlanarV>;

/// sigma inserted in the first slot after the noises, at every vertex.
PlanarComb left_graft_tree(const PlanarV& sigma, const PlanarTree& tau);
/// 0 when tau is an X; I_b(left_graft_tree(sigma, tau_hat)) for tau = I_b(tau_hat).
PlanarVComb left_graft(const PlanarV& sigma, const PlanarV& tau);

/// Quotient by the commutation relations, X edges moved to the front and
/// merged into the node decoration.
TreeComb planar_normalize(const PlanarTree& t, std::size_t components);
TreeComb planar_normalize(const PlanarComb& t, std::size_t components);
VComb planar_normalize(const PlanarV& v, std::size_t components);
VComb planar_normalize(const PlanarVComb& v, std::size_t components);

/// Every result reachable by resolving the relations in any order at every
/// node; the quotient map is well defined iff this has one element.
std::vector<TreeComb> planar_normalize_all_orders(const PlanarTree& t, std::size_t components);

/// Planar representative of a decorated tree: X edges first, in index order.
PlanarTree to_planar(const DecoratedTree& t);
PlanarV to_planar(const VBasis& v);

struct LeftEquivReport {
  VComb planar_route;
  VComb direct_route;
  bool ok() const { return planar_route == direct_route; }
};

LeftEquivReport check_left_equiv(const PlanarV& sigma, const PlanarV& tau, std::size_t components);

}  // namespace postlie
