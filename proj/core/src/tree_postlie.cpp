#include "postlie/tree_postlie.hpp"

#include <stdexcept>

namespace postlie {

DecoratedTree to_tree(const Planted& p) { return planted(p.a, p.tree); }

Planted to_planted(const DecoratedTree& t) {
  if (!is_planted(t)) throw std::invalid_argument("tree is not planted");
  const auto& br = t.branches().front();
  return {br.edge, br.child};
}

LinComb<Planted> TreeAlgebra::bracket_with_x(const Planted& g, std::size_t i) const {
  if (auto a = g.a.minus(DecVec::unit(g.a.size(), i))) return LinComb<Planted>(Planted{*a, g.tree});
  return {};
}

VComb TreeAlgebra::post(const VBasis& x, const VBasis& y) const {
  const auto* q = std::get_if<Planted>(&y);
  if (!q) return {};
  VComb out;
  if (const auto* xi = std::get_if<XLetter>(&x)) {
    for (const auto& [t, c] : up(xi->i, q->tree)) out.add(VBasis(Planted{q->a, t}), c);
  } else {
    const auto& p = std::get<Planted>(x);
    for (const auto& [t, c] : deformed_graft(p.tree, p.a, q->tree)) out.add(VBasis(Planted{q->a, t}), c);
  }
  return out;
}

namespace {

std::size_t components_of(const VBasis& v) {
  if (const auto* p = std::get_if<Planted>(&v)) return p->a.size();
  return 0;
}

}  // namespace

VComb post_product(const VBasis& u, const VBasis& v) {
  std::size_t d = std::max(components_of(u), components_of(v));
  return TreeAlgebra(d).post(u, v);
}

VComb bracket0_trees(const VBasis& u, const VBasis& v) {
  VComb out;
  if (const auto* p = std::get_if<Planted>(&u)) {
    if (const auto* x = std::get_if<XLetter>(&v))
      for (const auto& [g, c] : TreeAlgebra(p->a.size()).bracket_with_x(*p, x->i)) out.add(VBasis(g), c);
  } else if (const auto* q = std::get_if<Planted>(&v)) {
    const auto& x = std::get<XLetter>(u);
    for (const auto& [g, c] : TreeAlgebra(q->a.size()).bracket_with_x(*q, x.i)) out.add(VBasis(g), -c);
  }
  return out;
}

TreeComb star2(const TreeEnvelope& env, const TreeEnvBasis& sigma, const DecoratedTree& tau,
               const DecVec& b) {
  TreeEnvBasis forest = env.unit_basis();
  forest.forest = sigma.forest;
  DecVec k(tau.components());
  for (std::size_t i = 0; i < sigma.xexp.size(); ++i) k = k.with(i, static_cast<int>(sigma.xexp[i]));

  TreeEnvBasis target = env.basis_of(VBasis(Planted{b, mark_all(tau)}));
  TreeComb out;
  for (const auto& [w, c] : env.triangle(forest, target)) {
    if (w.length() != 1 || w.forest.size() != 1 || w.forest.front().a != b)
      throw std::logic_error("star2: forest action left the planted span");
    for (const auto& [t, d] : up_multi(k, w.forest.front().tree)) out.add(strip_marks(t), c * d);
  }
  return out;
}

IdentificationReport verify_identification(const TreeEnvelope& env, const TreeEnvBasis& sigma,
                                           const DecoratedTree& tau, const DecVec& b) {
  IdentificationReport rep;
  for (const auto& [t, c] : star2(env, sigma, tau, b)) rep.via_star2.add(env.basis_of(VBasis(Planted{b, t})), c);
  rep.via_triangle = env.triangle(sigma, env.basis_of(VBasis(Planted{b, tau})));
  return rep;
}

LinComb<T0Planted> T0Algebra::bracket_with_x(const T0Planted& g, std::size_t i) const {
  if (auto a = g.a.minus(DecVec::unit(g.a.size(), i))) return LinComb<T0Planted>(T0Planted{*a, g.tree});
  return {};
}

V0Comb T0Algebra::post(const V0Basis& x, const V0Basis& y) const {
  const auto* q = std::get_if<T0Planted>(&y);
  if (!q) return {};
  V0Comb out;
  if (const auto* xi = std::get_if<XLetter>(&x)) {
    for (const auto& [t, c] : up_T0(xi->i, q->tree)) out.add(V0Basis(T0Planted{q->a, t}), c);
  } else {
    const auto& p = std::get<T0Planted>(x);
    for (const auto& [t, c] : deformed_graft_T0(p.tree, p.a, q->tree)) out.add(V0Basis(T0Planted{q->a, t}), c);
  }
  return out;
}

}  // namespace postlie
