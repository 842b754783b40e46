#include "postlie/planar.hpp"

#include <algorithm>
#include <functional>

namespace postlie {

std::size_t PlanarTree::vertex_count() const {
  std::size_t n = 1;
  for (const auto& s : slots)
    if (!s.is_x) n += s.child.vertex_count();
  return n;
}

std::size_t PlanarTree::edge_count() const {
  std::size_t n = noise;
  for (const auto& s : slots) n += s.is_x ? 1 : 1 + s.child.edge_count();
  return n;
}

bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.noise == b.noise && a.slots == b.slots; }

std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
  if (auto c = a.noise <=> b.noise; c != 0) return c;
  return std::lexicographical_compare_three_way(a.slots.begin(), a.slots.end(), b.slots.begin(), b.slots.end());
}

bool operator==(const PlanarSlot& a, const PlanarSlot& b) {
  if (a.is_x != b.is_x) return false;
  if (a.is_x) return a.i == b.i;
  return a.a == b.a && a.child == b.child;
}

std::strong_ordering operator<=>(const PlanarSlot& a, const PlanarSlot& b) {
  if (a.is_x != b.is_x) return a.is_x ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_x) return a.i <=> b.i;
  if (auto c = a.a <=> b.a; c != 0) return c;
  return a.child <=> b.child;
}

namespace {

void insert_everywhere(const PlanarSlot& s, const PlanarTree& t, PlanarComb& out,
                       const std::function<PlanarTree(PlanarTree)>& wrap) {
  PlanarTree here = t;
  here.slots.insert(here.slots.begin(), s);
  out.add(wrap(std::move(here)), 1);
  for (std::size_t j = 0; j < t.slots.size(); ++j) {
    if (t.slots[j].is_x) continue;
    insert_everywhere(s, t.slots[j].child, out, [&, j](PlanarTree sub) {
      PlanarTree p = t;
      p.slots[j].child = std::move(sub);
      return wrap(std::move(p));
    });
  }
}

PlanarSlot slot_of(const PlanarV& sigma) {
  if (const auto* x = std::get_if<XLetter>(&sigma)) return PlanarSlot::x(x->i);
  const auto& p = std::get<PlanarPlanted>(sigma);
  return PlanarSlot::kernel(p.a, p.tree);
}

// Letters of one node after the children have been normalized, expanded
// multilinearly: each entry is a word with its coefficient.
std::vector<std::pair<std::vector<VBasis>, Coefficient>> node_words(
    const PlanarTree& t, const std::function<std::vector<std::pair<DecoratedTree, Coefficient>>(const PlanarTree&)>& child) {
  std::vector<std::pair<std::vector<VBasis>, Coefficient>> words{{{}, 1}};
  for (const auto& s : t.slots) {
    std::vector<std::pair<std::vector<VBasis>, Coefficient>> next;
    if (s.is_x) {
      for (auto& [w, c] : words) {
        w.push_back(VBasis(XLetter{s.i}));
        next.push_back({std::move(w), c});
      }
    } else {
      auto options = child(s.child);
      for (const auto& [w, c] : words)
        for (const auto& [tree, d] : options) {
          auto nw = w;
          nw.push_back(VBasis(Planted{s.a, tree}));
          next.push_back({std::move(nw), c * d});
        }
    }
    words = std::move(next);
  }
  return words;
}

DecoratedTree tree_of(const TreeEnvBasis& b, unsigned noise, std::size_t components) {
  DecVec dec(components);
  for (std::size_t i = 0; i < b.xexp.size(); ++i) dec = dec.with(i, static_cast<int>(b.xexp[i]));
  std::vector<TreeBranch> branches;
  for (const auto& p : b.forest) branches.push_back({p.a, p.tree});
  return DecoratedTree::node(dec, noise, std::move(branches));
}

}  // namespace

PlanarComb left_graft_tree(const PlanarV& sigma, const PlanarTree& tau) {
  PlanarComb out;
  insert_everywhere(slot_of(sigma), tau, out, [](PlanarTree t) { return t; });
  return out;
}

PlanarVComb left_graft(const PlanarV& sigma, const PlanarV& tau) {
  const auto* q = std::get_if<PlanarPlanted>(&tau);
  if (!q) return {};
  PlanarVComb out;
  for (const auto& [t, c] : left_graft_tree(sigma, q->tree)) out.add(PlanarV(PlanarPlanted{q->a, t}), c);
  return out;
}

TreeComb planar_normalize(const PlanarTree& t, std::size_t components) {
  TreeEnvelope env{TreeAlgebra(components)};
  std::function<TreeComb(const PlanarTree&)> go = [&](const PlanarTree& node) {
    auto words = node_words(node, [&](const PlanarTree& c) {
      std::vector<std::pair<DecoratedTree, Coefficient>> v;
      for (const auto& [tree, k] : go(c)) v.push_back({tree, k});
      return v;
    });
    TreeComb out;
    for (const auto& [w, c] : words)
      for (const auto& [b, k] : env.normal_form(w)) out.add(tree_of(b, node.noise, components), c * k);
    return out;
  };
  return go(t);
}

TreeComb planar_normalize(const PlanarComb& t, std::size_t components) {
  return linear(t, [&](const PlanarTree& p) { return planar_normalize(p, components); });
}

VComb planar_normalize(const PlanarV& v, std::size_t components) {
  if (const auto* x = std::get_if<XLetter>(&v)) return VComb(VBasis(*x));
  const auto& p = std::get<PlanarPlanted>(v);
  VComb out;
  for (const auto& [t, c] : planar_normalize(p.tree, components)) out.add(VBasis(Planted{p.a, t}), c);
  return out;
}

VComb planar_normalize(const PlanarVComb& v, std::size_t components) {
  return linear(v, [&](const PlanarV& p) { return planar_normalize(p, components); });
}

std::vector<TreeComb> planar_normalize_all_orders(const PlanarTree& t, std::size_t components) {
  TreeEnvelope env{TreeAlgebra(components)};
  std::vector<TreeComb> results;
  // Children first: every combination of their possible results.
  std::vector<std::vector<TreeComb>> child_results;
  for (const auto& s : t.slots)
    if (!s.is_x) child_results.push_back(planar_normalize_all_orders(s.child, components));
  std::vector<std::size_t> pick(child_results.size(), 0);
  while (true) {
    std::size_t k = 0;
    auto words = node_words(t, [&](const PlanarTree&) {
      std::vector<std::pair<DecoratedTree, Coefficient>> v;
      for (const auto& [tree, c] : child_results[k][pick[k]]) v.push_back({tree, c});
      ++k;
      return v;
    });
    std::vector<TreeComb> acc{TreeComb()};
    for (const auto& [w, c] : words) {
      std::vector<TreeComb> next;
      for (const auto& r : env.all_rewrite_results(w))
        for (const auto& a : acc) {
          TreeComb x = a;
          for (const auto& [b, d] : r) x.add(tree_of(b, t.noise, components), c * d);
          next.push_back(std::move(x));
        }
      acc = std::move(next);
    }
    for (auto& a : acc)
      if (std::find(results.begin(), results.end(), a) == results.end()) results.push_back(std::move(a));
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == child_results[j].size()) pick[j++] = 0;
    if (j == pick.size()) break;
  }
  return results;
}

PlanarTree to_planar(const DecoratedTree& t) {
  PlanarTree p;
  p.noise = t.noise();
  for (std::size_t i = 0; i < t.components(); ++i)
    for (int k = 0; k < t.dec()[i]; ++k) p.slots.push_back(PlanarSlot::x(i));
  for (const auto& br : t.branches()) p.slots.push_back(PlanarSlot::kernel(br.edge, to_planar(br.child)));
  return p;
}

PlanarV to_planar(const VBasis& v) {
  if (const auto* x = std::get_if<XLetter>(&v)) return PlanarV(*x);
  const auto& p = std::get<Planted>(v);
  return PlanarV(PlanarPlanted{p.a, to_planar(p.tree)});
}

LeftEquivReport check_left_equiv(const PlanarV& sigma, const PlanarV& tau, std::size_t components) {
  LeftEquivReport rep;
  rep.planar_route = planar_normalize(left_graft(sigma, tau), components);
  TreeAlgebra alg(components);
  for (const auto& [s, c] : planar_normalize(sigma, components))
    for (const auto& [t, d] : planar_normalize(tau, components)) rep.direct_route.add(alg.post(s, t), c * d);
  return rep;
}

}  // namespace postlie
