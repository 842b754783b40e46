#include "postlie/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace postlie {

std::vector<DecVec> enumerate_decs(std::size_t components, int max_dec) {
  std::vector<DecVec> out;
  DecVec bound(components);
  for (std::size_t i = 0; i < components; ++i) bound = bound.with(i, max_dec);
  for_each_below(bound, [&](const DecVec& v) { out.push_back(v); });
  return out;
}

namespace {

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Calls f(chosen) for every multiset of items (indices nondecreasing) whose
// summed cost stays within budget.
template <class F>
void for_each_multiset(const std::vector<std::size_t>& cost, std::size_t budget, F&& f) {
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t left) {
    f(chosen);
    for (std::size_t j = from; j < cost.size(); ++j) {
      if (cost[j] > left) continue;
      chosen.push_back(j);
      rec(j, left - cost[j]);
      chosen.pop_back();
    }
  };
  rec(0, budget);
}

std::size_t count_noise(const DecoratedTree& t) {
  std::size_t n = t.noise();
  for (const auto& br : t.branches()) n += count_noise(br.child);
  return n;
}

std::size_t planar_noise(const PlanarTree& t) {
  std::size_t n = t.noise;
  for (const auto& s : t.slots)
    if (!s.is_x) n += planar_noise(s.child);
  return n;
}

}  // namespace

std::vector<DecoratedTree> enumerate_trees(const EnumParams& p) {
  const auto decs = enumerate_decs(p.components(), p.max_dec);
  // by_budget[e][n]: trees with at most e edges and at most n noise edges.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<DecoratedTree>> memo;
  std::function<const std::vector<DecoratedTree>&(std::size_t, std::size_t)> trees =
      [&](std::size_t e, std::size_t n) -> const std::vector<DecoratedTree>& {
    auto key = std::make_pair(e, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<TreeBranch> branches;
    std::vector<std::size_t> cost;
    if (e > 0) {
      for (const auto& t : trees(e - 1, n))
        for (const auto& a : decs) {
          branches.push_back({a, t});
          cost.push_back(1 + t.edge_count());
        }
    }
    std::vector<std::size_t> noise_of(branches.size());
    std::vector<DecoratedTree> out;
    for (std::size_t r = 0; r <= std::min(e, n); ++r) {
      for_each_multiset(cost, e - r, [&](const std::vector<std::size_t>& chosen) {
        std::size_t noise = r;
        std::vector<TreeBranch> bs;
        for (auto j : chosen) {
          bs.push_back(branches[j]);
          noise += count_noise(branches[j].child);
        }
        if (noise > n) return;
        for (const auto& dec : decs) out.push_back(DecoratedTree::node(dec, static_cast<unsigned>(r), bs));
      });
    }
    sort_unique(out);
    return memo.emplace(key, std::move(out)).first->second;
  };
  return trees(p.max_edges, p.max_noise);
}

std::vector<Planted> enumerate_planted(const EnumParams& p) {
  std::vector<Planted> out;
  if (p.max_edges == 0) return out;
  EnumParams q = p;
  q.max_edges = p.max_edges - 1;
  for (const auto& t : enumerate_trees(q))
    for (const auto& a : enumerate_decs(p.components(), p.max_dec)) out.push_back({a, t});
  sort_unique(out);
  return out;
}

std::vector<T0Tree> enumerate_t0_trees(const EnumParams& p, std::size_t max_factors) {
  std::vector<DecVec> factors;
  for (const auto& v : enumerate_decs(p.components(), p.max_dec))
    if (!v.is_zero()) factors.push_back(v);
  std::vector<std::vector<DecVec>> factor_sets;
  std::vector<std::size_t> unit_cost(factors.size(), 1);
  for_each_multiset(unit_cost, max_factors, [&](const std::vector<std::size_t>& chosen) {
    std::vector<DecVec> s;
    for (auto j : chosen) s.push_back(factors[j]);
    factor_sets.push_back(s);
  });
  std::map<std::size_t, std::vector<T0Tree>> memo;
  std::function<const std::vector<T0Tree>&(std::size_t)> trees = [&](std::size_t e) -> const std::vector<T0Tree>& {
    if (auto it = memo.find(e); it != memo.end()) return it->second;
    std::vector<T0Tree> subs;
    std::vector<std::size_t> cost;
    if (e > 0)
      for (const auto& t : trees(e - 1)) {
        subs.push_back(t);
        cost.push_back(1 + t.edge_count());
      }
    std::vector<T0Tree> out;
    for_each_multiset(cost, e, [&](const std::vector<std::size_t>& chosen) {
      std::vector<T0Tree> cs;
      for (auto j : chosen) cs.push_back(subs[j]);
      for (const auto& fs : factor_sets) out.push_back(T0Tree::node(p.components(), fs, cs));
    });
    sort_unique(out);
    return memo.emplace(e, std::move(out)).first->second;
  };
  return trees(p.max_edges);
}

std::vector<PlanarTree> enumerate_planar_trees(const EnumParams& p) {
  const auto decs = enumerate_decs(p.components(), p.max_dec);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<PlanarTree>> memo;
  std::function<const std::vector<PlanarTree>&(std::size_t, std::size_t)> trees =
      [&](std::size_t e, std::size_t n) -> const std::vector<PlanarTree>& {
    auto key = std::make_pair(e, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<PlanarTree> out;
    // Slot sequences: extend a partial node one slot at a time.
    std::function<void(PlanarTree, std::size_t, std::size_t)> grow = [&](PlanarTree node, std::size_t left,
                                                                          std::size_t noise_left) {
      out.push_back(node);
      if (left == 0) return;
      for (std::size_t i = 0; i < p.components(); ++i) {
        PlanarTree next = node;
        next.slots.push_back(PlanarSlot::x(i));
        grow(std::move(next), left - 1, noise_left);
      }
      for (const auto& sub : trees(left - 1, noise_left)) {
        std::size_t used = 1 + sub.edge_count();
        std::size_t sub_noise = planar_noise(sub);
        for (const auto& a : decs) {
          PlanarTree next = node;
          next.slots.push_back(PlanarSlot::kernel(a, sub));
          grow(std::move(next), left - used, noise_left - sub_noise);
        }
      }
    };
    for (std::size_t r = 0; r <= std::min(e, n); ++r) {
      PlanarTree root;
      root.noise = static_cast<unsigned>(r);
      grow(root, e - r, n - r);
    }
    sort_unique(out);
    return memo.emplace(key, std::move(out)).first->second;
  };
  return trees(p.max_edges, p.max_noise);
}

std::vector<MIMonomial> enumerate_monomials(std::size_t components, unsigned max_arity, int max_label,
                                            unsigned max_degree) {
  std::vector<MIMonomial> vars;
  for (unsigned k = 0; k <= max_arity; ++k) vars.push_back(MIMonomial::arity(k));
  for (const auto& n : enumerate_decs(components, max_label))
    if (!n.is_zero()) vars.push_back(MIMonomial::label(n));
  std::vector<MIMonomial> out;
  std::vector<std::size_t> unit_cost(vars.size(), 1);
  for_each_multiset(unit_cost, max_degree, [&](const std::vector<std::size_t>& chosen) {
    MIMonomial m;
    for (auto j : chosen) m = m * vars[j];
    out.push_back(m);
  });
  sort_unique(out);
  return out;
}

std::vector<MIGenerator> enumerate_mi_generators(const EnumParams& p) {
  std::vector<MIMonomial> vars;
  for (unsigned k = 0; k <= p.max_arity; ++k) vars.push_back(MIMonomial::arity(k));
  for (const auto& n : enumerate_decs(p.components(), p.max_dec))
    if (!n.is_zero()) vars.push_back(MIMonomial::label(n));
  std::vector<MIMonomial> gammas;
  std::function<void(std::size_t, MIMonomial, std::size_t)> pick = [&](std::size_t from, MIMonomial m,
                                                                         std::size_t left) {
    gammas.push_back(m);
    if (left == 0) return;
    for (std::size_t j = from; j < vars.size(); ++j) pick(j + 1, m * vars[j], left - 1);
  };
  pick(0, MIMonomial(), p.max_support);
  std::vector<MIGenerator> out;
  for (std::size_t i = 0; i < p.components(); ++i) out.push_back(MIGenerator(XLetter{i}));
  for (const auto& n : enumerate_decs(p.components(), p.max_dec))
    for (const auto& g : gammas)
      if (arity_grade(g) >= 0) out.push_back(MIGenerator(Deriv{g, n}));
  sort_unique(out);
  return out;
}

}  // namespace postlie
