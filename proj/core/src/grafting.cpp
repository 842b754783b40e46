#include "postlie/grafting.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace postlie {

TreeComb graft(const DecoratedTree& sigma, const DecVec& a, const DecoratedTree& tau) {
  require_same_dim(sigma.dec(), tau.dec());
  require_same_dim(a, tau.dec());
  TreeComb out;
  for (std::size_t v = 0; v < tau.vertex_count(); ++v)
    out.add(rebuild_at(tau, v, [&](const DecoratedTree& t) { return with_branch(t, a, sigma); }), 1);
  return out;
}

TreeComb deformed_graft(const DecoratedTree& sigma, const DecVec& a, const DecoratedTree& tau) {
  require_same_dim(sigma.dec(), tau.dec());
  require_same_dim(a, tau.dec());
  TreeComb out;
  for_each_vertex(tau, [&](std::size_t v, const DecoratedTree& node) {
    const DecVec& n = node.dec();
    for_each_below(meet(a, n), [&](const DecVec& l) {
      DecVec rest = *n.minus(l);
      DecVec edge = *a.minus(l);
      auto t = rebuild_at(tau, v, [&](const DecoratedTree& x) {
        return with_branch(with_dec(x, rest), edge, sigma);
      });
      out.add(t, binom(n, l));
    });
  });
  return out;
}

TreeComb up(std::size_t i, const DecoratedTree& tau,
            const std::optional<std::vector<std::size_t>>& restrict) {
  if (i >= tau.components()) throw DimensionError("coordinate index out of range");
  DecVec e = DecVec::unit(tau.components(), i);
  TreeComb out;
  auto bump = [&](std::size_t v) {
    out.add(rebuild_at(tau, v, [&](const DecoratedTree& x) { return with_dec(x, x.dec() + e); }), 1);
  };
  if (restrict) {
    for (auto v : *restrict) {
      if (v >= tau.vertex_count()) throw std::out_of_range("vertex index out of range");
      bump(v);
    }
  } else {
    for (std::size_t v = 0; v < tau.vertex_count(); ++v) bump(v);
  }
  return out;
}

TreeComb up_marked(std::size_t i, const DecoratedTree& tau) {
  return up(i, tau, marked_vertices(tau));
}

namespace {

// Adds increments[v] to the decoration of every preorder vertex v at once.
DecoratedTree add_at(const DecoratedTree& t, const std::vector<DecVec>& inc, std::size_t& next) {
  DecVec dec = t.dec() + inc[next++];
  std::vector<DecoratedTree::Branch> branches = t.branches();
  for (auto& br : branches) br.child = add_at(br.child, inc, next);
  return DecoratedTree::node(dec, t.noise(), std::move(branches), t.marked());
}

}  // namespace

TreeComb up_multi(const DecVec& k, const DecoratedTree& tau) {
  require_same_dim(k, tau.dec());
  auto marks = marked_vertices(tau);
  TreeComb out;
  if (marks.empty()) {
    if (k.is_zero()) out.add(tau, 1);
    return out;
  }
  std::vector<DecVec> inc(tau.vertex_count(), DecVec(tau.components()));
  std::function<void(std::size_t, const DecVec&)> distribute = [&](std::size_t j, const DecVec& rest) {
    if (j + 1 == marks.size()) {
      inc[marks[j]] = rest;
      std::size_t next = 0;
      out.add(add_at(tau, inc, next), 1);
      return;
    }
    for_each_below(rest, [&](const DecVec& kv) {
      inc[marks[j]] = kv;
      distribute(j + 1, *rest.minus(kv));
    });
  };
  distribute(0, k);
  return out;
}

TreeComb planted_pre_lie(const DecoratedTree& p, const DecoratedTree& q, bool deformed) {
  if (!is_planted(p) || !is_planted(q)) throw std::invalid_argument("planted_pre_lie: argument is not planted");
  const auto& pa = p.branches().front();
  const auto& qb = q.branches().front();
  TreeComb inner = deformed ? deformed_graft(pa.child, pa.edge, qb.child) : graft(pa.child, pa.edge, qb.child);
  return linear(inner, [&](const DecoratedTree& t) { return TreeComb(planted(qb.edge, t)); });
}

TreeComb graft(const TreeComb& sigma, const DecVec& a, const TreeComb& tau) {
  return bilinear(sigma, tau, [&](const DecoratedTree& s, const DecoratedTree& t) { return graft(s, a, t); });
}

TreeComb deformed_graft(const TreeComb& sigma, const DecVec& a, const TreeComb& tau) {
  return bilinear(sigma, tau,
                  [&](const DecoratedTree& s, const DecoratedTree& t) { return deformed_graft(s, a, t); });
}

TreeComb up(std::size_t i, const TreeComb& tau) {
  return linear(tau, [&](const DecoratedTree& t) { return up(i, t); });
}

TreeComb up_marked(std::size_t i, const TreeComb& tau) {
  return linear(tau, [&](const DecoratedTree& t) { return up_marked(i, t); });
}

T0Comb graft_T0(const T0Tree& sigma, const T0Tree& tau) {
  if (sigma.components() != tau.components()) throw DimensionError("tree dimension mismatch");
  T0Comb out;
  for (std::size_t v = 0; v < tau.vertex_count(); ++v)
    out.add(rebuild_at(tau, v, [&](const T0Tree& t) { return t0_with_child(t, sigma); }), 1);
  return out;
}

T0Comb deformed_graft_T0(const T0Tree& sigma, const DecVec& a, const T0Tree& tau) {
  if (a.size() != tau.components()) throw DimensionError("decoration dimension mismatch");
  if (a.is_zero()) return graft_T0(sigma, tau);
  if (sigma.components() != tau.components()) throw DimensionError("tree dimension mismatch");
  T0Comb out;
  for_each_vertex(tau, [&](std::size_t v, const T0Tree& node) {
    const auto& ms = node.monomials();
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (ms[j] != a) continue;
      auto rest = ms;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      out.add(rebuild_at(tau, v, [&](const T0Tree& t) {
        return t0_with_child(t0_with_monomials(t, rest), sigma);
      }), 1);
    }
  });
  return out;
}

T0Comb up_T0(std::size_t i, const T0Tree& tau) {
  if (i >= tau.components()) throw DimensionError("coordinate index out of range");
  DecVec e = DecVec::unit(tau.components(), i);
  T0Comb out;
  for_each_vertex(tau, [&](std::size_t v, const T0Tree& node) {
    auto ms = node.monomials();
    auto grown = ms;
    grown.push_back(e);
    out.add(rebuild_at(tau, v, [&](const T0Tree& t) { return t0_with_monomials(t, grown); }), 1);
    for (std::size_t j = 0; j < ms.size(); ++j) {
      auto bumped = ms;
      bumped[j] += e;
      out.add(rebuild_at(tau, v, [&](const T0Tree& t) { return t0_with_monomials(t, bumped); }), 1);
    }
  });
  return out;
}

}  // namespace postlie
