#include <string>

#include "postlie/enumerate.hpp"
#include "postlie/grafting.hpp"
#include "postlie/planar.hpp"
#include "postlie/syntax.hpp"
#include "postlie/tree_postlie.hpp"
#include "suite_support.hpp"

namespace postlie::detail {

namespace {

std::vector<DecVec> zero_and_axes(std::size_t components) {
  std::vector<DecVec> out{DecVec(components)};
  for (std::size_t i = 0; i < components; ++i) out.push_back(DecVec::unit(components, i));
  return out;
}

// Pair checks are cheap; they draw this many times more samples.
constexpr std::size_t kPairSamples = 20;

std::size_t edges_of(const DecoratedTree& t) { return t.edge_count(); }

std::string show(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += " | ";
    s += p;
  }
  return s;
}

EnumParams with_edges(EnumParams p, std::size_t e) {
  p.max_edges = e;
  return p;
}

}  // namespace

void suite_multi_pre_lie(Recorder& rec, const EnumParams& p) {
  const auto trees = enumerate_trees(p);
  const auto as = zero_and_axes(p.components());
  auto check = [&](const DecoratedTree& t1, const DecoratedTree& t2, const DecoratedTree& t3, const DecVec& a,
                   const DecVec& b) {
    TreeComb x(t1), y(t2), z(t3);
    TreeComb lhs = graft(graft(x, a, y), b, z) - graft(x, a, graft(y, b, z));
    TreeComb rhs = graft(graft(y, b, x), a, z) - graft(y, b, graft(x, a, z));
    rec.check(lhs == rhs, [&] {
      return SuiteFailure{show({format(t1), format(t2), format(t3), a.to_string(), b.to_string()}),
                          format(lhs - rhs)};
    });
  };
  sweep(bucket(trees, edges_of), 3, p.max_total_edges, [&](const std::vector<DecoratedTree>& t) {
    for (const auto& a : as)
      for (const auto& b : as) check(t[0], t[1], t[2], a, b);
  });
  Rng rng(p.seed);
  for (std::size_t s = 0; s < p.samples; ++s)
    check(rng.pick(trees), rng.pick(trees), rng.pick(trees), rng.pick(as), rng.pick(as));

  // The deformed products: lower-order correction and the planted pre-Lie law.
  const Scaling scalings[] = {Scaling::parabolic(p.components()), Scaling::unit(p.components())};
  sweep(bucket(trees, edges_of), 2, p.max_total_edges, [&](const std::vector<DecoratedTree>& t) {
    for (const auto& a : enumerate_decs(p.components(), p.max_dec)) {
      TreeComb diff = deformed_graft(t[0], a, t[1]) - graft(t[0], a, t[1]);
      for (const auto& s : scalings) {
        std::int64_t bound = grading(t[0], s) + grading(t[1], s) + snorm(a, s);
        bool lower = true;
        for (const auto& [u, c] : diff) lower = lower && grading(u, s) < bound;
        rec.check(lower, [&] { return SuiteFailure{show({format(t[0]), a.to_string(), format(t[1])}), format(diff)}; });
      }
    }
    rec.count("deformation-order");
  });

  const auto planted = enumerate_planted(with_edges(p, p.max_edges + 1));
  auto planted_bucket = bucket(planted, [](const Planted& q) { return q.tree.edge_count() + 1; });
  auto pre_lie = [&](const Planted& x, const Planted& y, const Planted& z, bool deformed) {
    auto prod = [&](const TreeComb& l, const TreeComb& r) {
      return bilinear(l, r, [&](const DecoratedTree& u, const DecoratedTree& v) {
        return planted_pre_lie(u, v, deformed);
      });
    };
    TreeComb X(to_tree(x)), Y(to_tree(y)), Z(to_tree(z));
    TreeComb lhs = prod(prod(X, Y), Z) - prod(X, prod(Y, Z));
    TreeComb rhs = prod(prod(Y, X), Z) - prod(Y, prod(X, Z));
    rec.check(lhs == rhs, [&] {
      return SuiteFailure{show({format(to_tree(x)), format(to_tree(y)), format(to_tree(z))}), format(lhs - rhs)};
    });
    rec.count(deformed ? "planted-pre-lie-deformed" : "planted-pre-lie");
  };
  sweep(planted_bucket, 3, p.max_total_edges + 2, [&](const std::vector<Planted>& t) {
    pre_lie(t[0], t[1], t[2], false);
    pre_lie(t[0], t[1], t[2], true);
  });
  for (std::size_t s = 0; s < p.samples; ++s) {
    const auto &x = rng.pick(planted), &y = rng.pick(planted), &z = rng.pick(planted);
    pre_lie(x, y, z, false);
    pre_lie(x, y, z, true);
  }

  const auto t0 = enumerate_t0_trees(with_edges(p, p.max_total_edges), 2);
  const auto t0_decs = enumerate_decs(p.components(), p.max_dec);
  auto t0_bucket = bucket(t0, [](const T0Tree& t) { return t.edge_count(); });
  auto t0_pre_lie = [&](const T0Tree& x, const T0Tree& y, const T0Tree& z, const DecVec& a, const DecVec& b) {
    auto g = [&](const T0Comb& l, const DecVec& e, const T0Comb& r) {
      return bilinear(l, r, [&](const T0Tree& u, const T0Tree& v) { return deformed_graft_T0(u, e, v); });
    };
    T0Comb X(x), Y(y), Z(z);
    T0Comb lhs = g(g(X, a, Y), b, Z) - g(X, a, g(Y, b, Z));
    T0Comb rhs = g(g(Y, b, X), a, Z) - g(Y, b, g(X, a, Z));
    rec.check(lhs == rhs, [&] {
      return SuiteFailure{show({format(x), format(y), format(z), a.to_string(), b.to_string()}), format(lhs - rhs)};
    });
    rec.count("t0-pre-lie");
  };
  sweep(t0_bucket, 3, p.max_total_edges > 0 ? p.max_total_edges - 1 : 0, [&](const std::vector<T0Tree>& t) {
    for (const auto& a : t0_decs)
      for (const auto& b : t0_decs) t0_pre_lie(t[0], t[1], t[2], a, b);
  });
  for (std::size_t s = 0; s < p.samples; ++s)
    t0_pre_lie(rng.pick(t0), rng.pick(t0), rng.pick(t0), rng.pick(t0_decs), rng.pick(t0_decs));
}

void suite_derivation(Recorder& rec, const EnumParams& p) {
  const auto trees = enumerate_trees(p);
  const auto as = zero_and_axes(p.components());
  auto check = [&](const DecoratedTree& sigma, const DecoratedTree& tau, const DecVec& a, std::size_t i) {
    TreeComb lhs = up(i, graft(sigma, a, tau));
    TreeComb rhs = graft(up(i, TreeComb(sigma)), a, TreeComb(tau)) + graft(TreeComb(sigma), a, up(i, TreeComb(tau)));
    rec.check(lhs == rhs, [&] {
      return SuiteFailure{show({format(sigma), format(tau), a.to_string(), std::to_string(i)}), format(lhs - rhs)};
    });
    TreeComb right = strip_marks(up_marked(i, graft(sigma, a, mark_all(tau))));
    TreeComb expect = graft(TreeComb(sigma), a, up(i, TreeComb(tau)));
    rec.check(right == expect, [&] {
      return SuiteFailure{show({"N_tau", format(sigma), format(tau), a.to_string(), std::to_string(i)}),
                          format(right - expect)};
    });
  };
  sweep(bucket(trees, edges_of), 2, p.max_total_edges, [&](const std::vector<DecoratedTree>& t) {
    for (const auto& a : as)
      for (std::size_t i = 0; i < p.components(); ++i) check(t[0], t[1], a, i);
  });
  Rng rng(p.seed);
  for (std::size_t s = 0; s < kPairSamples * p.samples; ++s)
    check(rng.pick(trees), rng.pick(trees), rng.pick(as), rng.below(p.components()));
}

void suite_prop_non_com(Recorder& rec, const EnumParams& p) {
  const auto trees = enumerate_trees(p);
  const auto as = enumerate_decs(p.components(), 2);
  auto check = [&](const DecoratedTree& sigma, const DecoratedTree& tau, const DecVec& a, std::size_t i) {
    TreeComb lhs = strip_marks(up_marked(i, deformed_graft(sigma, a, mark_all(tau))));
    TreeComb rhs = deformed_graft(TreeComb(sigma), a, up(i, TreeComb(tau)));
    if (auto lower = a.minus(DecVec::unit(a.size(), i))) rhs -= deformed_graft(sigma, *lower, tau);
    rec.check(lhs == rhs, [&] {
      return SuiteFailure{show({format(sigma), format(tau), a.to_string(), std::to_string(i)}), format(lhs - rhs)};
    });
  };
  sweep(bucket(trees, edges_of), 2, p.max_total_edges, [&](const std::vector<DecoratedTree>& t) {
    for (const auto& a : as)
      for (std::size_t i = 0; i < p.components(); ++i) check(t[0], t[1], a, i);
  });
  Rng rng(p.seed);
  for (std::size_t s = 0; s < kPairSamples * p.samples; ++s)
    check(rng.pick(trees), rng.pick(trees), rng.pick(as), rng.below(p.components()));
}

void suite_identification(Recorder& rec, const EnumParams& p) {
  TreeEnvelope env{TreeAlgebra(p.components())};
  const auto ks = enumerate_decs(p.components(), 1);
  const auto bs = enumerate_decs(p.components(), p.max_dec);

  auto sigma_of = [&](const DecVec& k, std::vector<Planted> forest) {
    TreeEnvBasis s = env.unit_basis();
    for (std::size_t i = 0; i < k.size(); ++i) s.xexp[i] = static_cast<unsigned>(k[i]);
    std::sort(forest.begin(), forest.end());
    s.forest = std::move(forest);
    return s;
  };
  auto check = [&](const TreeEnvBasis& sigma, const DecoratedTree& tau, const DecVec& b) {
    IdentificationReport r;
    std::string error;
    try {
      r = verify_identification(env, sigma, tau, b);
    } catch (const std::logic_error& e) {
      error = e.what();
    }
    rec.check(error.empty() && r.ok(), [&] {
      return SuiteFailure{show({format(sigma), format(tau), b.to_string()}),
                          error.empty() ? format(r.via_star2 - r.via_triangle) : error};
    });
    rec.count("forest-" + std::to_string(sigma.forest.size()));
  };

  const std::size_t small = p.max_total_edges > 0 ? p.max_total_edges - 1 : 0;
  const auto factors = enumerate_planted(with_edges(p, small));
  const auto taus = enumerate_trees(with_edges(p, small));
  std::vector<std::vector<Planted>> forests{{}};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    forests.push_back({factors[i]});
    for (std::size_t j = i; j < factors.size(); ++j) forests.push_back({factors[i], factors[j]});
  }
  for (const auto& f : forests)
    for (const auto& k : ks) {
      TreeEnvBasis sigma = sigma_of(k, f);
      for (const auto& tau : taus)
        for (const auto& b : bs) check(sigma, tau, b);
    }

  const auto big_factors = enumerate_planted(with_edges(p, p.max_total_edges));
  const auto big_taus = enumerate_trees(with_edges(p, p.max_total_edges));
  Rng rng(p.seed);
  for (std::size_t s = 0; s < p.samples; ++s) {
    std::vector<Planted> f;
    for (std::size_t n = rng.below(3); n > 0; --n) f.push_back(rng.pick(big_factors));
    const auto& k = rng.pick(ks);
    const auto& tau = rng.pick(big_taus);
    check(sigma_of(k, f), tau, rng.pick(bs));
  }
}

void suite_planar_equiv(Recorder& rec, const EnumParams& p) {
  const std::size_t n = p.components();
  std::vector<PlanarV> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(PlanarV(XLetter{i}));
  for (const auto& t : enumerate_planar_trees(p))
    for (const auto& a : enumerate_decs(n, p.max_dec)) gens.push_back(PlanarV(PlanarPlanted{a, t}));
  auto cost = [](const PlanarV& v) -> std::size_t {
    if (const auto* q = std::get_if<PlanarPlanted>(&v)) return q->tree.edge_count() + 1;
    return 0;
  };
  auto check = [&](const PlanarV& s, const PlanarV& t) {
    auto r = check_left_equiv(s, t, n);
    rec.check(r.ok(), [&] { return SuiteFailure{show({format(s), format(t)}), format(r.planar_route - r.direct_route)}; });
  };
  sweep(bucket(gens, cost), 2, p.max_total_edges + 2, [&](const std::vector<PlanarV>& v) { check(v[0], v[1]); });
  Rng rng(p.seed);
  for (std::size_t s = 0; s < p.samples; ++s) check(rng.pick(gens), rng.pick(gens));

  for (const auto& t : enumerate_trees(p)) {
    TreeComb back = planar_normalize(to_planar(t), n);
    rec.check(back == TreeComb(t), [&] { return SuiteFailure{format(t), format(back)}; });
    rec.count("planar-section");
  }

  for (const auto& t : enumerate_planar_trees(with_edges(p, p.max_edges + 2))) {
    auto results = planar_normalize_all_orders(t, n);
    rec.check(results.size() == 1, [&] {
      std::string detail;
      for (const auto& r : results) detail += "{" + format(r) + "} ";
      return SuiteFailure{format(t), detail};
    });
    rec.count("confluence");
  }
}

}  // namespace postlie::detail
