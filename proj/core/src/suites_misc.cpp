#include <string>

#include "postlie/enumerate.hpp"
#include "postlie/grafting.hpp"
#include "postlie/planar.hpp"
#include "postlie/syntax.hpp"
#include "postlie/tree_postlie.hpp"
#include "suite_support.hpp"

namespace postlie::detail {

namespace {

using T = DecoratedTree;

T node(DecVec dec, unsigned noise = 0, std::vector<TreeBranch> branches = {}) {
  return T::node(dec, noise, std::move(branches));
}

PlanarSlot K(const DecVec& a, PlanarTree t) { return PlanarSlot::kernel(a, std::move(t)); }
PlanarTree P(unsigned noise, std::vector<PlanarSlot> slots) { return PlanarTree{noise, std::move(slots)}; }

template <class C>
void expect_equal(Recorder& rec, const std::string& figure, const C& got, const C& want) {
  rec.check(got == want, [&] { return SuiteFailure{figure, "got " + format(got) + " want " + format(want)}; });
}

void expect_text(Recorder& rec, const std::string& figure, const std::string& got, const std::string& want) {
  rec.check(got == want, [&] { return SuiteFailure{figure, "got " + got + " want " + want}; });
}

void golden_plain(Recorder& rec) {
  const DecVec z{0};
  T leaf = node(z);
  T cherry = node(z, 0, {{z, leaf}, {z, leaf}});
  T star = node(z, 0, {{z, leaf}, {z, leaf}, {z, leaf}});
  T chain = node(z, 0, {{z, leaf}, {z, node(z, 0, {{z, leaf}})}});
  expect_equal(rec, "graft onto cherry", graft(leaf, z, cherry), TreeComb{{star, 1}, {chain, 2}});

  PlanarTree dot;
  PlanarTree tau = P(0, {K(z, P(0, {K(z, dot)})), K(z, dot)});
  PlanarComb want{
      {P(0, {K(z, dot), K(z, P(0, {K(z, dot)})), K(z, dot)}), 1},
      {P(0, {K(z, P(0, {K(z, dot), K(z, dot)})), K(z, dot)}), 1},
      {P(0, {K(z, P(0, {K(z, P(0, {K(z, dot)}))})), K(z, dot)}), 1},
      {P(0, {K(z, P(0, {K(z, dot)})), K(z, P(0, {K(z, dot)}))}), 1},
  };
  expect_equal(rec, "left graft", left_graft_tree(PlanarV(PlanarPlanted{z, dot}), tau), want);

  PlanarTree mirrored = P(0, {K(z, dot), K(z, P(0, {K(z, dot)}))});
  rec.check(!(tau == mirrored), [] { return SuiteFailure{"planar mirror", "planar trees coincide"}; });
  expect_equal(rec, "planar mirror quotient", planar_normalize(tau, 1), planar_normalize(mirrored, 1));
}

void golden_decorated(Recorder& rec) {
  const DecVec alpha{1, 0}, a{0, 1}, beta{0, 1}, b{1, 0}, gamma{1, 1};
  const std::size_t d = 2;

  T tau = node(alpha, 1, {{a, node(beta)}});
  expect_equal(rec, "symbolic notation", TreeComb(parse_tree("X^(1,0) Xi I[(0,1)](X^(0,1))", d)), TreeComb(tau));
  expect_equal(rec, "planted notation", TreeComb(parse_tree("I[(1,0)](X^(1,0) Xi I[(0,1)](X^(0,1)))", d)),
               TreeComb(planted(b, tau)));

  T target = node(gamma, 1, {{b, node(beta)}});
  expect_equal(rec, "graft avoids noise", graft(node(alpha), a, target),
               TreeComb{{node(gamma, 1, {{b, node(beta)}, {a, node(alpha)}}), 1},
                        {node(gamma, 1, {{b, node(beta, 0, {{a, node(alpha)}})}}), 1}});

  for (std::size_t i = 0; i < d; ++i) {
    DecVec e = DecVec::unit(d, i);
    expect_equal(rec, "raise " + std::to_string(i), up(i, target),
                 TreeComb{{node(gamma + e, 1, {{b, node(beta)}}), 1}, {node(gamma, 1, {{b, node(beta + e)}}), 1}});
  }

  T sigma = planted(a, node(alpha));
  T root_free = planted(b, node(beta, 1));
  expect_equal(rec, "planted graft", planted_pre_lie(sigma, root_free, false),
               TreeComb(planted(b, node(beta, 1, {{a, node(alpha)}}))));

  // Deformed: target decoration (2,1), edge (1,1); sum over l <= (1,1).
  const DecVec wide{1, 1}, deep{2, 1};
  T s2 = planted(wide, node(alpha));
  T t2 = planted(b, node(deep, 1));
  auto term = [&](DecVec dec, DecVec edge) { return planted(b, node(dec, 1, {{edge, node(alpha)}})); };
  expect_equal(rec, "deformed planted graft", planted_pre_lie(s2, t2, true),
               TreeComb{{term({2, 1}, {1, 1}), 1},
                        {term({1, 1}, {0, 1}), 2},
                        {term({2, 0}, {1, 0}), 1},
                        {term({1, 0}, {0, 0}), 2}});
  expect_equal(rec, "undeformed part", planted_pre_lie(s2, t2, false), TreeComb(term({2, 1}, {1, 1})));
}

void golden_planar_quotient(Recorder& rec) {
  const std::size_t d = 2;
  const DecVec a{1, 1};
  T xi = node(DecVec(d), 1);
  PlanarTree pxi = P(1, {});
  for (std::size_t i = 0; i < d; ++i) {
    DecVec e = DecVec::unit(d, i);
    std::string tag = " i=" + std::to_string(i);
    PlanarTree target = P(1, {PlanarSlot::x(i)});
    PlanarComb left = left_graft_tree(PlanarV(PlanarPlanted{a, pxi}), target);
    expect_equal(rec, "left-most graft" + tag, left, PlanarComb(P(1, {K(a, pxi), PlanarSlot::x(i)})));

    TreeComb want{{node(e, 1, {{a, xi}}), 1}, {node(DecVec(d), 1, {{*a.minus(e), xi}}), 1}};
    expect_equal(rec, "quotient of left-most graft" + tag, planar_normalize(left, d), want);
    expect_equal(rec, "direct deformed graft" + tag, deformed_graft(xi, a, node(e, 1)), want);

    PlanarTree x_first = P(1, {PlanarSlot::x(i), K(a, pxi)});
    rec.check(!(x_first == P(1, {K(a, pxi), PlanarSlot::x(i)})),
              [&] { return SuiteFailure{"planar order" + tag, "planar trees coincide"}; });
    expect_equal(rec, "X edge merged into root" + tag, planar_normalize(x_first, d), TreeComb(node(e, 1, {{a, xi}})));
  }
}

void golden_identification_chain(Recorder& rec) {
  const std::size_t d = 2;
  TreeEnvelope env{TreeAlgebra(d)};
  const DecVec a{1, 1}, b{0, 1};
  const std::size_t i = 0;
  const DecVec lower = *a.minus(DecVec::unit(d, i));
  T hat = node(DecVec{0, 1});
  T tau = node(DecVec{1, 0}, 1);
  VBasis Ia(Planted{a, hat}), Ilow(Planted{lower, hat}), Ib(Planted{b, tau}), Xi(XLetter{i});

  auto as_env = [&](const VComb& v) { return env.element(v); };
  TreeEnvBasis sigma = env.normal_form({Xi, Ia}).begin()->first;
  TreeEnvElement line1;
  for (const auto& [t, c] : star2(env, sigma, tau, b)) line1.add(env.basis_of(VBasis(Planted{b, t})), c);

  VComb raised;
  for (const auto& [t, c] : up(i, tau)) raised.add(VBasis(Planted{b, t}), c);
  TreeEnvElement line2 = as_env(env.post(VComb(Ia), raised) - env.post(Ilow, Ib));
  TreeEnvElement line3 = as_env(env.post(VComb(Ia), env.post(Xi, Ib)) - env.post(Ilow, Ib));
  TreeEnvElement ib = env.element(Ib);
  TreeEnvElement line4 = env.triangle(env.normal_form({Ia, Xi}), ib) -
                         env.triangle(env.element(env.post(Ia, Xi)), ib) - as_env(env.post(Ilow, Ib));
  TreeEnvElement line5 = env.triangle(env.normal_form({Ia, Xi}), ib) - as_env(env.post(Ilow, Ib));
  TreeEnvElement line6 = env.triangle(TreeEnvElement(sigma), ib);
  const TreeEnvElement* lines[] = {&line2, &line3, &line4, &line5, &line6};
  for (std::size_t k = 0; k < 5; ++k) expect_equal(rec, "identification chain line " + std::to_string(k + 2), *lines[k], line1);
}

void golden_cli(Recorder& rec) {
  const std::size_t d = 2;
  VComb x = parse_v_comb("X_0", d), y = parse_v_comb("I[(1,0)](Xi)", d);
  VComb prod = bilinear(x, y, [](const VBasis& u, const VBasis& v) { return post_product(u, v); });
  expect_text(rec, "post example", format(prod), "I[(1,0)](X^(1,0) Xi)");
  VComb br = bilinear(y, x, [](const VBasis& u, const VBasis& v) { return bracket0_trees(u, v); });
  expect_text(rec, "bracket example", format(br), "I[(0,0)](Xi)");
  TreeEnvelope env{TreeAlgebra(d)};
  auto operand = parse_tree_env("I[(0,0)](Xi)", env);
  expect_equal(rec, "unit of star", env.star(parse_tree_env("1", env), operand), operand);
}

Coefficient random_coef(Rng& rng) {
  long n = static_cast<long>(rng.below(9)) - 4;
  if (n == 0) n = 5;
  return Coefficient(n) / Coefficient(static_cast<long>(rng.below(4) + 1));
}

}  // namespace

void suite_golden_figures(Recorder& rec, const EnumParams&) {
  golden_plain(rec);
  golden_decorated(rec);
  golden_planar_quotient(rec);
  golden_identification_chain(rec);
  golden_cli(rec);
}

void suite_round_trip(Recorder& rec, const EnumParams& p) {
  const std::size_t d = p.components();
  const auto trees = enumerate_trees(p);
  const auto planted = enumerate_planted(p);
  const auto mi = enumerate_mi_generators(p);
  const auto planar = enumerate_planar_trees(p);
  EnumParams q = p;
  q.max_edges = 2;
  const auto t0 = enumerate_t0_trees(q, 2);
  TreeEnvelope tenv{TreeAlgebra(d)};
  MIEnvelope menv{MIAlgebra(d)};
  Rng rng(p.seed);

  auto vgen = [&]() -> VBasis {
    if (rng.below(4) == 0) return VBasis(XLetter{rng.below(d)});
    return VBasis(rng.pick(planted));
  };
  auto trip = [&](const std::string& kind, const auto& x, auto&& parse) {
    std::string text = format(x);
    bool ok = false;
    std::string detail;
    try {
      ok = parse(text) == x;
      if (!ok) detail = "reparsed differently";
    } catch (const std::exception& e) {
      detail = e.what();
    }
    rec.check(ok, [&] { return SuiteFailure{kind + ": " + text, detail}; });
    rec.count(kind);
  };

  for (std::size_t s = 0; s < 1000; ++s) {
    std::size_t terms = rng.below(3) + 1;
    switch (s % 6) {
      case 0: {
        TreeComb x;
        for (std::size_t k = 0; k < terms; ++k) x.add(rng.pick(trees), random_coef(rng));
        trip("tree", x, [&](const std::string& t) { return parse_tree_comb(t, d); });
        break;
      }
      case 1: {
        VComb x;
        for (std::size_t k = 0; k < terms; ++k) x.add(vgen(), random_coef(rng));
        trip("generator", x, [&](const std::string& t) { return parse_v_comb(t, d); });
        break;
      }
      case 2: {
        TreeEnvElement x;
        for (std::size_t k = 0; k < terms; ++k) {
          TreeEnvelope::Word w;
          for (std::size_t n = rng.below(3); n > 0; --n) w.push_back(vgen());
          x.add(tenv.normal_form(w), random_coef(rng));
        }
        trip("tree-envelope", x, [&](const std::string& t) { return parse_tree_env(t, tenv); });
        break;
      }
      case 3: {
        MIEnvElement x;
        for (std::size_t k = 0; k < terms; ++k) {
          MIEnvelope::Word w;
          for (std::size_t n = rng.below(3); n > 0; --n) w.push_back(rng.pick(mi));
          x.add(menv.normal_form(w), random_coef(rng));
        }
        trip("mi-envelope", x, [&](const std::string& t) { return parse_mi_env(t, menv); });
        break;
      }
      case 4: {
        V0Comb x;
        for (std::size_t k = 0; k < terms; ++k) {
          if (rng.below(4) == 0) {
            x.add(V0Basis(XLetter{rng.below(d)}), random_coef(rng));
          } else {
            x.add(V0Basis(T0Planted{rng.pick(planted).a, rng.pick(t0)}), random_coef(rng));
          }
        }
        trip("t0", x, [&](const std::string& t) { return parse_v0_comb(t, d); });
        break;
      }
      default: {
        const auto& t = rng.pick(planar);
        rec.check(parse_planar(format(t), d) == t, [&] { return SuiteFailure{"planar: " + format(t), "reparsed differently"}; });
        rec.count("planar");
        MIComb x;
        for (std::size_t k = 0; k < terms; ++k) x.add(rng.pick(mi), random_coef(rng));
        trip("multi-index", x, [&](const std::string& t) { return parse_mi_comb(t, d); });
      }
    }
  }
}

void suite_determinism(Recorder& rec, const EnumParams& p) {
  auto strictly_sorted = [](const auto& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (!(v[i - 1] < v[i])) return false;
    return true;
  };
  auto same = [&](const std::string& what, const auto& x, const auto& y) {
    rec.check(x == y && strictly_sorted(x), [&] { return SuiteFailure{what, "enumeration differs or repeats"}; });
  };
  same("trees", enumerate_trees(p), enumerate_trees(p));
  same("planted", enumerate_planted(p), enumerate_planted(p));
  same("t0", enumerate_t0_trees(p, 2), enumerate_t0_trees(p, 2));
  same("planar", enumerate_planar_trees(p), enumerate_planar_trees(p));
  same("monomials", enumerate_monomials(p.components(), p.max_arity, 2, 4),
       enumerate_monomials(p.components(), p.max_arity, 2, 4));
  same("mi", enumerate_mi_generators(p), enumerate_mi_generators(p));

  EnumParams hand;
  hand.dim = 0;
  hand.max_edges = 1;
  hand.max_dec = 0;
  hand.max_noise = 1;
  auto small = enumerate_trees(hand);
  rec.check(small.size() == 3, [&] { return SuiteFailure{"hand count", std::to_string(small.size()) + " trees"}; });

  EnumParams q = p;
  q.max_edges = 1;
  q.samples = 20;
  auto r1 = run_suite("prop-non-com", q);
  auto r2 = run_suite("prop-non-com", q);
  rec.check(r1.cases == r2.cases && r1.failed == r2.failed && r1.counters == r2.counters,
            [&] { return SuiteFailure{"repeated suite", "reports differ"}; });
}

}  // namespace postlie::detail
