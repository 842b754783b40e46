#include <set>
#include <string>

#include "postlie/enumerate.hpp"
#include "postlie/grafting.hpp"
#include "postlie/morphism.hpp"
#include "postlie/multiindex.hpp"
#include "postlie/syntax.hpp"
#include "postlie/tree_postlie.hpp"
#include "suite_support.hpp"

namespace postlie::detail {

namespace {

std::string join(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += " | ";
    s += p;
  }
  return s;
}

std::vector<MIGenerator> bare_derivations(std::size_t components, int max_label) {
  std::vector<MIGenerator> out;
  for (std::size_t i = 0; i < components; ++i) out.push_back(MIGenerator(XLetter{i}));
  for (const auto& n : enumerate_decs(components, max_label)) out.push_back(MIGenerator(Deriv{MIMonomial(), n}));
  return out;
}

MIGenerator D(const DecVec& n) { return MIGenerator(Deriv{MIMonomial(), n}); }

}  // namespace

void suite_matrix_vs_action(Recorder& rec, const EnumParams& p) {
  const std::size_t comp = p.components();
  const int max_label = 2;
  const auto monomials = enumerate_monomials(comp, p.max_arity, max_label, 4);
  const auto gens = bare_derivations(comp, max_label);

  std::vector<MIMonomial> pool;
  for (unsigned k = 0; k <= p.max_arity + 1; ++k) pool.push_back(MIMonomial::arity(k));
  for (const auto& n : enumerate_decs(comp, max_label + 1))
    if (!n.is_zero()) pool.push_back(MIMonomial::label(n));
  std::vector<MIMonomial> additions{MIMonomial()};
  for (std::size_t i = 0; i < pool.size(); ++i) {
    additions.push_back(pool[i]);
    for (std::size_t j = i; j < pool.size(); ++j) additions.push_back(pool[i] * pool[j]);
  }

  for (const auto& gamma : monomials) {
    std::vector<MIMonomial> reduced{gamma};
    for (const auto& [k, e] : gamma.arities()) reduced.push_back(*gamma.shift_arity(k, -1));
    for (const auto& [n, e] : gamma.labels()) reduced.push_back(*gamma.shift_label(n, -1));
    std::set<MIMonomial> betas;
    for (const auto& r : reduced)
      for (const auto& a : additions) betas.insert(r * a);
    for (const auto& g : gens) {
      MIPolynomial action = derivation_action(g, gamma, comp);
      MIPolynomial matrix;
      for (const auto& beta : betas) matrix.add(beta, Coefficient(matrix_coeff(g, gamma, beta, comp)));
      rec.check(action == matrix, [&] {
        return SuiteFailure{join({format(g), format(gamma)}), format(action - matrix)};
      });
    }
  }
}

void suite_operator_commutation(Recorder& rec, const EnumParams& p) {
  const std::size_t comp = p.components();
  const int max_label = 2;
  const auto monomials = enumerate_monomials(comp, p.max_arity, max_label, 4);
  const auto ns = enumerate_decs(comp, max_label);
  for (const auto& m : monomials) {
    for (std::size_t a = 0; a < ns.size(); ++a)
      for (std::size_t b = a + 1; b < ns.size(); ++b) {
        auto lhs = apply_sequence({D(ns[a]), D(ns[b])}, m, comp);
        auto rhs = apply_sequence({D(ns[b]), D(ns[a])}, m, comp);
        rec.check(lhs == rhs, [&] {
          return SuiteFailure{join({"D" + ns[a].to_string(), "D" + ns[b].to_string(), format(m)}), format(lhs - rhs)};
        });
        rec.count("D-D");
      }
    for (std::size_t i = 0; i < comp; ++i)
      for (std::size_t j = i + 1; j < comp; ++j) {
        auto lhs = apply_sequence({MIGenerator(XLetter{i}), MIGenerator(XLetter{j})}, m, comp);
        auto rhs = apply_sequence({MIGenerator(XLetter{j}), MIGenerator(XLetter{i})}, m, comp);
        rec.check(lhs == rhs, [&] { return SuiteFailure{join({std::to_string(i), std::to_string(j), format(m)}), format(lhs - rhs)}; });
        rec.count("d-d");
      }
    // Matrix order: the left factor acts first.
    for (std::size_t i = 0; i < comp; ++i)
      for (const auto& n : ns) {
        MIGenerator di(XLetter{i});
        auto lhs = apply_sequence({di, D(n)}, m, comp);
        auto rhs = apply_sequence({D(n), di}, m, comp);
        if (auto lower = n.minus(DecVec::unit(comp, i)))
          rhs.add(derivation_action(D(*lower), m, comp), Coefficient(n[i]));
        rec.check(lhs == rhs, [&] {
          return SuiteFailure{join({"d_" + std::to_string(i), "D" + n.to_string(), format(m)}), format(lhs - rhs)};
        });
        rec.count("d-D");
      }
  }
}

void suite_psi_morphism(Recorder& rec, const EnumParams& p) {
  const std::size_t comp = p.components();
  T0Envelope tenv{T0Algebra(comp)};
  MIEnvelope menv{MIAlgebra(comp)};
  const auto decs = enumerate_decs(comp, p.max_dec);

  auto generators = [&](std::size_t max_edges) {
    EnumParams q = p;
    q.max_edges = max_edges;
    std::vector<V0Basis> out;
    for (std::size_t i = 0; i < comp; ++i) out.push_back(V0Basis(XLetter{i}));
    for (const auto& t : enumerate_t0_trees(q, 2))
      for (const auto& a : decs) out.push_back(V0Basis(T0Planted{a, t}));
    return out;
  };
  const std::size_t small = p.max_total_edges > 0 ? p.max_total_edges - 1 : 0;
  const auto gens = generators(small);
  const auto big = generators(p.max_total_edges);

  auto image = [&](const V0Comb& x) { return psi_hat(x); };
  auto check_pair = [&](const V0Basis& x, const V0Basis& y) {
    MIComb px = psi_hat(x), py = psi_hat(y);
    MIComb post_l = image(tenv.post(x, y)), post_r = menv.post(px, py);
    rec.check(post_l == post_r, [&] { return SuiteFailure{join({"post", format(x), format(y)}), format(post_l - post_r)}; });
    MIComb br_l = image(tenv.bracket0(x, y)), br_r = menv.bracket0(px, py);
    rec.check(br_l == br_r, [&] { return SuiteFailure{join({"bracket", format(x), format(y)}), format(br_l - br_r)}; });
    MIComb db_l = image(tenv.derived_bracket(x, y)), db_r = menv.derived_bracket(px, py);
    rec.check(db_l == db_r, [&] { return SuiteFailure{join({"derived", format(x), format(y)}), format(db_l - db_r)}; });
  };
  for (const auto& x : gens)
    for (const auto& y : gens) check_pair(x, y);
  Rng rng(p.seed);
  for (std::size_t s = 0; s < p.samples; ++s) check_pair(rng.pick(big), rng.pick(big));

  // The two displayed identities, each link of the chain separately.
  for (const auto& g : big) {
    const auto* q = std::get_if<T0Planted>(&g);
    if (!q) continue;
    for (std::size_t i = 0; i < comp; ++i) {
      MIGenerator di(XLetter{i});
      MIComb via_post = image(tenv.post(V0Basis(XLetter{i}), g));
      V0Comb raised;
      for (const auto& [t, c] : up_T0(i, q->tree)) raised.add(V0Basis(T0Planted{q->a, t}), c);
      MIComb via_up = image(raised);
      MIComb via_mi = menv.post(MIComb(di), psi_hat(g));
      rec.check(via_post == via_up && via_up == via_mi, [&] {
        return SuiteFailure{join({"post display", format(g), std::to_string(i)}), format(via_post - via_mi)};
      });

      MIComb br_tree = image(tenv.bracket0(g, V0Basis(XLetter{i})));
      MIComb lowered, closed;
      if (auto a = q->a.minus(DecVec::unit(comp, i))) {
        lowered = psi_hat(V0Basis(T0Planted{*a, q->tree}));
        Coefficient inv = Coefficient(1) / Coefficient(factorial(*a));
        for (const auto& [m, c] : psi(q->tree)) closed.add(MIGenerator(Deriv{m, *a}), c * inv);
      }
      MIComb br_mi = menv.bracket0(psi_hat(g), MIComb(di));
      rec.check(br_tree == lowered && lowered == closed && closed == br_mi, [&] {
        return SuiteFailure{join({"bracket display", format(g), std::to_string(i)}), format(br_tree - br_mi)};
      });
      rec.count("remark-identities");
    }
  }

  // Raising a decoration: X_i as a new factor or e_i added to one factor.
  EnumParams single = p;
  single.max_edges = 0;
  single.max_dec = p.max_dec + 1;
  for (const auto& t : enumerate_t0_trees(single, 3)) {
    for (std::size_t i = 0; i < comp; ++i) {
      T0Comb expect;
      auto ms = t.monomials();
      auto with_factor = ms;
      with_factor.push_back(DecVec::unit(comp, i));
      std::sort(with_factor.begin(), with_factor.end());
      expect.add(T0Tree::node(comp, with_factor), 1);
      for (std::size_t j = 0; j < ms.size(); ++j) {
        auto bumped = ms;
        bumped[j] = bumped[j] + DecVec::unit(comp, i);
        std::sort(bumped.begin(), bumped.end());
        expect.add(T0Tree::node(comp, bumped), 1);
      }
      T0Comb got = up_T0(i, t);
      rec.check(got == expect, [&] { return SuiteFailure{join({"raise", format(t), std::to_string(i)}), format(got - expect)}; });
    }
  }

  // Hopf level on words of length <= 2 over ten generators.
  std::vector<V0Basis> ten(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(comp));
  for (std::size_t j = 0; ten.size() < 10 && j < gens.size() - comp; ++j)
    ten.push_back(gens[comp + j * (gens.size() - comp) / (10 - comp)]);
  std::vector<T0Envelope::Element> words{tenv.unit()};
  for (std::size_t i = 0; i < ten.size(); ++i) {
    words.push_back(tenv.normal_form({ten[i]}));
    for (std::size_t j = i; j < ten.size(); ++j) words.push_back(tenv.normal_form({ten[i], ten[j]}));
  }
  for (const auto& x : words) {
    MIEnvElement px = psi_hat_env(tenv, menv, x);
    for (const auto& y : words) {
      MIEnvElement lhs = psi_hat_env(tenv, menv, tenv.star(x, y));
      MIEnvElement rhs = menv.star(px, psi_hat_env(tenv, menv, y));
      rec.check(lhs == rhs, [&] { return SuiteFailure{"hopf word pair", format(lhs - rhs)}; });
      rec.count("hopf");
    }
  }
}

}  // namespace postlie::detail
