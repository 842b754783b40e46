#include <string>
#include <tuple>

#include "postlie/enumerate.hpp"
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

/// `count` elements spread evenly over v, keeping the order.
template <class T>
std::vector<T> spread(const std::vector<T>& v, std::size_t count) {
  if (v.size() <= count) return v;
  std::vector<T> out;
  for (std::size_t j = 0; j < count; ++j) out.push_back(v[j * v.size() / count]);
  return out;
}

std::vector<VBasis> tree_generators(const EnumParams& p, std::size_t max_edges) {
  std::vector<VBasis> out;
  for (std::size_t i = 0; i < p.components(); ++i) out.push_back(VBasis(XLetter{i}));
  EnumParams q = p;
  q.max_edges = max_edges;
  for (const auto& g : enumerate_planted(q)) out.push_back(VBasis(g));
  return out;
}

std::size_t tree_cost(const VBasis& v) {
  if (const auto* q = std::get_if<Planted>(&v)) return q->tree.edge_count() + 1;
  return 0;
}

std::size_t mi_cost(const MIGenerator& g) {
  if (const auto* d = std::get_if<Deriv>(&g)) return d->gamma.degree();
  return 0;
}

template <class Env>
std::string show_gen(const Env& env, const typename Env::Gen& g) {
  return format(env.basis_of(g));
}

template <class Env>
void post_lie_triples(Recorder& rec, const Env& env, const std::vector<typename Env::Gen>& gens,
                      std::size_t (*cost)(const typename Env::Gen&), std::size_t budget, const EnumParams& p,
                      bool count_cases) {
  using Gen = typename Env::Gen;
  auto check = [&](const Gen& x, const Gen& y, const Gen& z) {
    auto r = env.check_post_lie(x, y, z);
    rec.check(r.ok(), [&] {
      std::string detail = r.ident1() ? "" : "ident1 " + format(env.element(r.ident1_lhs - r.ident1_rhs));
      if (!r.ident2()) detail += " ident2 " + format(env.element(r.ident2_lhs - r.ident2_rhs));
      return SuiteFailure{join({show_gen(env, x), show_gen(env, y), show_gen(env, z)}), detail};
    });
    if constexpr (std::is_same_v<Gen, MIGenerator>) {
      if (count_cases) rec.count("case-" + std::to_string(mi_case(x, y, z)));
    }
  };
  sweep(bucket(gens, cost), 3, budget, [&](const std::vector<Gen>& t) { check(t[0], t[1], t[2]); });
  Rng rng(p.seed);
  for (std::size_t s = 0; s < p.samples; ++s) check(rng.pick(gens), rng.pick(gens), rng.pick(gens));
}

template <class Env>
using Triple = std::tuple<typename Env::Basis, typename Env::Basis, typename Env::Basis>;

/// Hopf-algebra checks on an envelope: `gens` (at least ten) generate the
/// words, `pair_gens` feed the commutator check.
template <class Env>
void hopf_checks(Recorder& rec, const Env& env, const std::vector<typename Env::Gen>& gens,
                 const std::vector<typename Env::Gen>& pair_gens, std::size_t budget, const EnumParams& p) {
  using Gen = typename Env::Gen;
  using Element = typename Env::Element;
  using Basis = typename Env::Basis;

  // Normalized words of length <= 3, bucketed by length.
  std::vector<std::vector<Element>> words(4);
  std::vector<std::vector<Basis>> bases(4);
  words[0].push_back(env.unit());
  bases[0].push_back(env.unit_basis());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    words[1].push_back(env.normal_form({gens[i]}));
    for (std::size_t j = i; j < gens.size(); ++j) {
      words[2].push_back(env.normal_form({gens[i], gens[j]}));
      for (std::size_t k = j; k < gens.size(); ++k) words[3].push_back(env.normal_form({gens[i], gens[j], gens[k]}));
    }
  }
  for (std::size_t l = 1; l < 4; ++l)
    for (const auto& w : words[l])
      for (const auto& [b, c] : w)
        if (b.length() == l) bases[l].push_back(b);
  for (auto& b : bases) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  std::vector<std::vector<Element>> short_words(words.begin(), words.begin() + 3);

  for (const auto& w : short_words[1]) {
    bool ok = env.star(env.unit(), w) == w && env.star(w, env.unit()) == w;
    rec.check(ok, [&] { return SuiteFailure{"unit | " + format(w), "unit law"}; });
  }

  sweep(short_words, 3, budget, [&](const std::vector<Element>& t) {
    Element lhs = env.star(env.star(t[0], t[1]), t[2]);
    Element rhs = env.star(t[0], env.star(t[1], t[2]));
    rec.check(lhs == rhs, [&] {
      return SuiteFailure{join({format(t[0]), format(t[1]), format(t[2])}), format(lhs - rhs)};
    });
    rec.count("associativity");
  });
  std::vector<Element> flat;
  for (const auto& b : short_words)
    for (const auto& w : b) flat.push_back(w);
  Rng rng(p.seed);
  for (std::size_t s = 0; s < p.samples; ++s) {
    const auto &x = rng.pick(short_words[2]), &y = rng.pick(short_words[2]), &z = rng.pick(short_words[2]);
    Element lhs = env.star(env.star(x, y), z);
    Element rhs = env.star(x, env.star(y, z));
    rec.check(lhs == rhs, [&] { return SuiteFailure{join({format(x), format(y), format(z)}), format(lhs - rhs)}; });
    rec.count("associativity");
  }

  for (const auto& level : bases)
    for (const auto& b : level) {
      auto delta = env.coproduct(b);
      LinComb<Triple<Env>> left, right;
      typename Env::Tensor swapped;
      for (const auto& [lr, c] : delta) {
        for (const auto& [ll, d] : env.coproduct(lr.first)) left.add({ll.first, ll.second, lr.second}, c * d);
        for (const auto& [rr, d] : env.coproduct(lr.second)) right.add({lr.first, rr.first, rr.second}, c * d);
        swapped.add({lr.second, lr.first}, c);
      }
      rec.check(left == right, [&] { return SuiteFailure{format(b), "coassociativity"}; });
      rec.check(swapped == delta, [&] { return SuiteFailure{format(b), "cocommutativity"}; });
      rec.count("coproduct");
    }

  for (const auto& x : flat)
    for (const auto& y : flat) {
      auto lhs = env.coproduct(env.star(x, y));
      auto rhs = env.star(env.coproduct(x), env.coproduct(y));
      rec.check(lhs == rhs, [&] { return SuiteFailure{join({format(x), format(y)}), "coproduct of product"}; });
      rec.count("bialgebra");
    }

  for (const auto& x : pair_gens)
    for (const auto& y : pair_gens) {
      Element ex = env.element(x), ey = env.element(y);
      Element lhs = env.star(ex, ey) - env.star(ey, ex);
      Element rhs = env.element(env.derived_bracket(x, y));
      rec.check(lhs == rhs, [&] {
        return SuiteFailure{join({show_gen(env, x), show_gen(env, y)}), format(lhs - rhs)};
      });
      rec.count("commutator");
    }

  for (const Gen& x : gens)
    for (const Gen& y : gens)
      for (const auto& a : flat) {
        Element lhs = env.induced_rep(env.derived_bracket(x, y), a);
        Element rhs = env.induced_rep(x, env.induced_rep(y, a)) - env.induced_rep(y, env.induced_rep(x, a));
        rec.check(lhs == rhs, [&] {
          return SuiteFailure{join({show_gen(env, x), show_gen(env, y), format(a)}), format(lhs - rhs)};
        });
        rec.count("representation");
      }
}

template <class Env>
void confluence_checks(Recorder& rec, const Env& env, const std::vector<typename Env::Gen>& gens, std::size_t max_len) {
  using Word = typename Env::Word;
  std::vector<Word> frontier{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        Word v = w;
        v.push_back(g);
        auto results = env.all_rewrite_results(v);
        bool ok = results.size() == 1 && results.front() == env.normal_form(v);
        rec.check(ok, [&] {
          std::string input;
          for (const auto& l : v) input += (input.empty() ? "" : " ; ") + show_gen(env, l);
          return SuiteFailure{input, std::to_string(results.size()) + " distinct results"};
        });
        next.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
}

}  // namespace

void suite_postlie_trees(Recorder& rec, const EnumParams& p) {
  TreeEnvelope env{TreeAlgebra(p.components())};
  const auto gens = tree_generators(p, p.max_edges);
  post_lie_triples(rec, env, gens, &tree_cost, p.max_total_edges + 1, p, false);

  sweep(bucket(gens, tree_cost), 2, p.max_total_edges + 2, [&](const std::vector<VBasis>& t) {
    auto b = bracket0_trees(t[0], t[1]);
    bool planted_only = b == env.bracket0(t[0], t[1]);
    for (const auto& [g, c] : b) planted_only = planted_only && std::holds_alternative<Planted>(g);
    rec.check(planted_only, [&] { return SuiteFailure{join({format(t[0]), format(t[1])}), format(b)}; });
    rec.count("bracket-image");
  });
}

void suite_postlie_mi(Recorder& rec, const EnumParams& p) {
  MIEnvelope env{MIAlgebra(p.components())};
  const auto gens = enumerate_mi_generators(p);
  post_lie_triples(rec, env, gens, &mi_cost, 3 * p.max_support, p, true);
  for (int c = 1; c <= 4; ++c) {
    std::string key = "case-" + std::to_string(c);
    rec.check(rec.report().counters[key] > 0, [&] { return SuiteFailure{key, "case never exercised"}; });
  }
}

void suite_hopf_trees(Recorder& rec, const EnumParams& p) {
  TreeEnvelope env{TreeAlgebra(p.components())};
  auto all = tree_generators(p, p.max_total_edges);
  std::vector<VBasis> planted(all.begin() + static_cast<std::ptrdiff_t>(p.components()), all.end());
  std::vector<VBasis> gens(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(p.components()));
  for (const auto& g : spread(planted, 10 - std::min<std::size_t>(p.components(), 2))) gens.push_back(g);
  hopf_checks(rec, env, gens, all, 5, p);
}

void suite_hopf_mi(Recorder& rec, const EnumParams& p) {
  MIEnvelope env{MIAlgebra(p.components())};
  auto all = enumerate_mi_generators(p);
  std::vector<MIGenerator> gens(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(p.components()));
  std::vector<MIGenerator> derivs(all.begin() + static_cast<std::ptrdiff_t>(p.components()), all.end());
  for (const auto& g : spread(derivs, 10 - std::min<std::size_t>(p.components(), 2))) gens.push_back(g);
  hopf_checks(rec, env, gens, all, 5, p);
}

void suite_brackets_equal(Recorder& rec, const EnumParams& p) {
  MIEnvelope env{MIAlgebra(p.components())};
  const auto gens = enumerate_mi_generators(p);
  for (const auto& x : gens)
    for (const auto& y : gens) {
      MIComb derived = env.derived_bracket(x, y);
      MIComb original = mi_bracket(x, y, p.components());
      rec.check(derived == original, [&] { return SuiteFailure{join({format(x), format(y)}), format(derived - original)}; });
      rec.count("multi-index");
    }

  TreeEnvelope tenv{TreeAlgebra(p.components())};
  for (const auto& g : enumerate_planted(p)) {
    VBasis v(g);
    for (std::size_t i = 0; i < p.components(); ++i) {
      VComb expect;
      if (auto lower = g.a.minus(DecVec::unit(g.a.size(), i))) expect.add(VBasis(Planted{*lower, g.tree}), 1);
      for (const auto& [t, c] : up(i, g.tree)) expect.add(VBasis(Planted{g.a, t}), -c);
      VComb got = tenv.derived_bracket(v, VBasis(XLetter{i}));
      rec.check(got == expect, [&] { return SuiteFailure{join({format(v), "X_" + std::to_string(i)}), format(got - expect)}; });
    }
    rec.check(tenv.derived_bracket(v, v).is_zero(), [&] { return SuiteFailure{format(v), "[[x,x]] != 0"}; });
    rec.count("trees");
  }
}

void suite_pbw_confluence(Recorder& rec, const EnumParams& p) {
  TreeEnvelope tenv{TreeAlgebra(p.components())};
  auto tgens = tree_generators(p, 1);
  std::vector<VBasis> tsmall(tgens.begin(), tgens.begin() + static_cast<std::ptrdiff_t>(p.components()));
  for (const auto& g : spread(std::vector<VBasis>(tgens.begin() + static_cast<std::ptrdiff_t>(p.components()), tgens.end()), 3))
    tsmall.push_back(g);
  confluence_checks(rec, tenv, tsmall, 4);

  MIEnvelope menv{MIAlgebra(p.components())};
  auto mgens = enumerate_mi_generators(p);
  std::vector<MIGenerator> msmall(mgens.begin(), mgens.begin() + static_cast<std::ptrdiff_t>(p.components()));
  for (const auto& g : spread(std::vector<MIGenerator>(mgens.begin() + static_cast<std::ptrdiff_t>(p.components()), mgens.end()), 3))
    msmall.push_back(g);
  confluence_checks(rec, menv, msmall, 4);
}

}  // namespace postlie::detail
