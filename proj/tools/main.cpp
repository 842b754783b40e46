#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "postlie/grafting.hpp"
#include "postlie/morphism.hpp"
#include "postlie/multiindex.hpp"
#include "postlie/planar.hpp"
#include "postlie/suites.hpp"
#include "postlie/syntax.hpp"
#include "postlie/tree_postlie.hpp"

namespace {

using namespace postlie;
using json = nlohmann::ordered_json;

struct Options {
  std::size_t dim = 1;
  std::string format = "text";
  std::string scaling;
  bool mi = false;
  bool planar = false;
  bool hat = false;
  bool verbatim = false;
  std::string lhs, rhs, edge;
  std::size_t index = 0;
  std::vector<std::string> suites;
  EnumParams params;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class B, class F>
void emit(const Options& o, const LinComb<B>& x, F&& fmt) {
  if (o.format == "json") {
    json terms = json::array();
    for (const auto& [c, e] : term_strings(x, fmt)) terms.push_back({{"coef", c}, {"elem", e}});
    std::cout << json{{"terms", terms}}.dump() << '\n';
  } else {
    std::cout << format_comb(x, fmt) << '\n';
  }
}

template <class B>
void emit(const Options& o, const LinComb<B>& x) {
  emit(o, x, [](const B& b) { return format(b); });
}

template <class Env>
void emit_tensor(const Options& o, const typename Env::Tensor& t) {
  emit(o, t, [](const auto& p) { return format(p.first) + " ⊗ " + format(p.second); });
}

DecVec edge_dec(const Options& o, std::size_t d) {
  return o.edge.empty() ? DecVec(d) : parse_decvec(o.edge, d);
}

int run_verify(const Options& o) {
  std::vector<std::string> names = o.suites;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = suite_names();
  bool ok = true;
  json reports = json::array();
  for (const auto& name : names) {
    SuiteReport r = run_suite(name, o.params);
    ok = ok && r.passed();
    if (o.format == "json") {
      json failures = json::array();
      for (const auto& f : r.failures) failures.push_back({{"input", f.input}, {"detail", f.detail}});
      reports.push_back({{"suite", r.name},
                         {"passed", r.passed()},
                         {"cases", r.cases},
                         {"failed", r.failed},
                         {"counters", r.counters},
                         {"failures", failures}});
    } else {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases << " failed=" << r.failed
                << " seconds=" << r.seconds;
      for (const auto& [k, v] : r.counters) std::cout << ' ' << k << '=' << v;
      std::cout << '\n';
      for (const auto& f : r.failures) std::cout << "  " << f.input << " : " << f.detail << '\n';
    }
  }
  if (o.format == "json") std::cout << reports.dump() << '\n';
  return ok ? 0 : 1;
}

int dispatch(const std::string& cmd, const Options& o) {
  const std::size_t d = o.dim + 1;
  if (cmd == "graft" || cmd == "dgraft") {
    TreeComb s = parse_tree_comb(o.lhs, d), t = parse_tree_comb(o.rhs, d);
    DecVec a = edge_dec(o, d);
    emit(o, cmd == "graft" ? graft(s, a, t) : deformed_graft(s, a, t));
  } else if (cmd == "up") {
    if (o.index >= d) throw DimensionError("index out of range");
    emit(o, up(o.index, parse_tree_comb(o.rhs, d)));
  } else if (cmd == "post" || cmd == "bracket") {
    if (o.mi) {
      MIComb x = parse_mi_comb(o.lhs, d), y = parse_mi_comb(o.rhs, d);
      emit(o, bilinear(x, y, [&](const MIGenerator& u, const MIGenerator& v) {
             return cmd == "post" ? mi_post(u, v, d) : mi_bracket0(u, v);
           }));
    } else {
      VComb x = parse_v_comb(o.lhs, d), y = parse_v_comb(o.rhs, d);
      emit(o, bilinear(x, y, [&](const VBasis& u, const VBasis& v) {
             return cmd == "post" ? post_product(u, v) : bracket0_trees(u, v);
           }));
    }
  } else if (cmd == "star" || cmd == "delta") {
    if (o.mi) {
      MIEnvelope env{MIAlgebra(d)};
      auto x = parse_mi_env(o.lhs, env);
      if (cmd == "star") {
        emit(o, env.star(x, parse_mi_env(o.rhs, env)));
      } else {
        emit_tensor<MIEnvelope>(o, env.coproduct(x));
      }
    } else {
      TreeEnvelope env{TreeAlgebra(d)};
      auto x = parse_tree_env(o.lhs, env);
      if (cmd == "star") {
        emit(o, env.star(x, parse_tree_env(o.rhs, env)));
      } else {
        emit_tensor<TreeEnvelope>(o, env.coproduct(x));
      }
    }
  } else if (cmd == "star2") {
    TreeEnvelope env{TreeAlgebra(d)};
    auto sigma = parse_tree_env(o.lhs, env);
    if (sigma.size() != 1 || sigma.begin()->second != 1)
      throw UsageError("star2 expects a single PBW word with coefficient 1");
    emit(o, star2(env, sigma.begin()->first, parse_tree(o.rhs, d), edge_dec(o, d)));
  } else if (cmd == "psi") {
    PsiBase base = o.verbatim ? PsiBase::Verbatim : PsiBase::Recursive;
    if (o.hat) {
      emit(o, psi_hat(parse_v0_comb(o.lhs, d), base));
    } else {
      emit(o, psi(parse_t0_tree(o.lhs, d), base));
    }
  } else if (cmd == "mi-act") {
    MIComb g = parse_mi_comb(o.lhs, d);
    MIPolynomial m = parse_mi_poly(o.rhs, d);
    MIPolynomial out;
    for (const auto& [gen, c] : g) out.add(derivation_action(gen, m, d), c);
    emit(o, out);
  } else if (cmd == "mi-bracket") {
    MIComb x = parse_mi_comb(o.lhs, d), y = parse_mi_comb(o.rhs, d);
    emit(o, bilinear(x, y, [&](const MIGenerator& u, const MIGenerator& v) { return mi_bracket(u, v, d); }));
  } else if (cmd == "normalize") {
    if (o.planar) {
      emit(o, planar_normalize(parse_planar(o.lhs, d), d));
    } else {
      emit(o, parse_tree_comb(o.lhs, d));
    }
  } else if (cmd == "verify") {
    return run_verify(o);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Post-Lie grafting calculus on decorated trees and multi-indices"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--dim", o.dim, "Spatial dimension d; decorations have d+1 components")
      ->check(CLI::Range(std::size_t{0}, DecVec::kMaxComponents - 1));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--scaling", o.scaling, "Scaling weights, e.g. (2,1); parabolic by default");

  auto binary = [&](const std::string& name, const std::string& help, const std::string& l, const std::string& r) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("lhs", o.lhs, l)->required();
    c->add_option("rhs", o.rhs, r)->required();
    return c;
  };
  for (const auto* name : {"graft", "dgraft"}) {
    auto* c = binary(name, std::string(name == std::string("graft") ? "Grafting" : "Deformed grafting") +
                               " of sigma onto every vertex of tau",
                     "sigma", "tau");
    c->add_option("--edge", o.edge, "Edge decoration a, zero by default");
  }
  auto* up_cmd = app.add_subcommand("up", "Raise the node decorations of tau by e_i");
  up_cmd->add_option("i", o.index)->required();
  up_cmd->add_option("tau", o.rhs)->required();
  binary("post", "Post-Lie product x ▷ y of generators", "x", "y")->add_flag("--mi", o.mi, "Multi-index generators");
  binary("bracket", "Lie bracket [x, y]_0 of generators", "x", "y")->add_flag("--mi", o.mi, "Multi-index generators");
  binary("star", "Product A * B in the envelope", "A", "B")->add_flag("--mi", o.mi, "Multi-index envelope");
  auto* delta = app.add_subcommand("delta", "Coproduct of an envelope element");
  delta->add_option("A", o.lhs)->required();
  delta->add_flag("--mi", o.mi, "Multi-index envelope");
  binary("star2", "sigma ⋆_2 tau at edge decoration b", "sigma", "tau")
      ->add_option("--dec", o.edge, "Planting decoration b, zero by default");
  auto* psi = app.add_subcommand("psi", "Tree to multi-index map");
  psi->add_option("tau", o.lhs)->required();
  psi->add_flag("--hat", o.hat, "Apply to generators X_i and I[a](tau)");
  psi->add_flag("--verbatim", o.verbatim, "Send a bare node to 1 instead of z_0");
  binary("mi-act", "Action of derivations on a multi-index polynomial", "g", "m");
  binary("mi-bracket", "Derived bracket of multi-index generators", "x", "y");
  auto* norm = app.add_subcommand("normalize", "Canonical form of a tree");
  norm->add_option("tree", o.lhs)->required();
  norm->add_flag("--planar", o.planar, "Read a planar tree and take its quotient");
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suites, "Suite name, repeatable; all by default");
  verify->add_option("--max-edges", o.params.max_edges);
  verify->add_option("--max-dec", o.params.max_dec);
  verify->add_option("--max-total-edges", o.params.max_total_edges);
  verify->add_option("--samples", o.params.samples);
  verify->add_option("--seed", o.params.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::size_t d = o.dim + 1;
    o.params.dim = o.dim;
    if (!o.scaling.empty()) parse_decvec(o.scaling, d);
    return dispatch(app.get_subcommands().front()->get_name(), o);
  } catch (const UnknownSuite& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
