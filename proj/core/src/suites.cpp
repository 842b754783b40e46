#include "postlie/suites.hpp"

#include <chrono>
#include <utility>

#include "suite_support.hpp"

namespace postlie {

namespace {

using Runner = void (*)(detail::Recorder&, const EnumParams&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"multi-pre-lie", detail::suite_multi_pre_lie},
      {"derivation", detail::suite_derivation},
      {"prop-non-com", detail::suite_prop_non_com},
      {"postlie-trees", detail::suite_postlie_trees},
      {"postlie-mi", detail::suite_postlie_mi},
      {"hopf-trees", detail::suite_hopf_trees},
      {"hopf-mi", detail::suite_hopf_mi},
      {"identification", detail::suite_identification},
      {"brackets-equal", detail::suite_brackets_equal},
      {"matrix-vs-action", detail::suite_matrix_vs_action},
      {"operator-commutation", detail::suite_operator_commutation},
      {"psi-morphism", detail::suite_psi_morphism},
      {"planar-equiv", detail::suite_planar_equiv},
      {"golden-figures", detail::suite_golden_figures},
      {"pbw-confluence", detail::suite_pbw_confluence},
      {"round-trip", detail::suite_round_trip},
      {"determinism", detail::suite_determinism},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, run] : registry()) out.push_back(name);
  return out;
}

SuiteReport run_suite(std::string_view name, const EnumParams& p) {
  for (const auto& [n, run] : registry()) {
    if (n != name) continue;
    SuiteReport report;
    report.name = n;
    detail::Recorder rec(report);
    auto start = std::chrono::steady_clock::now();
    run(rec, p);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  throw UnknownSuite(std::string(name));
}

}  // namespace postlie
