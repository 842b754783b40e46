#include <cstdio>
#include <string>
#include <vector>

#include "postlie/suites.hpp"

using namespace postlie;

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> suites;
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden figures", {"golden-figures"}, 1},
      {2, "multi-pre-Lie identity", {"multi-pre-lie"}, 120},
      {3, "non-commutation of raising and grafting", {"prop-non-com", "derivation"}, 120},
      {4, "post-Lie axioms, both instances, all four cases", {"postlie-trees", "postlie-mi"}, 300},
      {5, "Hopf structure, both instances", {"hopf-trees", "hopf-mi", "brackets-equal"}, 300},
      {6, "star2 identification", {"identification"}, 300},
      {7, "multi-index operators", {"matrix-vs-action", "operator-commutation"}, 60},
      {8, "tree to multi-index morphism", {"psi-morphism"}, 120},
      {9, "planar left grafting and normalization", {"planar-equiv"}, 120},
      {10, "PBW confluence, round trip, determinism", {"pbw-confluence", "round-trip", "determinism"}, 60},
  };
  const EnumParams params;
  int failed = 0;
  for (const auto& c : criteria) {
    bool ok = true;
    double seconds = 0;
    std::size_t cases = 0, bad = 0;
    std::string first;
    for (const auto& name : c.suites) {
      SuiteReport r = run_suite(name, params);
      ok = ok && r.passed();
      seconds += r.seconds;
      cases += r.cases;
      bad += r.failed;
      if (first.empty() && !r.failures.empty()) first = name + ": " + r.failures[0].input;
    }
    bool in_time = seconds < c.limit_seconds;
    bool pass = ok && in_time;
    if (!pass) ++failed;
    std::printf("criterion %d %s: %s (cases=%zu failed=%zu time=%.1fs limit=%.0fs)%s%s\n", c.id, c.title,
                pass ? "PASS" : "FAIL", cases, bad, seconds, c.limit_seconds, in_time ? "" : " over time",
                first.empty() ? "" : (" first failure: " + first).c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
