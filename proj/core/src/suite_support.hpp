#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "postlie/suites.hpp"

namespace postlie::detail {

inline constexpr std::size_t kKeptFailures = 20;

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : r_(r) {}

  template <class Describe>
  bool check(bool ok, Describe&& describe) {
    ++r_.cases;
    if (!ok) {
      if (r_.failures.size() < kKeptFailures) r_.failures.push_back(describe());
      ++r_.failed;
    }
    return ok;
  }
  void count(const std::string& key, std::size_t n = 1) { r_.counters[key] += n; }
  SuiteReport& report() { return r_; }

 private:
  SuiteReport& r_;
};

/// Portable seeded draws: std::mt19937_64 is specified bit-exactly, the
/// standard distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(g_() % n); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 g_;
};

/// Splits items into buckets by cost.
template <class T, class Cost>
std::vector<std::vector<T>> bucket(const std::vector<T>& items, Cost&& cost) {
  std::vector<std::vector<T>> out;
  for (const auto& x : items) {
    std::size_t c = cost(x);
    if (out.size() <= c) out.resize(c + 1);
    out[c].push_back(x);
  }
  return out;
}

/// Calls f(tuple) for every arity-long tuple drawn from the buckets whose
/// summed bucket index is at most `budget`.
template <class T, class F>
void sweep(const std::vector<std::vector<T>>& buckets, std::size_t arity, std::size_t budget, F&& f) {
  std::vector<const T*> chosen(arity);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
    if (pos == arity) {
      std::vector<T> tuple;
      tuple.reserve(arity);
      for (auto* p : chosen) tuple.push_back(*p);
      f(tuple);
      return;
    }
    for (std::size_t c = 0; c < buckets.size() && c <= left; ++c)
      for (const auto& x : buckets[c]) {
        chosen[pos] = &x;
        rec(pos + 1, left - c);
      }
  };
  rec(0, budget);
}

// One entry per suite family; defined in the suite translation units.
void suite_multi_pre_lie(Recorder&, const EnumParams&);
void suite_derivation(Recorder&, const EnumParams&);
void suite_prop_non_com(Recorder&, const EnumParams&);
void suite_postlie_trees(Recorder&, const EnumParams&);
void suite_postlie_mi(Recorder&, const EnumParams&);
void suite_hopf_trees(Recorder&, const EnumParams&);
void suite_hopf_mi(Recorder&, const EnumParams&);
void suite_identification(Recorder&, const EnumParams&);
void suite_brackets_equal(Recorder&, const EnumParams&);
void suite_matrix_vs_action(Recorder&, const EnumParams&);
void suite_operator_commutation(Recorder&, const EnumParams&);
void suite_psi_morphism(Recorder&, const EnumParams&);
void suite_planar_equiv(Recorder&, const EnumParams&);
void suite_golden_figures(Recorder&, const EnumParams&);
void suite_pbw_confluence(Recorder&, const EnumParams&);
void suite_round_trip(Recorder&, const EnumParams&);
void suite_determinism(Recorder&, const EnumParams&);

}  // namespace postlie::detail
