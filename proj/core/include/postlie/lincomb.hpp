#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>

#include "postlie/rational.hpp"

namespace postlie {

/// Finitely supported linear combination over a canonical basis B with exact
/// rational coefficients. B must be totally ordered; no stored coefficient is
/// ever zero.
template <class B>
class LinComb {
 public:
  using Basis = B;
  using Terms = std::map<B, Coefficient>;
  using const_iterator = typename Terms::const_iterator;

  LinComb() = default;
  explicit LinComb(const B& b, Coefficient c = 1) { add(b, c); }
  LinComb(std::initializer_list<std::pair<B, Coefficient>> terms) {
    for (const auto& [b, c] : terms) add(b, c);
  }

  void add(const B& b, const Coefficient& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  void add(const LinComb& other, const Coefficient& c) {
    if (sgn(c) == 0) return;
    for (const auto& [b, x] : other.terms_) add(b, x * c);
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  LinComb& operator*=(const Coefficient& c) {
    if (sgn(c) == 0) {
      terms_.clear();
    } else {
      for (auto& [b, x] : terms_) x *= c;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= -1; }
  friend LinComb operator*(const Coefficient& c, LinComb a) { return a *= c; }
  friend LinComb operator*(LinComb a, const Coefficient& c) { return a *= c; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

  Coefficient coefficient(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Coefficient(0) : it->second;
  }

 private:
  Terms terms_;
};

/// Linear extension of f : A -> LinComb<C>.
template <class A, class F>
auto linear(const LinComb<A>& x, F&& f) {
  using Out = decltype(f(std::declval<const A&>()));
  Out out;
  for (const auto& [a, c] : x) out.add(f(a), c);
  return out;
}

/// Bilinear extension of f : A x B -> LinComb<C>.
template <class A, class B, class F>
auto bilinear(const LinComb<A>& x, const LinComb<B>& y, F&& f) {
  using Out = decltype(f(std::declval<const A&>(), std::declval<const B&>()));
  Out out;
  for (const auto& [a, c] : x)
    for (const auto& [b, d] : y) out.add(f(a, b), c * d);
  return out;
}

}  // namespace postlie
