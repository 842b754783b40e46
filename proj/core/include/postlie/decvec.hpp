#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>

namespace postlie {

/// Raised when two decorated objects of different ambient dimension meet.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of N^{d+1}. Used for node and edge decorations, derivative labels
/// and the n-labels of multi-indices. Storage is inline; d+1 <= kMaxComponents.
class DecVec {
 public:
  static constexpr std::size_t kMaxComponents = 8;

  DecVec() = default;
  /// The zero vector with `components` entries.
  explicit DecVec(std::size_t components);
  DecVec(std::initializer_list<int> values);

  /// e_i in N^{components}.
  static DecVec unit(std::size_t components, std::size_t i);

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return values_[i]; }
  bool is_zero() const;
  int total() const;

  DecVec operator+(const DecVec& other) const;
  DecVec& operator+=(const DecVec& other);
  /// Componentwise difference; nullopt when any component would go negative.
  std::optional<DecVec> minus(const DecVec& other) const;
  DecVec with(std::size_t i, int value) const;

  /// Componentwise <=.
  bool leq(const DecVec& other) const;

  std::string to_string() const;

  friend bool operator==(const DecVec& a, const DecVec& b) {
    return a.size_ == b.size_ && a.values_ == b.values_;
  }
  friend std::strong_ordering operator<=>(const DecVec& a, const DecVec& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.values_ <=> b.values_;
  }

  std::size_t hash() const;

 private:
  std::uint8_t size_ = 0;
  std::array<int, kMaxComponents> values_{};
};

void require_same_dim(const DecVec& a, const DecVec& b);

/// Parabolic and other anisotropic scalings of N^{d+1}; every weight >= 1.
class Scaling {
 public:
  explicit Scaling(DecVec weights);
  /// (2, 1, ..., 1).
  static Scaling parabolic(std::size_t components);
  static Scaling unit(std::size_t components);

  const DecVec& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }

 private:
  DecVec weights_;
};

/// prod_i C(n_i, l_i); zero as soon as some l_i > n_i.
std::int64_t binom(const DecVec& n, const DecVec& l);
/// |n|_s = sum_i s_i n_i.
std::int64_t snorm(const DecVec& n, const Scaling& s);
/// prod_i n_i!.
std::int64_t factorial(const DecVec& a);

/// Calls f(l) for every l with 0 <= l <= bound componentwise, in
/// lexicographic order.
template <class F>
void for_each_below(const DecVec& bound, F&& f) {
  DecVec l(bound.size());
  while (true) {
    f(l);
    bool advanced = false;
    for (std::size_t i = bound.size(); i-- > 0;) {
      if (l[i] < bound[i]) {
        l = l.with(i, l[i] + 1);
        advanced = true;
        break;
      }
      l = l.with(i, 0);
    }
    if (!advanced) return;
  }
}

/// Componentwise minimum.
DecVec meet(const DecVec& a, const DecVec& b);

}  // namespace postlie

template <>
struct std::hash<postlie::DecVec> {
  std::size_t operator()(const postlie::DecVec& v) const noexcept { return v.hash(); }
};
