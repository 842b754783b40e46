#include "postlie/decvec.hpp"

#include <algorithm>
#include <functional>

namespace postlie {

DecVec::DecVec(std::size_t components) {
  if (components == 0 || components > kMaxComponents)
    throw std::invalid_argument("DecVec: unsupported number of components " +
                                std::to_string(components));
  size_ = static_cast<std::uint8_t>(components);
}

DecVec::DecVec(std::initializer_list<int> values) : DecVec(values.size()) {
  std::size_t i = 0;
  for (int v : values) {
    if (v < 0) throw std::invalid_argument("DecVec: negative component");
    values_[i++] = v;
  }
}

DecVec DecVec::unit(std::size_t components, std::size_t i) {
  DecVec v(components);
  if (i >= components) throw std::out_of_range("DecVec::unit: index out of range");
  v.values_[i] = 1;
  return v;
}

bool DecVec::is_zero() const {
  return std::all_of(values_.begin(), values_.begin() + size_, [](int v) { return v == 0; });
}

int DecVec::total() const {
  int t = 0;
  for (std::size_t i = 0; i < size_; ++i) t += values_[i];
  return t;
}

void require_same_dim(const DecVec& a, const DecVec& b) {
  if (a.size() != b.size())
    throw DimensionError("decorations of different dimension: " + a.to_string() + " vs " +
                         b.to_string());
}

DecVec DecVec::operator+(const DecVec& other) const {
  DecVec r = *this;
  r += other;
  return r;
}

DecVec& DecVec::operator+=(const DecVec& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < size_; ++i) values_[i] += other.values_[i];
  return *this;
}

std::optional<DecVec> DecVec::minus(const DecVec& other) const {
  require_same_dim(*this, other);
  DecVec r = *this;
  for (std::size_t i = 0; i < size_; ++i) {
    r.values_[i] -= other.values_[i];
    if (r.values_[i] < 0) return std::nullopt;
  }
  return r;
}

DecVec DecVec::with(std::size_t i, int value) const {
  if (value < 0) throw std::invalid_argument("DecVec: negative component");
  DecVec r = *this;
  r.values_[i] = value;
  return r;
}

bool DecVec::leq(const DecVec& other) const {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < size_; ++i)
    if (values_[i] > other.values_[i]) return false;
  return true;
}

std::string DecVec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) s += ',';
    s += std::to_string(values_[i]);
  }
  return s + ")";
}

std::size_t DecVec::hash() const {
  std::size_t h = size_;
  for (std::size_t i = 0; i < size_; ++i) h = h * 1000003u ^ static_cast<std::size_t>(values_[i]);
  return h;
}

DecVec meet(const DecVec& a, const DecVec& b) {
  require_same_dim(a, b);
  DecVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r = r.with(i, std::min(a[i], b[i]));
  return r;
}

Scaling::Scaling(DecVec weights) : weights_(weights) {
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] < 1) throw std::invalid_argument("Scaling: weights must be >= 1");
}

Scaling Scaling::parabolic(std::size_t components) {
  DecVec w(components);
  for (std::size_t i = 0; i < components; ++i) w = w.with(i, i == 0 ? 2 : 1);
  return Scaling(w);
}

Scaling Scaling::unit(std::size_t components) {
  DecVec w(components);
  for (std::size_t i = 0; i < components; ++i) w = w.with(i, 1);
  return Scaling(w);
}

namespace {

std::int64_t binom1(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

std::int64_t binom(const DecVec& n, const DecVec& l) {
  require_same_dim(n, l);
  std::int64_t r = 1;
  for (std::size_t i = 0; i < n.size() && r != 0; ++i) r *= binom1(n[i], l[i]);
  return r;
}

std::int64_t snorm(const DecVec& n, const Scaling& s) {
  require_same_dim(n, s.weights());
  std::int64_t r = 0;
  for (std::size_t i = 0; i < n.size(); ++i)
    r += static_cast<std::int64_t>(s.weights()[i]) * n[i];
  return r;
}

std::int64_t factorial(const DecVec& a) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int j = 2; j <= a[i]; ++j) r *= j;
  return r;
}

}  // namespace postlie
