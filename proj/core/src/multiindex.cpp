#include "postlie/multiindex.hpp"

#include <stdexcept>

namespace postlie {

namespace {

template <class K>
std::optional<std::map<K, unsigned>> shifted(std::map<K, unsigned> m, const K& k, int delta) {
  auto it = m.find(k);
  long have = it == m.end() ? 0 : static_cast<long>(it->second);
  long now = have + delta;
  if (now < 0) return std::nullopt;
  if (now == 0) {
    if (it != m.end()) m.erase(it);
  } else {
    m[k] = static_cast<unsigned>(now);
  }
  return m;
}

void check_label(const DecVec& n) {
  if (n.is_zero()) throw std::invalid_argument("z_n requires n != 0");
}

}  // namespace

MIMonomial MIMonomial::arity(unsigned k, unsigned power) {
  MIMonomial m;
  if (power > 0) m.arity_[k] = power;
  return m;
}

MIMonomial MIMonomial::label(const DecVec& n, unsigned power) {
  check_label(n);
  MIMonomial m;
  if (power > 0) m.label_[n] = power;
  return m;
}

unsigned MIMonomial::arity_power(unsigned k) const {
  auto it = arity_.find(k);
  return it == arity_.end() ? 0 : it->second;
}

unsigned MIMonomial::label_power(const DecVec& n) const {
  auto it = label_.find(n);
  return it == label_.end() ? 0 : it->second;
}

unsigned MIMonomial::degree() const {
  unsigned d = 0;
  for (const auto& [k, p] : arity_) d += p;
  for (const auto& [n, p] : label_) d += p;
  return d;
}

MIMonomial MIMonomial::operator*(const MIMonomial& o) const {
  MIMonomial r = *this;
  for (const auto& [k, p] : o.arity_) r.arity_[k] += p;
  for (const auto& [n, p] : o.label_) {
    if (!r.label_.empty()) require_same_dim(r.label_.begin()->first, n);
    r.label_[n] += p;
  }
  return r;
}

std::optional<MIMonomial> MIMonomial::shift_arity(unsigned k, int delta) const {
  auto a = shifted(arity_, k, delta);
  if (!a) return std::nullopt;
  MIMonomial r = *this;
  r.arity_ = std::move(*a);
  return r;
}

std::optional<MIMonomial> MIMonomial::shift_label(const DecVec& n, int delta) const {
  check_label(n);
  auto l = shifted(label_, n, delta);
  if (!l) return std::nullopt;
  MIMonomial r = *this;
  r.label_ = std::move(*l);
  return r;
}

std::int64_t arity_grade(const MIMonomial& gamma) {
  std::int64_t g = 0;
  for (const auto& [k, p] : gamma.arities()) g += static_cast<std::int64_t>(k) * p;
  for (const auto& [n, p] : gamma.labels()) g -= p;
  return g;
}

namespace {

// D^(0) z^beta.
MIPolynomial d0(const MIMonomial& m) {
  MIPolynomial out;
  for (const auto& [k, p] : m.arities())
    out.add(*m.shift_arity(k, -1)->shift_arity(k + 1, 1), coef(static_cast<std::int64_t>(k + 1) * p));
  return out;
}

// D^(n) z^beta, n != 0.
MIPolynomial dn(const DecVec& n, const MIMonomial& m) {
  MIPolynomial out;
  if (auto r = m.shift_label(n, -1)) out.add(*r, m.label_power(n));
  return out;
}

MIPolynomial partial(std::size_t i, const MIMonomial& m, std::size_t components) {
  if (i >= components) throw DimensionError("coordinate index out of range");
  DecVec e = DecVec::unit(components, i);
  MIMonomial ze = MIMonomial::label(e);
  MIPolynomial out;
  for (const auto& [t, c] : d0(m)) out.add(t * ze, c);
  for (const auto& [n, p] : m.labels()) {
    require_same_dim(n, e);
    out.add(*m.shift_label(n, -1)->shift_label(n + e, 1), coef(static_cast<std::int64_t>(n[i] + 1) * p));
  }
  return out;
}

}  // namespace

MIPolynomial derivation_action(const MIGenerator& g, const MIMonomial& m, std::size_t components) {
  if (const auto* x = std::get_if<XLetter>(&g)) return partial(x->i, m, components);
  const auto& d = std::get<Deriv>(g);
  MIPolynomial base = d.n.is_zero() ? d0(m) : dn(d.n, m);
  if (d.gamma.is_one()) return base;
  MIPolynomial out;
  for (const auto& [t, c] : base) out.add(t * d.gamma, c);
  return out;
}

MIPolynomial derivation_action(const MIGenerator& g, const MIPolynomial& p, std::size_t components) {
  return linear(p, [&](const MIMonomial& m) { return derivation_action(g, m, components); });
}

MIPolynomial apply_sequence(const std::vector<MIGenerator>& ops, const MIMonomial& m,
                            std::size_t components) {
  MIPolynomial p(m);
  for (const auto& g : ops) p = derivation_action(g, p, components);
  return p;
}

std::int64_t matrix_coeff(const MIGenerator& g, const MIMonomial& gamma, const MIMonomial& beta,
                          std::size_t components) {
  auto d0_coeff = [&](const MIMonomial& extra) {
    std::int64_t sum = 0;
    for (const auto& [k, p] : gamma.arities())
      if (gamma * MIMonomial::arity(k + 1) * extra == beta * MIMonomial::arity(k))
        sum += static_cast<std::int64_t>(k + 1) * p;
    return sum;
  };
  if (const auto* x = std::get_if<XLetter>(&g)) {
    if (x->i >= components) throw DimensionError("coordinate index out of range");
    DecVec e = DecVec::unit(components, x->i);
    std::int64_t sum = d0_coeff(MIMonomial::label(e));
    for (const auto& [n, p] : gamma.labels())
      if (gamma * MIMonomial::label(n + e) == beta * MIMonomial::label(n))
        sum += static_cast<std::int64_t>(n[x->i] + 1) * p;
    return sum;
  }
  const auto& d = std::get<Deriv>(g);
  if (!d.gamma.is_one()) throw std::invalid_argument("matrix_coeff: only bare derivations have matrices");
  if (d.n.is_zero()) return d0_coeff(MIMonomial());
  return gamma == beta * MIMonomial::label(d.n) ? gamma.label_power(d.n) : 0;
}

MIComb mi_pre_lie(const MIGenerator& x, const MIGenerator& y, std::size_t components) {
  const auto* dx = std::get_if<Deriv>(&x);
  const auto* dy = std::get_if<Deriv>(&y);
  if (!dx || !dy) throw std::invalid_argument("mi_pre_lie: arguments must be derivations z^gamma D^(n)");
  MIComb out;
  for (const auto& [b, c] : derivation_action(x, dy->gamma, components)) out.add(MIGenerator(Deriv{b, dy->n}), c);
  return out;
}

MIComb mi_post(const MIGenerator& x, const MIGenerator& y, std::size_t components) {
  const auto* dy = std::get_if<Deriv>(&y);
  if (!dy) return {};
  MIComb out;
  for (const auto& [b, c] : derivation_action(x, dy->gamma, components)) out.add(MIGenerator(Deriv{b, dy->n}), c);
  return out;
}

LinComb<Deriv> MIAlgebra::bracket_with_x(const Deriv& g, std::size_t i) const {
  if (i >= g.n.size()) throw DimensionError("coordinate index out of range");
  LinComb<Deriv> out;
  if (auto m = g.n.minus(DecVec::unit(g.n.size(), i))) out.add(Deriv{g.gamma, *m}, g.n[i]);
  return out;
}

MIComb mi_bracket0(const MIGenerator& x, const MIGenerator& y) {
  MIComb out;
  const auto* dx = std::get_if<Deriv>(&x);
  const auto* dy = std::get_if<Deriv>(&y);
  if (dx && !dy) {
    for (const auto& [g, c] : MIAlgebra(dx->n.size()).bracket_with_x(*dx, std::get<XLetter>(y).i))
      out.add(MIGenerator(g), c);
  } else if (dy && !dx) {
    for (const auto& [g, c] : MIAlgebra(dy->n.size()).bracket_with_x(*dy, std::get<XLetter>(x).i))
      out.add(MIGenerator(g), -c);
  }
  return out;
}

MIComb mi_bracket(const MIGenerator& x, const MIGenerator& y, std::size_t components) {
  const auto* dx = std::get_if<Deriv>(&x);
  const auto* dy = std::get_if<Deriv>(&y);
  MIComb raw;
  if (dx && dy) {
    raw = mi_pre_lie(x, y, components) - mi_pre_lie(y, x, components);
  } else if (dx || dy) {
    const Deriv& d = dx ? *dx : *dy;
    std::size_t i = std::get<XLetter>(dx ? y : x).i;
    if (auto m = d.n.minus(DecVec::unit(d.n.size(), i))) raw.add(MIGenerator(Deriv{d.gamma, *m}), d.n[i]);
    for (const auto& [b, c] : derivation_action(MIGenerator(XLetter{i}), d.gamma, components))
      raw.add(MIGenerator(Deriv{b, d.n}), -c);
    if (dy) raw *= -1;
  }
  MIComb out;
  for (const auto& [g, c] : raw) {
    const auto* d = std::get_if<Deriv>(&g);
    if (!d || arity_grade(d->gamma) >= 0) out.add(g, c);
  }
  return out;
}

int mi_case(const MIGenerator& x, const MIGenerator& y, const MIGenerator& z) {
  bool px = std::holds_alternative<XLetter>(x);
  bool py = std::holds_alternative<XLetter>(y);
  bool pz = std::holds_alternative<XLetter>(z);
  if (px && py) return 1;
  if (!px && !py) return pz ? 2 : 3;
  if (px && !py && !pz) return 4;
  return 0;
}

}  // namespace postlie
