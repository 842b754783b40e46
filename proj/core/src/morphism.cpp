#include "postlie/morphism.hpp"

namespace postlie {

MIPolynomial psi(const T0Tree& tau, PsiBase base) {
  std::size_t k1 = tau.monomials().size();
  std::size_t k2 = tau.children().size();
  if (k1 + k2 == 0 && base == PsiBase::Verbatim) return MIPolynomial(MIMonomial());
  Coefficient c = factorial(DecVec{static_cast<int>(k1 + k2)});
  MIMonomial m = MIMonomial::arity(static_cast<unsigned>(k1 + k2));
  for (const auto& l : tau.monomials()) {
    c *= factorial(l);
    m = m * MIMonomial::label(l);
  }
  MIPolynomial out(m, c);
  for (const auto& child : tau.children()) {
    MIPolynomial next;
    for (const auto& [a, x] : out)
      for (const auto& [b, y] : psi(child, base)) next.add(a * b, x * y);
    out = std::move(next);
  }
  return out;
}

MIComb psi_hat(const V0Basis& v, PsiBase base) {
  if (const auto* x = std::get_if<XLetter>(&v)) return MIComb(MIGenerator(*x));
  const auto& p = std::get<T0Planted>(v);
  MIComb out;
  Coefficient inv = Coefficient(1) / Coefficient(factorial(p.a));
  for (const auto& [m, c] : psi(p.tree, base)) out.add(MIGenerator(Deriv{m, p.a}), c * inv);
  return out;
}

MIComb psi_hat(const V0Comb& v, PsiBase base) {
  return linear(v, [&](const V0Basis& g) { return psi_hat(g, base); });
}

MIEnvElement psi_hat_env(const T0Envelope& src, const MIEnvelope& dst, const LinComb<EnvBasis<T0Planted>>& a,
                         PsiBase base) {
  MIEnvElement out;
  for (const auto& [b, c] : a) {
    MIEnvElement word = dst.unit();
    for (const auto& g : src.letters(b)) word = dst.mul(word, dst.element(psi_hat(g, base)));
    out.add(word, c);
  }
  return out;
}

}  // namespace postlie
