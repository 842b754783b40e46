#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "postlie/decvec.hpp"
#include "postlie/envelope.hpp"
#include "postlie/lincomb.hpp"

namespace postlie {

/// z^beta = prod_k z_k^{beta(k)} prod_{n != 0} z_n^{beta(n)}. Entries are
/// positive; n-labels are nonzero.
class MIMonomial {
 public:
  MIMonomial() = default;

  static MIMonomial arity(unsigned k, unsigned power = 1);
  static MIMonomial label(const DecVec& n, unsigned power = 1);

  const std::map<unsigned, unsigned>& arities() const { return arity_; }
  const std::map<DecVec, unsigned>& labels() const { return label_; }
  unsigned arity_power(unsigned k) const;
  unsigned label_power(const DecVec& n) const;
  bool is_one() const { return arity_.empty() && label_.empty(); }
  unsigned degree() const;

  MIMonomial operator*(const MIMonomial& o) const;
  /// Multiplies by z_k^delta (delta may be negative); nullopt when a power
  /// would go negative.
  std::optional<MIMonomial> shift_arity(unsigned k, int delta) const;
  std::optional<MIMonomial> shift_label(const DecVec& n, int delta) const;

  friend bool operator==(const MIMonomial&, const MIMonomial&) = default;
  friend std::strong_ordering operator<=>(const MIMonomial& a, const MIMonomial& b) {
    if (auto c = std::lexicographical_compare_three_way(a.arity_.begin(), a.arity_.end(),
                                                        b.arity_.begin(), b.arity_.end());
        c != 0)
      return c;
    return std::lexicographical_compare_three_way(a.label_.begin(), a.label_.end(), b.label_.begin(),
                                                  b.label_.end());
  }

 private:
  std::map<unsigned, unsigned> arity_;
  std::map<DecVec, unsigned> label_;
};

using MIPolynomial = LinComb<MIMonomial>;

/// [gamma] = sum_k k gamma(k) - sum_{n != 0} gamma(n).
std::int64_t arity_grade(const MIMonomial& gamma);

/// z^gamma D^(n); D^(0) is the arity-raising derivation.
struct Deriv {
  MIMonomial gamma;
  DecVec n;
  friend bool operator==(const Deriv&, const Deriv&) = default;
  friend std::strong_ordering operator<=>(const Deriv& a, const Deriv& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.gamma <=> b.gamma;
  }
};

/// z^gamma D^(n) or ∂_i (the XLetter alternative).
using MIGenerator = Generator<Deriv>;
using MIComb = LinComb<MIGenerator>;

/// The derivation applied to one monomial by the Leibniz rule. `components`
/// is d+1 and is needed for ∂_i.
MIPolynomial derivation_action(const MIGenerator& g, const MIMonomial& m, std::size_t components);
MIPolynomial derivation_action(const MIGenerator& g, const MIPolynomial& p, std::size_t components);
/// Applies ops[0] first, then ops[1], ...
MIPolynomial apply_sequence(const std::vector<MIGenerator>& ops, const MIMonomial& m,
                            std::size_t components);

/// Closed-form (g)^gamma_beta with g z^gamma = sum_beta (g)^gamma_beta z^beta.
/// Only bare derivations are accepted.
std::int64_t matrix_coeff(const MIGenerator& g, const MIMonomial& gamma, const MIMonomial& beta,
                          std::size_t components);

MIComb mi_pre_lie(const MIGenerator& x, const MIGenerator& y, std::size_t components);
MIComb mi_post(const MIGenerator& x, const MIGenerator& y, std::size_t components);
MIComb mi_bracket0(const MIGenerator& x, const MIGenerator& y);
/// Full bracket of L, outputs projected onto [beta] >= 0.
MIComb mi_bracket(const MIGenerator& x, const MIGenerator& y, std::size_t components);

/// Which case of the sort analysis a triple falls in: 1 for x, y partial;
/// 2 for x, y in the derivation part and z partial; 3 for all derivations;
/// 4 for x partial and y, z derivations; 0 for the remaining mixed triples.
int mi_case(const MIGenerator& x, const MIGenerator& y, const MIGenerator& z);

class MIAlgebra {
 public:
  using Abelian = Deriv;
  explicit MIAlgebra(std::size_t components) : components_(components) {}
  std::size_t x_count() const { return components_; }
  LinComb<Deriv> bracket_with_x(const Deriv& g, std::size_t i) const;
  MIComb post(const MIGenerator& x, const MIGenerator& y) const { return mi_post(x, y, components_); }

 private:
  std::size_t components_;
};

using MIEnvelope = Envelope<MIAlgebra>;
using MIEnvBasis = EnvBasis<Deriv>;
using MIEnvElement = LinComb<MIEnvBasis>;

}  // namespace postlie
