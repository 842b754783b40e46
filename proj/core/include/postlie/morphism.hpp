#pragma once

#include "postlie/multiindex.hpp"
#include "postlie/t0tree.hpp"
#include "postlie/tree_postlie.hpp"

namespace postlie {

/// Value assigned to a node with neither polynomial factors nor children.
/// Recursive applies the general rule there too (0! z_0); Verbatim uses the
/// empty monomial.
enum class PsiBase { Recursive, Verbatim };

/// Psi(tau) = (k1+k2)! z_{k1+k2} prod_j l_j! z_{l_j} prod_i Psi(tau_i).
MIPolynomial psi(const T0Tree& tau, PsiBase base = PsiBase::Recursive);

/// X_i -> ∂_i, I_a(sigma) -> Psi(sigma) D^(a) / a!.
MIComb psi_hat(const V0Basis& v, PsiBase base = PsiBase::Recursive);
MIComb psi_hat(const V0Comb& v, PsiBase base = PsiBase::Recursive);

/// Generator-wise image of PBW words, renormalized in the multi-index envelope.
MIEnvElement psi_hat_env(const T0Envelope& src, const MIEnvelope& dst, const LinComb<EnvBasis<T0Planted>>& a,
                         PsiBase base = PsiBase::Recursive);

}  // namespace postlie
