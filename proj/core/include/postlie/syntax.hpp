#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "postlie/multiindex.hpp"
#include "postlie/planar.hpp"
#include "postlie/t0tree.hpp"
#include "postlie/tree_postlie.hpp"

namespace postlie {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// "(n0,...,nd)".
DecVec parse_decvec(std::string_view text, std::size_t components);

// Decorated trees:
//   expr   := term ("+" term)* | "0"
//   term   := [rational "*"] factor+
//   factor := "Xi" | "1" | "X_" idx | "X^" nvec | "I[" nvec "](" expr ")"
TreeComb parse_tree_comb(std::string_view text, std::size_t components);
/// A single tree with coefficient one.
DecoratedTree parse_tree(std::string_view text, std::size_t components);
std::string format(const DecoratedTree& t);
std::string format(const TreeComb& x);

/// Generators of the tree algebra: X_i or planted trees.
VComb parse_v_comb(std::string_view text, std::size_t components);
std::string format(const VBasis& v);
std::string format(const VComb& x);

// Envelope words: env := wterm ("+" wterm)*; wterm := [rational "*"] letter (";" letter)*;
// letter := factor+ | "(" expr ")". Each letter must be an X_i or planted.
TreeEnvElement parse_tree_env(std::string_view text, const TreeEnvelope& env);
std::vector<VComb> parse_tree_word(std::string_view text, std::size_t components);
std::string format(const TreeEnvBasis& b);
std::string format(const TreeEnvElement& x);

// Multi-indices: "z_k" arity variable, "z(n)" label variable, optional "^p",
// "D(n)" derivation, "d_i" for ∂_i.
MIPolynomial parse_mi_poly(std::string_view text, std::size_t components);
MIComb parse_mi_comb(std::string_view text, std::size_t components);
MIEnvElement parse_mi_env(std::string_view text, const MIEnvelope& env);
std::string format(const MIMonomial& m);
std::string format(const MIPolynomial& p);
std::string format(const MIGenerator& g);
std::string format(const MIComb& x);
std::string format(const MIEnvBasis& b);
std::string format(const MIEnvElement& x);

// T0 trees: "Xi" (optional), "1", "X^" nvec factors, "I(" tree ")" children.
T0Tree parse_t0_tree(std::string_view text, std::size_t components);
/// "X_i" or "I[" nvec "](" t0tree ")" summed with coefficients.
V0Comb parse_v0_comb(std::string_view text, std::size_t components);
LinComb<EnvBasis<T0Planted>> parse_t0_env(std::string_view text, const T0Envelope& env);
std::string format(const T0Tree& t);
std::string format(const T0Comb& x);
std::string format(const V0Basis& v);
std::string format(const V0Comb& x);

/// Planar trees read in order: "Xi" noise, "X_i" / "X^" nvec as X edges,
/// "I[" nvec "](" tree ")" kernel edges.
PlanarTree parse_planar(std::string_view text, std::size_t components);
/// "X_i" or "I[" nvec "](" planar ")".
PlanarV parse_planar_v(std::string_view text, std::size_t components);
std::string format(const PlanarTree& t);
std::string format(const PlanarV& v);
std::string format(const PlanarComb& x);
std::string format(const PlanarVComb& x);

/// (coefficient, element) strings in basis order.
template <class B, class F>
std::vector<std::pair<std::string, std::string>> term_strings(const LinComb<B>& x, F&& fmt) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [b, c] : x) out.emplace_back(to_string(c), fmt(b));
  return out;
}

/// "0" for the zero element; otherwise terms joined by " + ", coefficient 1
/// omitted, others written "c * elem".
template <class B, class F>
std::string format_comb(const LinComb<B>& x, F&& fmt) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : x) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += to_string(c) + " * ";
    out += fmt(b);
  }
  return out;
}

}  // namespace postlie
