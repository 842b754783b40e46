#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "postlie/multiindex.hpp"
#include "postlie/planar.hpp"
#include "postlie/t0tree.hpp"
#include "postlie/tree.hpp"
#include "postlie/tree_postlie.hpp"

namespace postlie {

struct EnumParams {
  std::size_t dim = 1;          // d; decorations have d+1 components
  std::size_t max_edges = 3;    // kernel plus noise edges
  int max_dec = 1;              // bound on every decoration component
  std::size_t max_noise = 1;    // noise edges per tree
  unsigned max_arity = 3;       // largest k in z_k
  std::size_t max_support = 2;  // distinct variables in a multi-index
  std::uint64_t seed = 1;
  // Suites sweep every tuple whose summed edge count stays within this bound
  // and add `samples` seeded random tuples drawn from the full family.
  std::size_t max_total_edges = 2;
  std::size_t samples = 200;

  std::size_t components() const { return dim + 1; }
};

/// Every vector with components in [0, max_dec], lexicographic.
std::vector<DecVec> enumerate_decs(std::size_t components, int max_dec);

/// All canonical trees within the bounds, sorted, without duplicates.
std::vector<DecoratedTree> enumerate_trees(const EnumParams& p);
/// I_a(tau) with at most max_edges edges counting the planting edge.
std::vector<Planted> enumerate_planted(const EnumParams& p);
/// T0 trees with at most max_edges edges and at most `max_factors`
/// polynomial factors per node.
std::vector<T0Tree> enumerate_t0_trees(const EnumParams& p, std::size_t max_factors);
/// Planar trees: ordered slots, X edges count as edges.
std::vector<PlanarTree> enumerate_planar_trees(const EnumParams& p);

/// Multi-index monomials of total degree <= max_degree over z_0..z_{max_arity}
/// and z_n with 0 < n <= max_label componentwise.
std::vector<MIMonomial> enumerate_monomials(std::size_t components, unsigned max_arity, int max_label,
                                            unsigned max_degree);
/// z^gamma D^(n) with [gamma] >= 0, gamma using at most max_support distinct
/// variables each with power one, plus every ∂_i.
std::vector<MIGenerator> enumerate_mi_generators(const EnumParams& p);

}  // namespace postlie
