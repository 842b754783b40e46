#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "postlie/t0tree.hpp"
#include "postlie/tree.hpp"

namespace postlie {

/// sigma ↷^a tau: one new Kernel(a) edge from each eligible vertex of tau.
TreeComb graft(const DecoratedTree& sigma, const DecVec& a, const DecoratedTree& tau);
/// Grafting corrected by the binomially weighted decrements of the target
/// decoration, l <= min(a, n_v).
TreeComb deformed_graft(const DecoratedTree& sigma, const DecVec& a, const DecoratedTree& tau);

/// Sum over eligible vertices (optionally restricted to preorder indices in
/// `restrict`) of tau with e_i added at that vertex.
TreeComb up(std::size_t i, const DecoratedTree& tau,
            const std::optional<std::vector<std::size_t>>& restrict = std::nullopt);
/// up restricted to the marked vertices.
TreeComb up_marked(std::size_t i, const DecoratedTree& tau);
/// Sum over all distributions k = sum_v k_v on the marked vertices.
TreeComb up_multi(const DecVec& k, const DecoratedTree& tau);

/// I_a(sigma) ↷ I_b(tau) = I_b(sigma ↷^a tau), deformed or not.
TreeComb planted_pre_lie(const DecoratedTree& p, const DecoratedTree& q, bool deformed);

TreeComb graft(const TreeComb& sigma, const DecVec& a, const TreeComb& tau);
TreeComb deformed_graft(const TreeComb& sigma, const DecVec& a, const TreeComb& tau);
TreeComb up(std::size_t i, const TreeComb& tau);
TreeComb up_marked(std::size_t i, const TreeComb& tau);

/// Plain grafting on T0 trees by a zero-decorated edge.
T0Comb graft_T0(const T0Tree& sigma, const T0Tree& tau);
/// a = 0: plain grafting. Otherwise grafting at v after removing one X^a
/// factor from v, summed over the factors equal to X^a.
T0Comb deformed_graft_T0(const T0Tree& sigma, const DecVec& a, const T0Tree& tau);
/// X_i added as a new factor at one vertex, or e_i added to one factor.
T0Comb up_T0(std::size_t i, const T0Tree& tau);

}  // namespace postlie
