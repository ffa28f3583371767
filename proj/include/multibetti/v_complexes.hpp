#pragma once

#include "multibetti/chain_complex.hpp"
#include "multibetti/matrix.hpp"
#include "multibetti/multidegree.hpp"

#include <cstdint>
#include <vector>

namespace multibetti {

class Presentation;

// Complex assembled from the subspaces V_B spanned by column subsets, with
// signed-inclusion differentials. Homological degree i holds one summand per
// deleted subset A ⊆ lower with |A| = i, spanning set B = upper \ A; the
// summand basis is the greedy pivot subset of B in global column order, so
// it does not depend on the ordering ω (ω enters through signs only).
struct GradedSubspaceComplex {
    // per degree, per summand: the spanning set B (global column indices)
    std::vector<std::vector<std::vector<std::size_t>>> index_sets;
    // per degree, per summand: pivot columns forming the basis of V_B
    std::vector<std::vector<std::vector<std::size_t>>> bases;
    ChainComplex complex;

    std::vector<std::size_t> dims() const { return complex.dims(); }
};

// Shared builder: degree i carries ⊕_{A ⊆ lower, |A| = i} V_{upper \ A} for
// i = 0..|lower|. The component (A ∪ {c}) -> A is the inclusion
// V_{upper\(A∪{c})} ⊆ V_{upper\A} times (-1)^{#{b ∈ lower\(A∪{c}) : b <ω c}}.
// `omega` lists the elements of `lower` in ω-increasing order (defaults to
// increasing column index).
GradedSubspaceComplex build_interval_complex(const Matrix& columns,
                                             const std::vector<std::size_t>& upper,
                                             const std::vector<std::size_t>& lower,
                                             const std::vector<std::size_t>& omega = {});

// V(φ,ω): 0 -> ⊕_{|B|=1} V_B -> ... -> V_S -> 0 with V_S at degree 0.
GradedSubspaceComplex build_v(const Matrix& columns, const std::vector<std::size_t>& omega = {});

// V(α,φ,ω): degree runs 0..|I_α| with V_{I^α} at 0 and V_{I(α)} at |I_α|.
// Requires α generic in Λ(L).
GradedSubspaceComplex build_v_alpha(const Presentation& p, const Multidegree& alpha,
                                    const std::vector<std::size_t>& omega = {});

// V(φ̄_{I_α},ω): the complex of V(φ,ω) applied to the columns of I_α taken
// modulo V_{I(α)}.
GradedSubspaceComplex build_v_bar(const Presentation& p, const Multidegree& alpha,
                                  const std::vector<std::size_t>& omega = {});

// C' = (reduced chain complex of the full simplex on n vertices)* <-n+1>:
// the dual generator of the empty face sits at degree n; exact throughout.
ChainComplex simplex_dual_shifted(const Field& field, std::size_t n);

// The subcomplex V_{I(α)} ⊗ C' of V(α,φ,ω) together with its degreewise
// embedding matrices, for checking the short exact sequence
// 0 -> V_{I(α)}⊗C' -> V(α,φ,ω) -> V(φ̄_{I_α},ω) -> 0.
struct SubcomplexEmbedding {
    ChainComplex sub;                // V_{I(α)} ⊗ C' in the V(α) summand order
    std::vector<Matrix> embeddings;  // per degree: sub_i -> V(α)_i
};

SubcomplexEmbedding v_alpha_subcomplex(const Presentation& p, const Multidegree& alpha,
                                       const GradedSubspaceComplex& v_alpha,
                                       const std::vector<std::size_t>& omega = {});

} // namespace multibetti
