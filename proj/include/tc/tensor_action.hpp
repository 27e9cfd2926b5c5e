#pragma once

/**
 * @file tensor_action.hpp
 * @brief The signed S_n action on (k^{p|q})^(x)n and the isotypic
 *        projector rank oracle.
 *
 * Basis conventions (fixed so matrices are reproducible):
 * - k^{p|q} basis: even vectors 0..p-1 first, then odd vectors p..p+q-1;
 * - tensor basis in row-major order, leftmost factor slowest.
 *
 * Swapping two odd factors costs the Koszul sign -1.
 */

#include <vector>

#include "tc/matrix.hpp"
#include "tc/partition.hpp"
#include "tc/super_dim.hpp"

namespace tc {

struct SignedTensorAction {
    int n = 0;
    SuperDim dim;
    /// Matrices of the adjacent transpositions s_1..s_{n-1} on the
    /// (p+q)^n dimensional tensor power, in the basis above.
    std::vector<Matrix<Rational>> generators;
};

SignedTensorAction signed_tensor_action(const SuperDim& d, int n);

/// Applies a permutation (one-line form, factor at position a moves to
/// position perm[a]) to a tensor basis word; returns the Koszul sign.
int signed_permute(const std::vector<int>& perm, const std::vector<int>& word,
                   const SuperDim& d, std::vector<int>& out);

/// Rank of the central idempotent e_lambda on (k^{p|q})^(x)n divided by
/// dim V_lambda; equals the multiplicity of V_lambda, i.e. dim S_lambda.
/// Guard: (p+q)^n <= 4096, else throws "oracle size limit".
Int isotypic_projector_rank(const Partition& lambda, const SuperDim& d);

}  // namespace tc
