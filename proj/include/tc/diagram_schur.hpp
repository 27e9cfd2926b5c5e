#pragma once

/**
 * @file diagram_schur.hpp
 * @brief Schur-functor data inside the diagram categories: isotypic
 *        idempotents on n strands, categorical dimensions, Gram forms.
 */

#include "tc/matrix.hpp"
#include "tc/morphism.hpp"
#include "tc/partition.hpp"

namespace tc {

/// The n-strand object: unoriented of size n, or oriented all-plus.
DiagObject strand_object(int n, DiagKind kind);

/// e_lambda = (dim V_lambda / n!) sum_g chi^lambda(g) [g] in End(n strands).
/// Guard: |lambda| <= 6.
Morphism isotypic_idempotent(const Partition& lambda, DiagKind kind);

/// Closure of e_lambda: the categorical dimension of the lambda image,
/// (dim V_lambda / n!) sum_g chi^lambda(g) t^{cycles(g)}.
RationalFunction symmetrizer_closure_dim(const Partition& lambda, DiagKind kind);

/// dim V_lambda * prod_{(i,j)} (t + j - i) / h(i,j): the independent
/// hook-content route to the same dimension.
RationalFunction content_polynomial_dim(const Partition& lambda);

struct GramForm {
    Matrix<RationalFunction> matrix;   // pairing of the Hom(0, 2k) basis
    RationalFunction determinant;
    std::vector<Rational> rational_roots;  // degenerate parameter values
};

/// Gram form of Hom(0, 2k) in the unoriented category, G_ab =
/// scalar of flip(b) o a.  Guard: k <= 3.
GramForm gram_determinant(int k);

}  // namespace tc
