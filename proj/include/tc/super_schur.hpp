#pragma once

/**
 * @file super_schur.hpp
 * @brief Schur functors evaluated on super vector spaces.
 *
 * The working identity: S_lambda(k^{p|0} + k^{0|q}) splits as a direct
 * sum over (mu, nu) with LR multiplicities, where the even summand
 * contributes ordinary Schur dimensions and the odd summand contributes
 * exterior ones (conjugate shape).
 */

#include <vector>

#include "tc/littlewood_richardson.hpp"
#include "tc/partition.hpp"
#include "tc/super_dim.hpp"

namespace tc {

/// Hook criterion: true iff some row index i > p has lambda_i > q,
/// i.e. the diagram escapes the (p,q) fat hook.
bool vanishes(const Partition& lambda, const SuperDim& d);

/// Ungraded dimension of S_lambda(k^{p|q}):
/// sum over mu, nu of a^lambda_{mu,nu} * ssyt(mu, p) * ssyt(nu', q).
Int schur_dim(const Partition& lambda, const SuperDim& d, LrCache& lr);

struct DecompositionRow {
    Partition lambda;
    Int multiplicity;  // dim V_lambda
    Int dim;           // schur_dim(lambda, d)
};

/// Nonvanishing rows of X^(x)n = (+)_lambda V_lambda (x) S_lambda(X),
/// in reverse-lexicographic lambda order.
std::vector<DecompositionRow> tensor_power_decomposition(const SuperDim& d, int n, LrCache& lr);

struct LengthGrowthRow {
    int n;
    Int length;          // length of X^(x)n in sVec = (p+q)^n
    Int bound;           // N^n with N = p+q
    Int admissible_sum;  // sum of dim V_lambda over nonvanishing lambda
};

/// Table of both length inequalities for n = 1..n_max.
std::vector<LengthGrowthRow> length_growth_report(const SuperDim& d, int n_max);

}  // namespace tc
