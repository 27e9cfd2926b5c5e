#pragma once

/**
 * @file brute_force.hpp
 * @brief Independent reference enumerations used only for cross-checks.
 *
 * Everything here recomputes a quantity by a route disjoint from the
 * production code path: direct tableau backtracking instead of hook
 * formulas, character inner products instead of lattice words.
 */

#include "tc/partition.hpp"

namespace tc::brute {

/// Standard Young tableaux of shape lambda, counted by backtracking.
Int syt_count(const Partition& lambda);

/// Semistandard tableaux of shape lambda with entries in 1..N,
/// counted by backtracking.
Int ssyt_count(const Partition& lambda, int N);

/// a^lambda_{mu,nu} via the character inner product
/// <chi^mu x chi^nu, Res chi^lambda> over S_{|mu|} x S_{|nu|}.
Int lr_by_characters(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace tc::brute
