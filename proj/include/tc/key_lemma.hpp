#pragma once

/**
 * @file key_lemma.hpp
 * @brief Nilpotency of the coevaluation element delta in the
 *        supersymmetric algebra, the geometric inverse of 1 - delta,
 *        and the hook-partition escape lemma.
 */

#include <vector>

#include "tc/partition.hpp"
#include "tc/super_sym_algebra.hpp"

namespace tc {

/// delta^n inside Sym(M) (x) Sym(M^dual), bidegree (n, n).
/// Guard: p+q <= 3 and n <= 8.
PairedSymElement delta_power(const SuperDim& d, int n);

struct GeometricInverse {
    bool nilpotent = false;
    /// Smallest n with delta^n = 0 when nilpotent; otherwise the smallest
    /// power left unverified (guard + 1).
    int index = 0;
    /// The partial sums' components 1, delta, ..., delta^{index-1}.
    std::vector<PairedSymElement> powers;
    /// Exact check that (1 - delta) * sum equals the unit.
    bool product_verified = false;
};

GeometricInverse geometric_inverse(const SuperDim& d, int guard = 8);

struct GradedEquationsReport {
    int n_max = 0;
    /// x_{p,p} solved from the triangular system equals delta^p for all p.
    bool powers_match = false;
    bool finite_solution = false;
    /// Length of the solution when finite (index of the first zero power).
    int solution_length = 0;
};

GradedEquationsReport graded_equations_check(const SuperDim& d, int n_max);

struct HookLemmaReport {
    int m = 0, n = 0, k = 0;
    bool hypothesis_met = false;  // k > m*n
    bool holds = false;           // every partition of k escapes the m x n box
    std::vector<Partition> counterexamples;  // partitions fitting the box
};

HookLemmaReport hook_partition_lemma_report(int m, int n, int k);

/// True iff every partition of k has a row longer than n or a column
/// longer than m (exhaustive check).
bool hook_partition_lemma(int m, int n, int k);

}  // namespace tc
