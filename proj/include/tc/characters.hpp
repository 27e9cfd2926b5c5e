#pragma once

/**
 * @file characters.hpp
 * @brief Symmetric group characters via the Murnaghan-Nakayama rule.
 */

#include <algorithm>
#include <vector>

#include "tc/partition.hpp"

namespace tc {

/// chi^lambda evaluated on the conjugacy class of the given cycle type.
/// Memoized on (lambda, cycle_type); throws on |lambda| != |cycle_type|.
Int character(const Partition& lambda, const Partition& cycle_type);

/// Order of the centralizer of a permutation of the given cycle type:
/// prod_i i^{m_i} m_i!.
Int centralizer_order(const Partition& cycle_type);

/// Cycle type of a permutation given in one-line form (images of 0..n-1).
Partition cycle_type(const std::vector<int>& perm);

/// Number of cycles of a permutation in one-line form.
int cycle_count(const std::vector<int>& perm);

/// Visits every permutation of {0..n-1} in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& visit) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    do {
        visit(static_cast<const std::vector<int>&>(p));
    } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace tc
