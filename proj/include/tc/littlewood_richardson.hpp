#pragma once

/**
 * @file littlewood_richardson.hpp
 * @brief Littlewood-Richardson coefficients by lattice-word enumeration,
 *        with an in-memory memo that can be persisted (see cache.hpp).
 */

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "tc/partition.hpp"

namespace tc {

/// a^lambda_{mu,nu}: number of LR skew tableaux of shape lambda/mu and
/// weight nu.  Direct enumeration, no caching.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Memoized LR coefficients.  Thread safe; results are identical to
/// lr_coefficient whether or not entries were preloaded.
class LrCache {
  public:
    using Key = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

    LrCache() = default;
    LrCache(LrCache&& other) noexcept;
    LrCache& operator=(LrCache&&) = delete;
    LrCache(const LrCache&) = delete;
    LrCache& operator=(const LrCache&) = delete;

    Int coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

    /// Preload one record (used by the disk cache loader).
    void insert(const Partition& lambda, const Partition& mu, const Partition& nu, const Int& coeff);

    /// Copy of all records, keyed by (lambda, mu, nu) with mu <= nu.
    std::map<Key, Int> snapshot() const;

    /// True once coefficient() has computed something not yet persisted.
    bool dirty() const;
    void mark_clean();

  private:
    static Key make_key(const Partition& lambda, const Partition& mu, const Partition& nu);

    mutable std::mutex mutex_;
    std::map<Key, Int> memo_;
    bool dirty_ = false;
};

}  // namespace tc
