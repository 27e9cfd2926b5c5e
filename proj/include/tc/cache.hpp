#pragma once

/**
 * @file cache.hpp
 * @brief On-disk LR coefficient cache: TSV records
 *        "lambda<TAB>mu<TAB>nu<TAB>coeff", sorted, written atomically.
 */

#include <string>

#include "tc/littlewood_richardson.hpp"

namespace tc {

/// Loads a cache file into memory; an absent file yields an empty cache.
/// Malformed or unsorted content raises invalid_argument naming the line.
LrCache load_cache_file(const std::string& path);

/// Merges records from disk into an existing cache.
void load_cache_file_into(LrCache& cache, const std::string& path);

/// Writes all records sorted by (|lambda|, lambda, mu, nu) in partition
/// text order; write-temp-then-rename so readers never see partial data.
void store_cache_file(const LrCache& cache, const std::string& path);

}  // namespace tc
