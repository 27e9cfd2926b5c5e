#pragma once

/**
 * @file partition.hpp
 * @brief Integer partitions, Young-diagram combinatorics, hook lengths.
 *
 * Text format: comma-separated parts "3,2,1"; the empty partition is
 * written "0" (parse also accepts "").
 */

#include <iosfwd>
#include <string>
#include <vector>

#include "tc/rational.hpp"

namespace tc {

class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Number of boxes |lambda|.
    int size() const { return size_; }
    /// Number of rows.
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Row i, 0-indexed; 0 beyond the last row.
    int row(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    bool contains_box(int i, int j) const { return i >= 0 && j >= 0 && j < row(i); }
    /// Diagram containment mu <= lambda rowwise.
    bool contains(const Partition& mu) const;

    Partition conjugate() const;

    /// Hook length of box (i, j), 0-indexed.
    int hook(int i, int j) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    /// Lexicographic on the part vectors (a stable container ordering).
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string to_string() const;
    static Partition parse(const std::string& text);

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

/// Number of partitions of n.
Int partition_count(int n);

/// Dimension of the irreducible S_n representation V_lambda (hook length formula).
Int dim_irrep(const Partition& lambda);

/// Semistandard tableaux of shape lambda with entries in 1..N
/// (the stable hook content formula).
Int count_ssyt(const Partition& lambda, int N);

}  // namespace tc
