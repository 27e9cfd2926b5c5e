#pragma once

/**
 * @file diagram.hpp
 * @brief Brauer-type diagrams: basis morphisms of the interpolation
 *        categories built from bordisms of finite sets.
 *
 * A diagram between objects of sizes m (bottom) and n (top) is a perfect
 * matching on the m+n boundary points, indexed 0..m-1 (bottom, left to
 * right) then m..m+n-1 (top, left to right).  Oriented diagrams carry a
 * sign word on each boundary; a strand joining bottom to top connects
 * equal signs, a strand within one boundary connects opposite signs.
 *
 * Canonical form: each pair stored (min,max), pairs sorted by first
 * coordinate.  Validity is checked at construction.
 */

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tc/rational.hpp"

namespace tc {

enum class DiagKind : std::uint8_t { unoriented, oriented };

class DiagObject {
  public:
    DiagObject() : kind_(DiagKind::unoriented), size_(0) {}
    /// Unoriented object of the given size.
    explicit DiagObject(int size);
    /// Oriented object; signs entries are +1 / -1.
    explicit DiagObject(std::vector<int> signs);

    DiagKind kind() const { return kind_; }
    int size() const { return size_; }
    bool oriented() const { return kind_ == DiagKind::oriented; }
    /// Sign of boundary point i (+1/-1); unoriented objects report +1.
    int sign(int i) const;
    const std::vector<int>& signs() const { return signs_; }

    /// Sign word as text, e.g. "+-".
    std::string sign_word() const;
    static std::vector<int> parse_sign_word(const std::string& word);

    /// Juxtaposition (disjoint union).
    friend DiagObject operator+(const DiagObject& a, const DiagObject& b);

    friend bool operator==(const DiagObject& a, const DiagObject& b) {
        return a.kind_ == b.kind_ && a.size_ == b.size_ && a.signs_ == b.signs_;
    }
    friend bool operator!=(const DiagObject& a, const DiagObject& b) { return !(a == b); }
    friend bool operator<(const DiagObject& a, const DiagObject& b);

    std::string to_string() const;

  private:
    DiagKind kind_;
    int size_;
    std::vector<int> signs_;  // empty unless oriented
};

class Diagram {
  public:
    Diagram(DiagObject source, DiagObject target, std::vector<std::pair<int, int>> pairs);

    const DiagObject& source() const { return source_; }
    const DiagObject& target() const { return target_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    bool is_bottom(int point) const { return point < source_.size(); }

    /// Identity on x (requires nothing of the kind).
    static Diagram identity(const DiagObject& x);
    /// Bottom i joined to top g(i); g in one-line form on 0..n-1.
    static Diagram permutation(const DiagObject& x, const std::vector<int>& g);

    /// Reflection swapping source and target.
    Diagram flipped() const;

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.pairs_ == b.pairs_;
    }
    friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }
    friend bool operator<(const Diagram& a, const Diagram& b);

    std::string to_string() const;

  private:
    DiagObject source_, target_;
    std::vector<std::pair<int, int>> pairs_;
};

/// All diagrams from x to y in a fixed deterministic order; empty when
/// the total boundary size is odd.  Throws on kind mismatch.
std::vector<Diagram> hom_basis(const DiagObject& x, const DiagObject& y);

/// (2k-1)!! with (-1)!! = 1.
Int hom_count_unoriented(int boundary_points);

std::ostream& operator<<(std::ostream& os, const DiagObject& x);
std::ostream& operator<<(std::ostream& os, const Diagram& d);

}  // namespace tc
