#pragma once

/**
 * @file super_dim.hpp
 * @brief Dimension pairs p|q of super vector spaces.
 */

#include <iosfwd>
#include <string>

namespace tc {

struct SuperDim {
    int p = 0;  // even dimension
    int q = 0;  // odd dimension

    int total() const { return p + q; }

    friend SuperDim operator+(const SuperDim& a, const SuperDim& b) { return {a.p + b.p, a.q + b.q}; }
    /// (p1,q1) (x) (p2,q2) = (p1 p2 + q1 q2, p1 q2 + q1 p2).
    friend SuperDim operator*(const SuperDim& a, const SuperDim& b) {
        return {a.p * b.p + a.q * b.q, a.p * b.q + a.q * b.p};
    }
    friend bool operator==(const SuperDim& a, const SuperDim& b) { return a.p == b.p && a.q == b.q; }

    std::string to_string() const { return std::to_string(p) + "," + std::to_string(q); }
    /// Parses "p,q" with nonnegative components.
    static SuperDim parse(const std::string& text);
};

std::ostream& operator<<(std::ostream& os, const SuperDim& d);

}  // namespace tc
