#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic over arbitrary-precision integers.
 *
 * Invariants enforced at construction:
 * - gcd(|numerator|, denominator) = 1
 * - denominator >= 1 (sign lives in the numerator)
 * - zero is 0/1
 *
 * Equality is therefore structural.
 */

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace tc {

/// Arbitrary-precision integer.
using Int = mpz_class;

class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);
    Rational(long num, long den);

    const Int& numerator() const { return v_.get_num(); }
    const Int& denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational reciprocal() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "3", "-5/7".  Inverse of parse().
    std::string to_string() const;

    /// Accepts optional leading '-', integer, optional "/positive-integer".
    static Rational parse(const std::string& text);

  private:
    mpq_class v_;  // canonical: mpq_class kept canonicalized
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Int factorial(unsigned n);
Int binomial(const Int& n, unsigned k);

}  // namespace tc
