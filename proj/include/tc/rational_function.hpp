#pragma once

/**
 * @file rational_function.hpp
 * @brief The field Q(t): reduced quotients of polynomials.
 *
 * Canonical form: denominator monic, gcd(num, den) = 1, zero is 0/1.
 *
 * Text format (printed and parsed): integer coefficients where possible,
 * e.g. "3*t^2 - 1"; proper quotients as "(num)/(den)".  The parser accepts
 * the full expression grammar over + - * / ^ ( ) t and integer literals.
 */

#include <iosfwd>
#include <string>

#include "tc/polynomial.hpp"

namespace tc {

class RationalFunction {
  public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    RationalFunction(long c) : num_(Rational(c)), den_(1) {}   // NOLINT
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction t() { return RationalFunction(Polynomial::t()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    /// The numerator, provided den = 1.
    const Polynomial& as_polynomial() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction reciprocal() const;

    /// Exact evaluation; throws "pole" if the denominator vanishes at x.
    Rational eval_at(const Rational& x) const;

    std::string to_string() const;
    static RationalFunction parse(const std::string& text);

  private:
    void normalize();
    Polynomial num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace tc
