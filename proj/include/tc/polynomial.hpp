#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials in t over the rationals.
 *
 * Canonical form: no trailing zero coefficient; the empty coefficient
 * vector is the zero polynomial. degree() of zero is -1.
 */

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tc/rational.hpp"

namespace tc {

class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT: constant polynomial
    Polynomial(long c) : Polynomial(Rational(c)) {}
    explicit Polynomial(std::vector<Rational> coeffs);

    /// The monomial c * t^k.
    static Polynomial monomial(const Rational& c, unsigned k);
    /// The indeterminate t.
    static Polynomial t() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == Rational(1); }

    /// Coefficient of t^i (zero beyond the degree).
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Rational eval(const Rational& x) const;

    /// Scale so the leading coefficient is 1.  Error on zero.
    Polynomial monic() const;

    std::string to_string() const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder; exact field division of coefficients.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Exact quotient; throws if the division leaves a remainder.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(a, 0) is the monic normalization of a, gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Write p = (u/v) * primitive(p) with primitive(p) integer,
/// content-free, positive leading coefficient.  Returns {u/v, primitive}.
std::pair<Rational, Polynomial> integer_normalized(const Polynomial& p);

/// All rational roots of p (each listed once), sorted ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace tc
