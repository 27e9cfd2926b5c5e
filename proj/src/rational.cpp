#include "tc/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace tc {

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("zero divisor");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    v_ += rhs.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    v_ -= rhs.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    v_ *= rhs.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("zero divisor");
    v_ /= rhs.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("zero divisor");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

std::string Rational::to_string() const {
    return v_.get_str();
}

Rational Rational::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Int binomial(const Int& n, unsigned k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    Int b;
    mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), k);
    return b;
}

}  // namespace tc
