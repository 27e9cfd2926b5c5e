#include "tc/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace tc {

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::monomial(const Rational& c, unsigned k) {
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(std::size_t i) const {
    static const Rational zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(prod));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    Polynomial r(*this);
    Rational inv = leading().reciprocal();
    for (auto& c : r.coeffs_) c = c * inv;
    return r;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("zero divisor");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot(a.degree() - b.degree() + 1, Rational(0));
    const Rational lead_inv = b.leading().reciprocal();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational q = rem[k + b.degree()] * lead_inv;
        if (q.is_zero()) continue;
        quot[k] = q;
        for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b.coeff(j);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

std::pair<Rational, Polynomial> integer_normalized(const Polynomial& p) {
    if (p.is_zero()) return {Rational(1), Polynomial()};
    Int den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        Int l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        den_lcm = l;
    }
    Int content = 0;
    for (const auto& c : p.coeffs()) {
        Int scaled = c.numerator() * (den_lcm / c.denominator());
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
        content = g;
    }
    if (p.leading().sign() < 0) content = -content;
    std::vector<Rational> prim;
    prim.reserve(p.coeffs().size());
    Rational scale(den_lcm, content);
    for (const auto& c : p.coeffs()) prim.push_back(c * scale);
    return {Rational(content, den_lcm), Polynomial(std::move(prim))};
}

namespace {

// Full factorization by trial division; fine for desk-scale constants.
std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Int, unsigned>> factors;
    for (Int p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : factors) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots of zero polynomial");
    std::vector<Rational> roots;
    // Strip the t^k factor first.
    std::size_t low = 0;
    while (low < p.coeffs().size() && p.coeffs()[low].is_zero()) ++low;
    if (low > 0) roots.push_back(Rational(0));
    std::vector<Rational> shifted(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end());
    Polynomial q(std::move(shifted));
    if (q.degree() >= 1) {
        Polynomial zq = integer_normalized(q).second;
        Int c0 = zq.coeff(0).numerator();
        Int cl = zq.leading().numerator();
        for (const Int& num : positive_divisors(c0)) {
            for (const Int& den : positive_divisors(cl)) {
                Rational cand(num, den);
                if (zq.eval(cand).is_zero()) roots.push_back(cand);
                if (zq.eval(-cand).is_zero()) roots.push_back(-cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const bool first = out.empty();
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += a.to_string();
        } else {
            if (a != Rational(1)) out += a.to_string() + "*";
            out += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
}

}  // namespace tc
