#pragma once

/**
 * @file super_sym_algebra.hpp
 * @brief The supersymmetric algebra Sym(k^{p|q}) and its tensor square
 *        with the dual, where coevaluation powers live.
 *
 * Sym of a super space is the polynomial algebra on the even generators
 * tensored with the exterior algebra on the odd ones.  Signs follow one
 * fixed convention: odd generators anticommute, and moving an odd factor
 * of the right tensor slot past an odd factor of the left slot costs -1.
 *
 * Monomial order: even exponent vectors lexicographically, then odd
 * subsets by binary value.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tc/rational.hpp"
#include "tc/super_dim.hpp"

namespace tc {

struct SymMonomial {
    std::vector<int> even;   // exponents of the p even generators
    std::uint32_t odd = 0;   // subset of the q odd generators

    int degree() const;
    int parity() const;  // number of odd factors mod 2

    friend bool operator==(const SymMonomial& a, const SymMonomial& b) {
        return a.even == b.even && a.odd == b.odd;
    }
    friend bool operator<(const SymMonomial& a, const SymMonomial& b) {
        if (a.even != b.even) return a.even < b.even;
        return a.odd < b.odd;
    }

    std::string to_string() const;
};

/// Product of monomials in Sym(k^{p|q}); nullopt when an odd generator
/// repeats, otherwise the result with its sign.
std::optional<std::pair<SymMonomial, int>> mul_monomials(const SymMonomial& a, const SymMonomial& b);

/// Monomial basis of Sym^n(k^{p|q}) in the documented order.
std::vector<SymMonomial> sym_basis(const SuperDim& d, int n);

/// dim Sym^n(k^{p|q}) = sum_{a+b=n} C(p-1+a, a) C(q, b).
Int sym_dim(const SuperDim& d, int n);

/// Element of Sym(M) (x) Sym(M^dual) with exact coefficients.
class PairedSymElement {
  public:
    using Term = std::pair<SymMonomial, SymMonomial>;

    explicit PairedSymElement(const SuperDim& d) : d_(d) {}

    static PairedSymElement unit(const SuperDim& d);
    /// The coevaluation element sum_i x_i (x) x_i^dual.
    static PairedSymElement coevaluation(const SuperDim& d);

    const SuperDim& dim() const { return d_; }
    const std::map<Term, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const SymMonomial& left, const SymMonomial& right, const Rational& c);

    PairedSymElement& operator+=(const PairedSymElement& rhs);
    PairedSymElement& operator-=(const PairedSymElement& rhs);
    friend PairedSymElement operator+(PairedSymElement a, const PairedSymElement& b) { return a += b; }
    friend PairedSymElement operator-(PairedSymElement a, const PairedSymElement& b) { return a -= b; }
    friend PairedSymElement operator*(const PairedSymElement& a, const PairedSymElement& b);

    friend bool operator==(const PairedSymElement& a, const PairedSymElement& b) {
        return a.d_ == b.d_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const PairedSymElement& a, const PairedSymElement& b) { return !(a == b); }

    /// Coordinates on sym_basis(d,n) x sym_basis(d,n); requires the
    /// element to be concentrated in bidegree (n, n).
    std::vector<Rational> coordinates(int n) const;

  private:
    SuperDim d_;
    std::map<Term, Rational> terms_;
};

}  // namespace tc
