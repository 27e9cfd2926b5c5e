#include "tc/super_sym_algebra.hpp"

#include <bit>
#include <stdexcept>

namespace tc {

int SymMonomial::degree() const {
    int d = std::popcount(odd);
    for (int e : even) d += e;
    return d;
}

int SymMonomial::parity() const {
    return std::popcount(odd) & 1;
}

std::string SymMonomial::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < even.size(); ++i) {
        if (even[i] == 0) continue;
        if (!s.empty()) s += '.';
        s += "x" + std::to_string(i);
        if (even[i] > 1) s += "^" + std::to_string(even[i]);
    }
    for (int j = 0; j < 32; ++j) {
        if (!(odd >> j & 1u)) continue;
        if (!s.empty()) s += '.';
        s += "f" + std::to_string(j);
    }
    return s.empty() ? "1" : s;
}

std::optional<std::pair<SymMonomial, int>> mul_monomials(const SymMonomial& a, const SymMonomial& b) {
    if (a.odd & b.odd) return std::nullopt;
    SymMonomial r;
    r.even.resize(std::max(a.even.size(), b.even.size()), 0);
    for (std::size_t i = 0; i < a.even.size(); ++i) r.even[i] += a.even[i];
    for (std::size_t i = 0; i < b.even.size(); ++i) r.even[i] += b.even[i];
    r.odd = a.odd | b.odd;
    // Interleaving sign: -1 for every pair (s in a, s' in b) with s > s'.
    int sign = 1;
    for (int s = 0; s < 32; ++s) {
        if (!(a.odd >> s & 1u)) continue;
        std::uint32_t smaller = b.odd & ((s == 0) ? 0u : ((1u << s) - 1u));
        if (std::popcount(smaller) & 1) sign = -sign;
    }
    return std::make_pair(std::move(r), sign);
}

namespace {

void enumerate_sym(const SuperDim& d, int n, int gen, SymMonomial& acc, std::vector<SymMonomial>& out) {
    if (gen == d.p) {
        // Distribute the remaining degree over odd generators (a subset).
        if (n > d.q) return;
        std::vector<std::uint32_t> masks;
        for (std::uint32_t mask = 0; mask < (1u << d.q); ++mask)
            if (std::popcount(mask) == n) masks.push_back(mask);
        for (std::uint32_t mask : masks) {
            acc.odd = mask;
            out.push_back(acc);
        }
        acc.odd = 0;
        return;
    }
    for (int e = 0; e <= n; ++e) {
        acc.even[static_cast<std::size_t>(gen)] = e;
        enumerate_sym(d, n - e, gen + 1, acc, out);
    }
    acc.even[static_cast<std::size_t>(gen)] = 0;
}

}  // namespace

std::vector<SymMonomial> sym_basis(const SuperDim& d, int n) {
    if (n < 0) throw std::invalid_argument("sym_basis: negative degree");
    std::vector<SymMonomial> out;
    SymMonomial acc;
    acc.even.assign(static_cast<std::size_t>(d.p), 0);
    enumerate_sym(d, n, 0, acc, out);
    return out;
}

Int sym_dim(const SuperDim& d, int n) {
    if (n < 0) return 0;
    Int total = 0;
    for (int b = 0; b <= std::min(n, d.q); ++b) {
        int a = n - b;
        Int even_part = d.p == 0 ? Int(a == 0 ? 1 : 0) : binomial(Int(d.p - 1 + a), static_cast<unsigned>(a));
        total += even_part * binomial(Int(d.q), static_cast<unsigned>(b));
    }
    return total;
}

PairedSymElement PairedSymElement::unit(const SuperDim& d) {
    PairedSymElement e(d);
    SymMonomial one;
    one.even.assign(static_cast<std::size_t>(d.p), 0);
    e.add_term(one, one, Rational(1));
    return e;
}

PairedSymElement PairedSymElement::coevaluation(const SuperDim& d) {
    PairedSymElement e(d);
    for (int i = 0; i < d.p; ++i) {
        SymMonomial x;
        x.even.assign(static_cast<std::size_t>(d.p), 0);
        x.even[static_cast<std::size_t>(i)] = 1;
        e.add_term(x, x, Rational(1));
    }
    for (int j = 0; j < d.q; ++j) {
        SymMonomial f;
        f.even.assign(static_cast<std::size_t>(d.p), 0);
        f.odd = 1u << j;
        e.add_term(f, f, Rational(1));
    }
    return e;
}

void PairedSymElement::add_term(const SymMonomial& left, const SymMonomial& right, const Rational& c) {
    if (c.is_zero()) return;
    Term key(left, right);
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PairedSymElement& PairedSymElement::operator+=(const PairedSymElement& rhs) {
    for (const auto& [term, c] : rhs.terms_) add_term(term.first, term.second, c);
    return *this;
}

PairedSymElement& PairedSymElement::operator-=(const PairedSymElement& rhs) {
    for (const auto& [term, c] : rhs.terms_) add_term(term.first, term.second, -c);
    return *this;
}

PairedSymElement operator*(const PairedSymElement& a, const PairedSymElement& b) {
    PairedSymElement out(a.d_);
    for (const auto& [ta, ca] : a.terms_) {
        for (const auto& [tb, cb] : b.terms_) {
            auto left = mul_monomials(ta.first, tb.first);
            if (!left) continue;
            auto right = mul_monomials(ta.second, tb.second);
            if (!right) continue;
            // Crossing sign: right factor of a moves past left factor of b.
            int sign = left->second * right->second;
            if (ta.second.parity() && tb.first.parity()) sign = -sign;
            Rational c = ca * cb;
            out.add_term(left->first, right->first, sign > 0 ? c : -c);
        }
    }
    return out;
}

std::vector<Rational> PairedSymElement::coordinates(int n) const {
    std::vector<SymMonomial> basis = sym_basis(d_, n);
    std::map<SymMonomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::vector<Rational> coords(basis.size() * basis.size(), Rational(0));
    for (const auto& [term, c] : terms_) {
        auto li = index.find(term.first);
        auto ri = index.find(term.second);
        if (li == index.end() || ri == index.end())
            throw std::invalid_argument("coordinates: element not concentrated in bidegree (n, n)");
        coords[li->second * basis.size() + ri->second] = c;
    }
    return coords;
}

}  // namespace tc
