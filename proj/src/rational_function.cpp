#include "tc/rational_function.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace tc {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero divisor");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    Rational lead_inv = den_.leading().reciprocal();
    if (lead_inv != Rational(1)) {
        num_ *= Polynomial(lead_inv);
        den_ *= Polynomial(lead_inv);
    }
}

const Polynomial& RationalFunction::as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("not a polynomial: " + to_string());
    return num_;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    num_ = num_ * rhs.num_;
    den_ = den_ * rhs.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    if (rhs.is_zero()) throw std::domain_error("zero divisor");
    num_ = num_ * rhs.den_;
    den_ = den_ * rhs.num_;
    normalize();
    return *this;
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw std::domain_error("zero divisor");
    return RationalFunction(den_, num_);
}

Rational RationalFunction::eval_at(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("pole at t = " + x.to_string());
    return num_.eval(x) / d;
}

std::string RationalFunction::to_string() const {
    if (is_zero()) return "0";
    // Scale num and den jointly so both have integer coefficients.
    auto [nu, np] = integer_normalized(num_);
    auto [du, dp] = integer_normalized(den_);
    Rational ratio = nu / du;  // value = ratio * np / dp
    Polynomial pnum = np * Polynomial(Rational(ratio.numerator()));
    Polynomial pden = dp * Polynomial(Rational(ratio.denominator()));
    if (pden.is_one()) return pnum.to_string();
    std::string n = pnum.to_string();
    std::string d = pden.to_string();
    std::string out = "(" + n + ")/";
    bool den_atomic = pden.degree() == 0 || (pden.degree() == 1 && d == "t");
    out += den_atomic ? d : "(" + d + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.to_string();
}

namespace {

// Recursive-descent parser for the scalar grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-'* atom ('^' uint)?
//   atom   := uint | 't' | '(' expr ')'
class ScalarParser {
  public:
    explicit ScalarParser(const std::string& text) : s_(text) {}

    RationalFunction parse() {
        RationalFunction v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected token");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& what) {
        std::string tok = pos_ < s_.size() ? std::string(1, s_[pos_]) : "<end>";
        throw std::invalid_argument("scalar parse error: " + what + " '" + tok + "' at position " +
                                    std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        RationalFunction v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    RationalFunction term() {
        RationalFunction v = factor();
        for (;;) {
            if (accept('*')) {
                v *= factor();
            } else if (accept('/')) {
                RationalFunction d = factor();
                if (d.is_zero()) throw std::domain_error("zero divisor");
                v /= d;
            } else {
                return v;
            }
        }
    }

    RationalFunction factor() {
        bool neg = false;
        while (accept('-')) neg = !neg;
        RationalFunction v = atom();
        skip_ws();
        if (accept('^')) {
            unsigned long e = read_uint();
            RationalFunction p(1);
            for (unsigned long i = 0; i < e; ++i) p *= v;
            v = p;
        }
        return neg ? -v : v;
    }

    RationalFunction atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 't') {
            ++pos_;
            return RationalFunction::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(Rational(Int(read_digits())));
        fail("expected number, 't' or '('");
    }

    unsigned long read_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
        return std::stoul(read_digits());
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction RationalFunction::parse(const std::string& text) {
    return ScalarParser(text).parse();
}

}  // namespace tc
