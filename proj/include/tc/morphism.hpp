#pragma once

/**
 * @file morphism.hpp
 * @brief Q(t)-linear combinations of diagrams and the bordism calculus:
 *        composition with the circle relation, tensor product, traces.
 */

#include <map>

#include "tc/diagram.hpp"
#include "tc/rational_function.hpp"

namespace tc {

class Morphism {
  public:
    Morphism(DiagObject source, DiagObject target)
        : source_(std::move(source)), target_(std::move(target)) {}
    /// Single diagram with coefficient 1.
    explicit Morphism(const Diagram& d);

    const DiagObject& source() const { return source_; }
    const DiagObject& target() const { return target_; }
    const std::map<Diagram, RationalFunction>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_endomorphism() const { return source_ == target_; }

    /// Adds c * d; drops the term if the total coefficient cancels.
    void add_term(const Diagram& d, const RationalFunction& c);

    static Morphism zero(const DiagObject& x, const DiagObject& y) { return Morphism(x, y); }
    static Morphism identity(const DiagObject& x) { return Morphism(Diagram::identity(x)); }

    Morphism operator-() const;
    Morphism& operator+=(const Morphism& rhs);
    Morphism& operator-=(const Morphism& rhs);
    friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
    friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
    friend Morphism operator*(const RationalFunction& c, const Morphism& m);

    friend bool operator==(const Morphism& a, const Morphism& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }

    /// Reflection (transpose); flips every diagram.
    Morphism flipped() const;

  private:
    DiagObject source_, target_;
    std::map<Diagram, RationalFunction> terms_;
};

/// g after f.  Diagram stacking; every closed loop contributes a factor t.
Morphism compose(const Morphism& g, const Morphism& f);

/// Horizontal juxtaposition.
Morphism tensor(const Morphism& f, const Morphism& g);

/// Closes every strand of an endomorphism on the right; the result is the
/// scalar coefficient of the empty diagram, each term weighted t^#loops.
RationalFunction closure_trace(const Morphism& f);

struct IdempotentCheck {
    bool is_idempotent = false;
    bool is_zero = false;
};

IdempotentCheck idempotent_check(const Morphism& e);

}  // namespace tc
