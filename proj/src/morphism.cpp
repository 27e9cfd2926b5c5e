#include "tc/morphism.hpp"

#include <numeric>
#include <stdexcept>

namespace tc {

namespace {

// Union-find over the stacked boundary points of a two-layer composite.
class DisjointSet {
  public:
    explicit DisjointSet(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  private:
    std::vector<std::size_t> parent_;
};

struct StackedResult {
    std::vector<std::pair<int, int>> pairs;
    int loops = 0;
};

// Stacks diagram f (X -> Y) under diagram g (Y -> Z): nodes are
// X (0..m-1), the glued middle Y (m..m+k-1), Z (m+k..m+k+n-1).
StackedResult stack(const Diagram& g, const Diagram& f) {
    const int m = f.source().size();
    const int k = f.target().size();
    const int n = g.target().size();
    DisjointSet dsu(static_cast<std::size_t>(m + k + n));
    for (const auto& [a, b] : f.pairs()) dsu.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    for (const auto& [a, b] : g.pairs()) {
        auto lift = [&](int p) { return static_cast<std::size_t>(p + m); };
        dsu.unite(lift(a), lift(b));
    }

    // Each component holds exactly two outer points (a path) or none (a loop).
    std::map<std::size_t, std::vector<int>> endpoints;
    auto outer_index = [&](int node) { return node < m ? node : m + (node - m - k); };
    for (int node = 0; node < m + k + n; ++node) {
        if (node >= m && node < m + k) continue;
        endpoints[dsu.find(static_cast<std::size_t>(node))].push_back(outer_index(node));
    }

    StackedResult out;
    for (const auto& [root, pts] : endpoints) {
        if (pts.size() != 2) throw std::logic_error("stacked component without two endpoints");
        out.pairs.emplace_back(pts[0], pts[1]);
    }
    // Components made purely of middle points are closed circles.
    std::map<std::size_t, bool> middle_only;
    for (int node = 0; node < m + k + n; ++node) {
        std::size_t root = dsu.find(static_cast<std::size_t>(node));
        bool outer = node < m || node >= m + k;
        auto it = middle_only.find(root);
        if (it == middle_only.end())
            middle_only[root] = !outer;
        else if (outer)
            it->second = false;
    }
    for (const auto& [root, pure] : middle_only)
        if (pure) ++out.loops;
    return out;
}

}  // namespace

Morphism::Morphism(const Diagram& d) : source_(d.source()), target_(d.target()) {
    terms_.emplace(d, RationalFunction(1));
}

void Morphism::add_term(const Diagram& d, const RationalFunction& c) {
    if (d.source() != source_ || d.target() != target_)
        throw std::invalid_argument("term boundary mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Morphism Morphism::operator-() const {
    Morphism r(source_, target_);
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
}

Morphism& Morphism::operator+=(const Morphism& rhs) {
    if (source_ != rhs.source_ || target_ != rhs.target_)
        throw std::domain_error("morphism sum boundary mismatch");
    for (const auto& [d, c] : rhs.terms_) add_term(d, c);
    return *this;
}

Morphism& Morphism::operator-=(const Morphism& rhs) {
    if (source_ != rhs.source_ || target_ != rhs.target_)
        throw std::domain_error("morphism sum boundary mismatch");
    for (const auto& [d, c] : rhs.terms_) add_term(d, -c);
    return *this;
}

Morphism operator*(const RationalFunction& c, const Morphism& m) {
    Morphism r(m.source_, m.target_);
    if (c.is_zero()) return r;
    for (const auto& [d, coeff] : m.terms_) r.terms_.emplace(d, c * coeff);
    return r;
}

Morphism Morphism::flipped() const {
    Morphism r(target_, source_);
    for (const auto& [d, c] : terms_) r.add_term(d.flipped(), c);
    return r;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (f.target() != g.source()) throw std::domain_error("compose boundary mismatch");
    Morphism out(f.source(), g.target());
    const RationalFunction t = RationalFunction::t();
    for (const auto& [df, cf] : f.terms()) {
        for (const auto& [dg, cg] : g.terms()) {
            StackedResult s = stack(dg, df);
            RationalFunction coeff = cf * cg;
            for (int i = 0; i < s.loops; ++i) coeff *= t;
            out.add_term(Diagram(f.source(), g.target(), s.pairs), coeff);
        }
    }
    return out;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
    if (f.source().kind() != g.source().kind()) throw std::domain_error("kind mismatch");
    const DiagObject src = f.source() + g.source();
    const DiagObject tgt = f.target() + g.target();
    const int mf = f.source().size(), nf = f.target().size();
    const int mg = g.source().size();
    const int m = mf + mg;
    Morphism out(src, tgt);
    for (const auto& [df, cf] : f.terms()) {
        for (const auto& [dg, cg] : g.terms()) {
            std::vector<std::pair<int, int>> pairs;
            pairs.reserve(df.pairs().size() + dg.pairs().size());
            auto place_f = [&](int p) { return p < mf ? p : m + (p - mf); };
            auto place_g = [&](int p) { return p < mg ? mf + p : m + nf + (p - mg); };
            for (const auto& [a, b] : df.pairs()) pairs.emplace_back(place_f(a), place_f(b));
            for (const auto& [a, b] : dg.pairs()) pairs.emplace_back(place_g(a), place_g(b));
            out.add_term(Diagram(src, tgt, std::move(pairs)), cf * cg);
        }
    }
    return out;
}

RationalFunction closure_trace(const Morphism& f) {
    if (!f.is_endomorphism()) throw std::domain_error("closure_trace requires an endomorphism");
    const int n = f.source().size();
    const RationalFunction t = RationalFunction::t();
    RationalFunction total(0);
    for (const auto& [d, c] : f.terms()) {
        DisjointSet dsu(static_cast<std::size_t>(2 * n));
        for (const auto& [a, b] : d.pairs()) dsu.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        for (int i = 0; i < n; ++i) dsu.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(n + i));
        std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
        RationalFunction term = c;
        for (int i = 0; i < 2 * n; ++i) {
            std::size_t root = dsu.find(static_cast<std::size_t>(i));
            if (!seen[root]) {
                seen[root] = true;
                term *= t;
            }
        }
        total += term;
    }
    return total;
}

IdempotentCheck idempotent_check(const Morphism& e) {
    if (!e.is_endomorphism()) throw std::domain_error("idempotent_check requires an endomorphism");
    IdempotentCheck out;
    out.is_zero = e.is_zero();
    out.is_idempotent = compose(e, e) == e;
    return out;
}

}  // namespace tc
