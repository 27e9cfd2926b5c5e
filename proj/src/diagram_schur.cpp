#include "tc/diagram_schur.hpp"

#include <stdexcept>

#include "tc/characters.hpp"

namespace tc {

DiagObject strand_object(int n, DiagKind kind) {
    if (kind == DiagKind::unoriented) return DiagObject(n);
    return DiagObject(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Morphism isotypic_idempotent(const Partition& lambda, DiagKind kind) {
    const int n = lambda.size();
    if (n > 6) throw std::domain_error("size limit: |lambda| > 6");
    const DiagObject x = strand_object(n, kind);
    const RationalFunction scale(Polynomial(Rational(dim_irrep(lambda), factorial(static_cast<unsigned>(n)))));
    Morphism e = Morphism::zero(x, x);
    for_each_permutation(n, [&](const std::vector<int>& g) {
        RationalFunction chi{Polynomial(Rational(character(lambda, cycle_type(g))))};
        if (chi.is_zero()) return;
        e.add_term(Diagram::permutation(x, g), scale * chi);
    });
    return e;
}

RationalFunction symmetrizer_closure_dim(const Partition& lambda, DiagKind kind) {
    return closure_trace(isotypic_idempotent(lambda, kind));
}

RationalFunction content_polynomial_dim(const Partition& lambda) {
    Polynomial prod{Rational(1)};
    Int hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.row(i); ++j) {
            prod *= Polynomial(std::vector<Rational>{Rational(j - i), Rational(1)});
            hooks *= lambda.hook(i, j);
        }
    return RationalFunction(Polynomial(Rational(dim_irrep(lambda), hooks))) * RationalFunction(prod);
}

GramForm gram_determinant(int k) {
    if (k < 1 || k > 3) throw std::domain_error("size limit: gram_determinant requires 1 <= k <= 3");
    const DiagObject empty(0);
    const DiagObject boundary(2 * k);
    std::vector<Diagram> basis = hom_basis(empty, boundary);
    const std::size_t s = basis.size();

    GramForm out;
    out.matrix = Matrix<RationalFunction>(s, s);
    for (std::size_t a = 0; a < s; ++a) {
        Morphism ma(basis[a]);
        for (std::size_t b = 0; b < s; ++b) {
            Morphism pairing = compose(Morphism(basis[b]).flipped(), ma);
            // An element of End(0): the coefficient of the empty diagram.
            RationalFunction scalar(0);
            if (!pairing.is_zero()) scalar = pairing.terms().begin()->second;
            out.matrix(a, b) = scalar;
        }
    }
    auto result = rank_det_kernel(out.matrix);
    out.determinant = *result.det;
    if (!out.determinant.is_zero())
        out.rational_roots = rational_roots(out.determinant.as_polynomial());
    return out;
}

}  // namespace tc
