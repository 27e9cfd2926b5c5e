#include "doctest.h"
#include "tc/key_lemma.hpp"
#include "tc/tensor_action.hpp"

using namespace tc;

TEST_SUITE("key-lemma") {

TEST_CASE("sym_dim closed form vs basis enumeration") {
    CHECK(sym_dim(SuperDim{0, 1}, 0) == 1);
    CHECK(sym_dim(SuperDim{0, 1}, 1) == 1);
    CHECK(sym_dim(SuperDim{0, 1}, 2) == 0);
    for (int n = 0; n <= 8; ++n) CHECK(sym_dim(SuperDim{1, 0}, n) == 1);
    for (int n = 1; n <= 8; ++n) CHECK(sym_dim(SuperDim{1, 1}, n) == 2);
    CHECK(sym_dim(SuperDim{0, 2}, 2) == 1);
    CHECK(sym_dim(SuperDim{0, 2}, 3) == 0);
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q)
            for (int n = 0; n <= 6; ++n)
                CHECK(sym_dim(SuperDim{p, q}, n) == Int(sym_basis(SuperDim{p, q}, n).size()));
}

TEST_CASE("supersymmetric monomial multiplication signs") {
    SymMonomial f1, f2;
    f1.odd = 1u;  // f_0
    f2.odd = 2u;  // f_1
    auto fwd = mul_monomials(f1, f2);
    REQUIRE(fwd.has_value());
    CHECK(fwd->second == 1);
    auto bwd = mul_monomials(f2, f1);
    REQUIRE(bwd.has_value());
    CHECK(bwd->second == -1);
    CHECK(fwd->first == bwd->first);
    CHECK(!mul_monomials(f1, f1).has_value());
}

TEST_CASE("delta powers") {
    // One odd variable: delta squares to zero.
    CHECK(!delta_power(SuperDim{0, 1}, 1).is_zero());
    CHECK(delta_power(SuperDim{0, 1}, 2).is_zero());

    // One even variable: delta^n = n! x^n (x) x*^n, never zero.
    for (int n = 0; n <= 8; ++n) {
        PairedSymElement p = delta_power(SuperDim{1, 0}, n);
        REQUIRE(p.terms().size() == 1);
        CHECK(p.terms().begin()->second == Rational(factorial(static_cast<unsigned>(n))));
    }

    // 1|1: never nilpotent.
    for (int n = 0; n <= 8; ++n) CHECK(!delta_power(SuperDim{1, 1}, n).is_zero());

    // 0|2: delta^2 = -2 f1 f2 (x) f1* f2*, delta^3 = 0.
    PairedSymElement d2 = delta_power(SuperDim{0, 2}, 2);
    REQUIRE(d2.terms().size() == 1);
    CHECK(d2.terms().begin()->second == Rational(-2));
    CHECK(delta_power(SuperDim{0, 2}, 3).is_zero());

    CHECK_THROWS_WITH_AS(delta_power(SuperDim{2, 2}, 1), "size limit: requires p+q <= 3 and n <= 8",
                         std::domain_error);
    CHECK_THROWS_AS(delta_power(SuperDim{1, 1}, 9), std::domain_error);
}

TEST_CASE("delta nilpotency matches Sym vanishing") {
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q)
            for (int n = 0; n <= 6; ++n)
                CHECK(delta_power(SuperDim{p, q}, n).is_zero() == (sym_dim(SuperDim{p, q}, n) == 0));
}

TEST_CASE("coordinates in the documented basis") {
    // delta for 1|1 sits in bidegree (1,1) with both diagonal coordinates 1.
    PairedSymElement delta = PairedSymElement::coevaluation(SuperDim{1, 1});
    auto coords = delta.coordinates(1);
    REQUIRE(coords.size() == 4);
    int nonzero = 0;
    for (const auto& c : coords)
        if (!c.is_zero()) ++nonzero;
    CHECK(nonzero == 2);
    CHECK_THROWS_AS(delta.coordinates(2), std::invalid_argument);
}

TEST_CASE("geometric inverse") {
    GeometricInverse inv01 = geometric_inverse(SuperDim{0, 1});
    CHECK(inv01.nilpotent);
    CHECK(inv01.index == 2);
    REQUIRE(inv01.powers.size() == 2);  // 1 and delta
    CHECK(inv01.product_verified);

    GeometricInverse inv02 = geometric_inverse(SuperDim{0, 2});
    CHECK(inv02.nilpotent);
    CHECK(inv02.index == 3);
    CHECK(inv02.powers.size() == 3);
    CHECK(inv02.product_verified);

    GeometricInverse inv11 = geometric_inverse(SuperDim{1, 1});
    CHECK_FALSE(inv11.nilpotent);
    CHECK(inv11.index == 9);  // smallest unverified power past the guard
    CHECK(inv11.powers.empty());

    // Degenerate module: delta = 0, so 1 - delta is its own inverse.
    GeometricInverse inv00 = geometric_inverse(SuperDim{0, 0});
    CHECK(inv00.nilpotent);
    CHECK(inv00.index == 1);
    CHECK(inv00.product_verified);
}

TEST_CASE("graded equations") {
    GradedEquationsReport r01 = graded_equations_check(SuperDim{0, 1}, 6);
    CHECK(r01.powers_match);
    CHECK(r01.finite_solution);
    CHECK(r01.solution_length == 2);

    GradedEquationsReport r10 = graded_equations_check(SuperDim{1, 0}, 8);
    CHECK(r10.powers_match);
    CHECK_FALSE(r10.finite_solution);

    GradedEquationsReport r03 = graded_equations_check(SuperDim{0, 3}, 8);
    CHECK(r03.powers_match);
    CHECK(r03.finite_solution);
    CHECK(r03.solution_length == 4);  // Lambda^4 of a 3-dim space vanishes
}

TEST_CASE("sym_dim equals the symmetrizer projector rank") {
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q)
            for (int n = 1; n <= 4; ++n) {
                SuperDim d{p, q};
                if (d.total() == 0) continue;
                CHECK(sym_dim(d, n) == isotypic_projector_rank(Partition{n}, d));
            }
}

TEST_CASE("hook partition lemma") {
    CHECK(hook_partition_lemma(1, 1, 2));

    HookLemmaReport r7 = hook_partition_lemma_report(2, 3, 7);
    CHECK(r7.hypothesis_met);
    CHECK(r7.holds);
    CHECK(r7.counterexamples.empty());

    HookLemmaReport r6 = hook_partition_lemma_report(2, 3, 6);
    CHECK_FALSE(r6.hypothesis_met);
    CHECK_FALSE(r6.holds);
    REQUIRE(r6.counterexamples.size() == 1);  // only the full 2x3 box fits
    CHECK(r6.counterexamples[0] == Partition{3, 3});

    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            for (int k = m * n + 1; k <= m * n + 4; ++k) CHECK(hook_partition_lemma(m, n, k));
}

}  // TEST_SUITE
