#include <random>

#include "doctest.h"
#include "tc/matrix.hpp"

using namespace tc;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return Rational(num(rng), den(rng));
}

Polynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> coeffs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : coeffs) c = random_rational(rng);
    return Polynomial(std::move(coeffs));
}

RationalFunction random_ratfun(std::mt19937_64& rng) {
    Polynomial den = random_polynomial(rng, 2);
    while (den.is_zero()) den = random_polynomial(rng, 2);
    return RationalFunction(random_polynomial(rng, 3), den);
}

const Polynomial t = Polynomial::t();

}  // namespace

TEST_SUITE("exact-arith") {

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).denominator() == 1);
    CHECK(Rational(3, 7).to_string() == "3/7");
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("rational ring axioms (randomized)") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("polynomial examples") {
    CHECK((t + Polynomial(1)) * (t - Polynomial(1)) == t * t - Polynomial(1));

    Polynomial t2m1 = t * t - Polynomial(1);
    CHECK(poly_gcd(t2m1, t - Polynomial(1)) == t - Polynomial(1));

    Polynomial t3 = t * t * t;
    auto [q, r] = divmod(t3, t - Polynomial(1));
    CHECK(q == t * t + t + Polynomial(1));
    CHECK(r == Polynomial(1));
    // The oracle: multiplying back recovers the dividend.
    CHECK(q * (t - Polynomial(1)) + r == t3);

    CHECK_THROWS_WITH_AS(divmod(t3, Polynomial()), "zero divisor", std::domain_error);
    CHECK(poly_gcd(t2m1, Polynomial()) == t2m1.monic());
}

TEST_CASE("polynomial ring axioms and divmod roundtrip (randomized)") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = random_polynomial(rng, 4);
        Polynomial b = random_polynomial(rng, 4);
        Polynomial c = random_polynomial(rng, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("gcd divides both arguments") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        Polynomial a = random_polynomial(rng, 4);
        Polynomial b = random_polynomial(rng, 4);
        Polynomial g = poly_gcd(a, b);
        if (g.is_zero()) {
            CHECK(a.is_zero());
            CHECK(b.is_zero());
            continue;
        }
        CHECK(divmod(a, g).second.is_zero());
        CHECK(divmod(b, g).second.is_zero());
        CHECK(g.leading() == Rational(1));
    }
}

TEST_CASE("rational function arithmetic") {
    RationalFunction one_over_tm1(Polynomial(1), t - Polynomial(1));
    RationalFunction one_over_tp1(Polynomial(1), t + Polynomial(1));
    RationalFunction sum = one_over_tm1 + one_over_tp1;
    CHECK(sum == RationalFunction(Polynomial(2) * t, t * t - Polynomial(1)));

    RationalFunction tf = RationalFunction::t();
    CHECK(tf * tf.reciprocal() == RationalFunction(1));

    // Reduction invariant: (t^2-1)/(t-1) normalizes to t+1.
    RationalFunction reduced(t * t - Polynomial(1), t - Polynomial(1));
    CHECK(reduced.is_polynomial());
    CHECK(reduced.as_polynomial() == t + Polynomial(1));

    CHECK_THROWS_AS(tf / RationalFunction(0), std::domain_error);
}

TEST_CASE("rational function field axioms (randomized)") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        RationalFunction a = random_ratfun(rng), b = random_ratfun(rng), c = random_ratfun(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        // Canonical form uniqueness: rebuilding from num/den is the identity.
        CHECK(RationalFunction(a.num(), a.den()) == a);
        CHECK(a.den().leading() == Rational(1));
    }
}

TEST_CASE("eval_at") {
    RationalFunction f(t * t + Polynomial(1), Polynomial(1));
    CHECK(f.eval_at(Rational(2)) == Rational(5));

    RationalFunction pole(Polynomial(1), t - Polynomial(1));
    CHECK_THROWS_AS(pole.eval_at(Rational(1)), std::domain_error);

    RationalFunction binom(t * (t - Polynomial(1)), Polynomial(2));
    CHECK(binom.eval_at(Rational(3)) == Rational(3));
}

TEST_CASE("scalar text format") {
    Polynomial p = Polynomial(3) * t * t - Polynomial(1);
    CHECK(p.to_string() == "3*t^2 - 1");
    CHECK(RationalFunction::parse("3*t^2 - 1") == RationalFunction(p));
    CHECK(RationalFunction::parse("(t-1)/(t)") == RationalFunction(t - Polynomial(1), t));
    CHECK(RationalFunction::parse("t^3").to_string() == "t^3");
    CHECK(RationalFunction(t * (t + Polynomial(1)), Polynomial(2)).to_string() == "(t^2 + t)/2");
    CHECK(RationalFunction::parse("2/4") == RationalFunction(Polynomial(Rational(1, 2))));
    CHECK_THROWS_AS(RationalFunction::parse("t +"), std::invalid_argument);
    CHECK_THROWS_AS(RationalFunction::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(RationalFunction::parse("1/(t-t)"), std::domain_error);
}

TEST_CASE("scalar text roundtrip (randomized)") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 80; ++i) {
        RationalFunction f = random_ratfun(rng);
        CHECK(RationalFunction::parse(f.to_string()) == f);
    }
}

TEST_CASE("rank, det, kernel over Q(t)") {
    Matrix<RationalFunction> id2 = Matrix<RationalFunction>::identity(2);
    auto r = rank_det_kernel(id2);
    CHECK(r.rank == 2);
    CHECK(*r.det == RationalFunction(1));
    CHECK(r.kernel.empty());

    Matrix<RationalFunction> m(2, 2);
    m(0, 0) = RationalFunction(t);
    m(0, 1) = RationalFunction(1);
    m(1, 0) = RationalFunction(t * t);
    m(1, 1) = RationalFunction(t);
    auto s = rank_det_kernel(m);
    CHECK(s.rank == 1);
    CHECK(s.det->is_zero());
    REQUIRE(s.kernel.size() == 1);
    for (std::size_t i = 0; i < 2; ++i) {
        RationalFunction acc(0);
        for (std::size_t j = 0; j < 2; ++j) acc += m(i, j) * s.kernel[0][j];
        CHECK(acc.is_zero());
    }

    Matrix<RationalFunction> gram1(1, 1);
    gram1(0, 0) = RationalFunction(t);
    CHECK(*rank_det_kernel(gram1).det == RationalFunction(t));
}

TEST_CASE("det eval commutes with entrywise eval (randomized)") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 25; ++round) {
        const std::size_t n = 3;
        Matrix<RationalFunction> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = RationalFunction(random_polynomial(rng, 2));
        auto sym = rank_det_kernel(m);
        Rational x(static_cast<long>(rng() % 19) - 9);
        Matrix<Rational> at(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) at(i, j) = m(i, j).eval_at(x);
        auto num = rank_det_kernel(at);
        CHECK(sym.det->eval_at(x) == *num.det);
        // Rank semicontinuity: specialization can only lose rank.
        CHECK(sym.rank >= num.rank);
    }
}

TEST_CASE("kernel vectors annihilate the matrix (randomized, rectangular)") {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 20; ++round) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::size_t rows = dim(rng), cols = dim(rng);
        Matrix<RationalFunction> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = RationalFunction(random_polynomial(rng, 1));
        auto r = rank_det_kernel(m);
        CHECK(static_cast<std::size_t>(r.rank) + r.kernel.size() == cols);
        for (const auto& v : r.kernel)
            for (std::size_t i = 0; i < rows; ++i) {
                RationalFunction acc(0);
                for (std::size_t j = 0; j < cols; ++j) acc += m(i, j) * v[j];
                CHECK(acc.is_zero());
            }
    }
}

TEST_CASE("rational matrix elimination") {
    Matrix<Rational> m(3, 3);
    // Singular integer matrix with known rank 2.
    int vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rational(vals[i][j]);
    auto r = rank_det_kernel(m);
    CHECK(r.rank == 2);
    CHECK(r.det->is_zero());
    REQUIRE(r.kernel.size() == 1);
    for (std::size_t i = 0; i < 3; ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < 3; ++j) acc += m(i, j) * r.kernel[0][j];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("rational roots") {
    // t^3(t-1)^2(t+2), the k = 2 Gram determinant shape.
    Polynomial p = t * t * t * (t - Polynomial(1)) * (t - Polynomial(1)) * (t + Polynomial(2));
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rational(-2));
    CHECK(roots[1] == Rational(0));
    CHECK(roots[2] == Rational(1));

    Polynomial halves = Polynomial(2) * t - Polynomial(1);  // root 1/2
    auto half = rational_roots(halves);
    REQUIRE(half.size() == 1);
    CHECK(half[0] == Rational(1, 2));

    CHECK(rational_roots(t * t + Polynomial(1)).empty());
}

}  // TEST_SUITE
