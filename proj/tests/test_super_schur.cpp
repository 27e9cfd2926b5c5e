#include <random>

#include "doctest.h"
#include "tc/super_schur.hpp"
#include "tc/tensor_action.hpp"

#include "tc/characters.hpp"

using namespace tc;

namespace {

Int int_pow(int b, int e) {
    Int v = 1;
    for (int i = 0; i < e; ++i) v *= b;
    return v;
}

}  // namespace

TEST_SUITE("super-schur") {

TEST_CASE("super dimension rules") {
    SuperDim a{1, 2}, b{2, 1};
    CHECK(a + b == SuperDim{3, 3});
    CHECK(a * b == SuperDim{1 * 2 + 2 * 1, 1 * 1 + 2 * 2});
    CHECK(SuperDim::parse("1,2") == a);
    CHECK_THROWS_AS(SuperDim::parse("1"), std::invalid_argument);
    CHECK_THROWS_AS(SuperDim::parse("1,-2"), std::invalid_argument);
}

TEST_CASE("hook criterion") {
    // Exterior power beyond the even dimension.
    for (int p = 0; p <= 3; ++p) {
        std::vector<int> column(static_cast<std::size_t>(p) + 1, 1);
        CHECK(vanishes(Partition(column), SuperDim{p, 0}));
    }
    // Boundary rectangle (q+1)^(p+1) just escapes the fat hook.
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) {
            std::vector<int> rect(static_cast<std::size_t>(p) + 1, q + 1);
            CHECK(vanishes(Partition(rect), SuperDim{p, q}));
        }
    // Anything within the first p rows survives.
    for (const Partition& l : partitions_of(5))
        if (l.length() <= 2) CHECK_FALSE(vanishes(l, SuperDim{2, 0}));
    CHECK_FALSE(vanishes(Partition{3, 3, 1, 1}, SuperDim{2, 1}));
    CHECK(vanishes(Partition{3, 3, 2}, SuperDim{2, 1}));
}

TEST_CASE("schur_dim basics") {
    LrCache lr;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            CHECK(schur_dim(Partition{1}, SuperDim{p, q}, lr) == p + q);
    CHECK(schur_dim(Partition{2, 2}, SuperDim{1, 1}, lr) == 0);
    CHECK(schur_dim(Partition{2, 1}, SuperDim{1, 1}, lr) == 2);
    // Purely even: the classical Schur polynomial specialization.
    for (const Partition& l : partitions_of(4))
        for (int p = 0; p <= 3; ++p)
            CHECK(schur_dim(l, SuperDim{p, 0}, lr) == count_ssyt(l, p));
    // Purely odd: the conjugate shape.
    for (const Partition& l : partitions_of(4))
        for (int q = 0; q <= 3; ++q)
            CHECK(schur_dim(l, SuperDim{0, q}, lr) == count_ssyt(l.conjugate(), q));
}

TEST_CASE("projector rank oracle on tiny spaces") {
    CHECK(isotypic_projector_rank(Partition{2}, SuperDim{1, 0}) == 1);
    // Lambda^2 of an odd line is Sym^2 of a line: one dimensional.
    CHECK(isotypic_projector_rank(Partition{1, 1}, SuperDim{0, 1}) == 1);
    CHECK(isotypic_projector_rank(Partition{2}, SuperDim{0, 1}) == 0);
    CHECK(isotypic_projector_rank(Partition{2, 2}, SuperDim{1, 1}) == 0);
    CHECK(isotypic_projector_rank(Partition{2, 1}, SuperDim{1, 1}) == 2);
}

TEST_CASE("oracle guard") {
    CHECK_THROWS_WITH_AS(isotypic_projector_rank(Partition{7}, SuperDim{2, 2}),
                         "oracle size limit: (p+q)^n > 4096", std::domain_error);
    CHECK_THROWS_AS(signed_tensor_action(SuperDim{2, 2}, 7), std::domain_error);
}

TEST_CASE("hook criterion, schur_dim and oracle agree (three ways)") {
    LrCache lr;
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            for (int n = 1; n <= 4; ++n)
                for (const Partition& l : partitions_of(n)) {
                    SuperDim d{p, q};
                    Int dim = schur_dim(l, d, lr);
                    Int rank = isotypic_projector_rank(l, d);
                    CHECK(rank == dim);
                    CHECK(vanishes(l, d) == (dim == 0));
                }
}

TEST_CASE("generator matrices: involutions, braid, distant commutation") {
    for (SuperDim d : {SuperDim{1, 1}, SuperDim{2, 1}, SuperDim{0, 2}}) {
        const int n = 4;
        auto action = signed_tensor_action(d, n);
        REQUIRE(action.generators.size() == 3);
        const std::size_t D = action.generators[0].rows();
        auto id = Matrix<Rational>::identity(D);
        for (const auto& s : action.generators) CHECK(s * s == id);
        for (std::size_t i = 0; i + 1 < action.generators.size(); ++i) {
            const auto& a = action.generators[i];
            const auto& b = action.generators[i + 1];
            CHECK(a * b * a == b * a * b);
        }
        CHECK(action.generators[0] * action.generators[2] ==
              action.generators[2] * action.generators[0]);
    }
}

TEST_CASE("signed permutation action is multiplicative") {
    const SuperDim d{1, 2};
    std::mt19937_64 rng(37);
    std::vector<int> word(4), tmp, via_g, via_gh;
    for (int round = 0; round < 200; ++round) {
        std::vector<int> g{0, 1, 2, 3}, h{0, 1, 2, 3};
        std::shuffle(g.begin(), g.end(), rng);
        std::shuffle(h.begin(), h.end(), rng);
        for (auto& w : word) w = static_cast<int>(rng() % 3);
        // Apply h then g.
        int sign_h = signed_permute(h, word, d, tmp);
        int sign_g = signed_permute(g, tmp, d, via_g);
        // Composite permutation: position a lands at g[h[a]].
        std::vector<int> gh(4);
        for (int a = 0; a < 4; ++a) gh[static_cast<std::size_t>(a)] = g[static_cast<std::size_t>(h[static_cast<std::size_t>(a)])];
        int sign_gh = signed_permute(gh, word, d, via_gh);
        CHECK(via_g == via_gh);
        CHECK(sign_h * sign_g == sign_gh);
    }
}

TEST_CASE("tensor power decomposition") {
    LrCache lr;
    auto rows = tensor_power_decomposition(SuperDim{1, 0}, 3, lr);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].lambda == Partition{3});
    CHECK(rows[0].multiplicity == 1);
    CHECK(rows[0].dim == 1);

    rows = tensor_power_decomposition(SuperDim{1, 1}, 2, lr);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].lambda == Partition{2});
    CHECK(rows[0].dim == 2);
    CHECK(rows[1].lambda == Partition{1, 1});
    CHECK(rows[1].dim == 2);

    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            for (int n = 1; n <= 5; ++n) {
                Int total = 0;
                for (const auto& row : tensor_power_decomposition(SuperDim{p, q}, n, lr))
                    total += row.multiplicity * row.dim;
                CHECK(total == int_pow(p + q, n));
            }
}

TEST_CASE("length growth report") {
    auto line = length_growth_report(SuperDim{1, 0}, 5);
    for (const auto& row : line) {
        CHECK(row.length == 1);
        CHECK(row.admissible_sum == 1);
    }

    auto rows = length_growth_report(SuperDim{1, 1}, 3);
    CHECK(rows[2].length == 8);
    CHECK(rows[2].admissible_sum == 4);  // hooks of 3: 1 + 2 + 1

    for (const auto& row : length_growth_report(SuperDim{2, 2}, 6)) {
        CHECK(row.admissible_sum <= row.length);
        CHECK(row.length == row.bound);
    }
}

TEST_CASE("hook classes close under tensor products") {
    LrCache lr;
    for (int p1 = 0; p1 <= 2; ++p1)
        for (int q1 = 0; q1 <= 2; ++q1)
            for (int p2 = 0; p2 <= 2; ++p2)
                for (int q2 = 0; q2 <= 2; ++q2) {
                    SuperDim prod = SuperDim{p1, q1} * SuperDim{p2, q2};
                    for (int n = 1; n <= 6; ++n)
                        for (const Partition& l : partitions_of(n))
                            if (vanishes(l, prod)) CHECK(schur_dim(l, prod, lr) == 0);
                }
}

}  // TEST_SUITE
