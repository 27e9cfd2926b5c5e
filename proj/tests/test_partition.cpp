#include <random>

#include "doctest.h"
#include "tc/brute_force.hpp"
#include "tc/cache.hpp"
#include "tc/characters.hpp"

#include <filesystem>
#include <fstream>

using namespace tc;

TEST_SUITE("partition-core") {

TEST_CASE("partitions_of enumeration") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    // Reverse-lexicographic: (4) first, (1,1,1,1) last.
    CHECK(p4[0] == Partition{4});
    CHECK(p4[1] == Partition{3, 1});
    CHECK(p4[2] == Partition{2, 2});
    CHECK(p4[3] == Partition{2, 1, 1});
    CHECK(p4[4] == Partition{1, 1, 1, 1});

    CHECK(partitions_of(10).size() == 42);
    // Counting-function oracle agrees through n = 12.
    for (int n = 0; n <= 12; ++n)
        CHECK(Int(partitions_of(n).size()) == partition_count(n));
}

TEST_CASE("partition text format") {
    CHECK(Partition({3, 2, 1}).to_string() == "3,2,1");
    CHECK(Partition().to_string() == "0");
    CHECK(Partition::parse("3,2,1") == Partition({3, 2, 1}));
    CHECK(Partition::parse("0") == Partition());
    CHECK(Partition::parse("") == Partition());
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("-1"), std::invalid_argument);
}

TEST_CASE("conjugate") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({5}).conjugate() == Partition({1, 1, 1, 1, 1}));
    for (int n = 0; n <= 8; ++n)
        for (const Partition& l : partitions_of(n)) CHECK(l.conjugate().conjugate() == l);
}

TEST_CASE("hook lengths") {
    Partition l({3, 2});
    CHECK(l.hook(0, 0) == 4);
    CHECK(l.hook(0, 1) == 3);
    CHECK(l.hook(0, 2) == 1);
    CHECK(l.hook(1, 0) == 2);
    CHECK(l.hook(1, 1) == 1);
    CHECK_THROWS_AS(l.hook(2, 0), std::invalid_argument);
}

TEST_CASE("dim_irrep") {
    CHECK(dim_irrep(Partition{6}) == 1);
    CHECK(dim_irrep(Partition{1, 1, 1}) == 1);
    CHECK(dim_irrep(Partition{2, 1}) == 2);
    CHECK(dim_irrep(Partition{2, 1}) == brute::syt_count(Partition{2, 1}));

    for (int n = 0; n <= 8; ++n) {
        Int squares = 0, sum = 0;
        for (const Partition& l : partitions_of(n)) {
            Int f = dim_irrep(l);
            CHECK(f == brute::syt_count(l));
            squares += f * f;
            sum += f;
        }
        CHECK(squares == factorial(static_cast<unsigned>(n)));
        CHECK(sum * sum >= factorial(static_cast<unsigned>(n)));
    }
}

TEST_CASE("count_ssyt") {
    CHECK(count_ssyt(Partition{1}, 3) == 3);
    CHECK(count_ssyt(Partition{1, 1, 1}, 2) == 0);
    CHECK(count_ssyt(Partition{2, 1}, 2) == 2);
    CHECK(count_ssyt(Partition{2, 1}, 2) == brute::ssyt_count(Partition{2, 1}, 2));
    for (int n = 0; n <= 5; ++n)
        for (const Partition& l : partitions_of(n))
            for (int N = 0; N <= 4; ++N) CHECK(count_ssyt(l, N) == brute::ssyt_count(l, N));
}

TEST_CASE("characters: trivial, sign, dimension") {
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& rho : partitions_of(n)) {
            CHECK(character(Partition{n}, rho) == 1);
            // Sign of the class: (-1)^(n - #cycles).
            int exponent = n - rho.length();
            Int sign = exponent % 2 == 0 ? 1 : -1;
            CHECK(character(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), rho) == sign);
        }
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        for (const Partition& l : partitions_of(n)) CHECK(character(l, Partition(ones)) == dim_irrep(l));
    }
    CHECK_THROWS_AS(character(Partition{2, 1}, Partition{2}), std::invalid_argument);
}

TEST_CASE("character table values for S_3") {
    CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(character(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(character(Partition{2, 1}, Partition{3}) == -1);
}

TEST_CASE("column orthogonality") {
    for (int n = 1; n <= 6; ++n) {
        auto classes = partitions_of(n);
        for (const Partition& sigma : classes)
            for (const Partition& tau : classes) {
                Int acc = 0;
                for (const Partition& l : classes) acc += character(l, sigma) * character(l, tau);
                CHECK(acc == (sigma == tau ? centralizer_order(sigma) : Int(0)));
            }
    }
}

TEST_CASE("centralizer orders") {
    CHECK(centralizer_order(Partition{1, 1, 1}) == 6);
    CHECK(centralizer_order(Partition{2, 1}) == 2);
    CHECK(centralizer_order(Partition{3}) == 3);
    CHECK(centralizer_order(Partition{2, 2, 1}) == 8);
    // Class sizes sum to n!.
    for (int n = 1; n <= 7; ++n) {
        Int total = 0;
        for (const Partition& rho : partitions_of(n))
            total += factorial(static_cast<unsigned>(n)) / centralizer_order(rho);
        CHECK(total == factorial(static_cast<unsigned>(n)));
    }
}

TEST_CASE("LR coefficient base cases") {
    for (int n = 0; n <= 5; ++n)
        for (const Partition& l : partitions_of(n))
            for (const Partition& mu : partitions_of(n))
                CHECK(lr_coefficient(l, mu, Partition()) == (mu == l ? 1 : 0));
    CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{1}) == 1);
    CHECK(lr_coefficient(Partition{1, 1}, Partition{1}, Partition{1}) == 1);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{1, 1}, Partition{1}) == 1);
    // A multiplicity-2 case: (3,2,1) / (2,1) with weight (2,1).
    CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
}

TEST_CASE("LR agrees with the character oracle and is symmetric") {
    for (int n = 0; n <= 5; ++n)
        for (const Partition& l : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const Partition& mu : partitions_of(k))
                    for (const Partition& nu : partitions_of(n - k)) {
                        Int direct = lr_coefficient(l, mu, nu);
                        CHECK(direct == brute::lr_by_characters(l, mu, nu));
                        CHECK(direct == lr_coefficient(l, nu, mu));
                    }
    // Symmetry alone reaches |lambda| = 6.
    for (const Partition& l : partitions_of(6))
        for (int k = 0; k <= 3; ++k)
            for (const Partition& mu : partitions_of(k))
                for (const Partition& nu : partitions_of(6 - k))
                    CHECK(lr_coefficient(l, mu, nu) == lr_coefficient(l, nu, mu));
}

TEST_CASE("Schur specialization identity") {
    for (int total = 0; total <= 6; ++total)
        for (int k = 0; k <= total; ++k)
            for (const Partition& mu : partitions_of(k))
                for (const Partition& nu : partitions_of(total - k))
                    for (int N = 0; N <= 4; ++N) {
                        Int lhs = 0;
                        for (const Partition& l : partitions_of(total))
                            lhs += lr_coefficient(l, mu, nu) * count_ssyt(l, N);
                        CHECK(lhs == count_ssyt(mu, N) * count_ssyt(nu, N));
                    }
}

TEST_CASE("LrCache memoization matches direct computation") {
    LrCache cache;
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        int n = static_cast<int>(rng() % 6);
        auto all_l = partitions_of(n);
        int k = static_cast<int>(rng() % (static_cast<unsigned>(n) + 1));
        auto all_m = partitions_of(k);
        auto all_n = partitions_of(n - k);
        Partition l = all_l[rng() % all_l.size()];
        Partition mu = all_m[rng() % all_m.size()];
        Partition nu = all_n[rng() % all_n.size()];
        CHECK(cache.coefficient(l, mu, nu) == lr_coefficient(l, mu, nu));
        CHECK(cache.coefficient(l, mu, nu) == lr_coefficient(l, mu, nu));  // memo hit
    }
}

TEST_CASE("cache file roundtrip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "tc-unit-cache";
    fs::create_directories(dir);
    std::string path = (dir / "lr.tsv").string();

    LrCache cache;
    for (int n = 0; n <= 5; ++n)
        for (const Partition& l : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const Partition& mu : partitions_of(k))
                    for (const Partition& nu : partitions_of(n - k)) cache.coefficient(l, mu, nu);
    store_cache_file(cache, path);

    LrCache reloaded = load_cache_file(path);
    CHECK(reloaded.snapshot() == cache.snapshot());
    // Storing the reloaded cache is byte-stable.
    std::string path2 = (dir / "lr2.tsv").string();
    store_cache_file(reloaded, path2);
    std::ifstream a(path), b(path2);
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
    CHECK(!sa.empty());

    CHECK(load_cache_file((dir / "absent.tsv").string()).snapshot().empty());
    fs::remove_all(dir);
}

TEST_CASE("cache load rejects malformed content") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "tc-unit-cache-bad";
    fs::create_directories(dir);

    auto write_file = [&](const char* name, const char* content) {
        std::ofstream out(dir / name);
        out << content;
        return (dir / name).string();
    };

    std::string bad_fields = write_file("bad1.tsv", "2,1\t1,1\n");
    CHECK_THROWS_WITH_AS(load_cache_file(bad_fields),
                         "cache line 1: expected 4 tab-separated fields, got 2", std::invalid_argument);

    std::string bad_partition = write_file("bad2.tsv", "2,x\t1\t1\t1\n");
    try {
        load_cache_file(bad_partition);
        FAIL("expected malformed-partition error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("cache line 1") != std::string::npos);
    }

    std::string unsorted = write_file("bad3.tsv", "2\t1\t1\t1\n1,1\t1\t1\t1\n");
    try {
        load_cache_file(unsorted);
        FAIL("expected out-of-order error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("cache line 2") != std::string::npos);
    }

    std::string conflicting = write_file("bad4.tsv", "2\t1\t1\t1\n2\t1\t1\t2\n");
    CHECK_THROWS_AS(load_cache_file(conflicting), std::invalid_argument);

    fs::remove_all(dir);
}

}  // TEST_SUITE
