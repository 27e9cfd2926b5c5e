#include "tc/selftest.hpp"

#include <array>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "tc/brute_force.hpp"
#include "tc/cache.hpp"
#include "tc/cli.hpp"
#include "tc/diagram_schur.hpp"
#include "tc/key_lemma.hpp"
#include "tc/super_schur.hpp"
#include "tc/tensor_action.hpp"

namespace tc {

namespace {

struct Ctx {
    std::uint64_t seed;
    LrCache lr;
    long checks = 0;

    bool expect(bool ok) {
        ++checks;
        return ok;
    }
};

Int int_pow(int base, int exp) {
    Int v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

// 1. Super Schur-Weyl: sum_lambda dim V_lambda * dim S_lambda = (p+q)^n.
bool schur_weyl_identity(Ctx& c, std::string& detail) {
    bool ok = true;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            for (int n = 1; n <= 6; ++n) {
                SuperDim d{p, q};
                Int total = 0;
                for (const Partition& lambda : partitions_of(n))
                    total += dim_irrep(lambda) * schur_dim(lambda, d, c.lr);
                ok &= c.expect(total == int_pow(p + q, n));
            }
    detail = std::to_string(c.checks) + " (p,q,n) identities";
    return ok;
}

// 2. Hook criterion: vanishes <=> schur_dim = 0 <=> projector rank = 0,
//    and the two dimension computations agree outright.
bool hook_criterion_threeway(Ctx& c, std::string& detail) {
    bool ok = true;
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            for (int n = 1; n <= 5; ++n)
                for (const Partition& lambda : partitions_of(n)) {
                    SuperDim d{p, q};
                    const bool hook_vanishes = vanishes(lambda, d);
                    const Int dim = schur_dim(lambda, d, c.lr);
                    const Int rank = isotypic_projector_rank(lambda, d);
                    ok &= c.expect(hook_vanishes == (dim == 0));
                    ok &= c.expect((dim == 0) == (rank == 0));
                    ok &= c.expect(rank == dim);
                }
    detail = std::to_string(c.checks) + " three-way comparisons";
    return ok;
}

// 3. dim V_lambda vs tableau enumeration, sum of squares, sqrt(n!) bound.
bool dim_irrep_tableaux(Ctx& c, std::string& detail) {
    bool ok = true;
    for (int n = 0; n <= 8; ++n) {
        Int sum = 0, squares = 0;
        for (const Partition& lambda : partitions_of(n)) {
            Int f = dim_irrep(lambda);
            ok &= c.expect(f == brute::syt_count(lambda));
            sum += f;
            squares += f * f;
        }
        Int nf = factorial(static_cast<unsigned>(n));
        ok &= c.expect(squares == nf);
        ok &= c.expect(sum * sum >= nf);
    }
    detail = std::to_string(c.checks) + " checks up to n = 8";
    return ok;
}

// 4. LR rule vs character inner product; Schur specialization identity.
bool lr_coefficients(Ctx& c, std::string& detail) {
    bool ok = true;
    for (int n = 0; n <= 5; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const Partition& mu : partitions_of(k))
                    for (const Partition& nu : partitions_of(n - k))
                        ok &= c.expect(c.lr.coefficient(lambda, mu, nu) ==
                                       brute::lr_by_characters(lambda, mu, nu));
    for (int total = 0; total <= 6; ++total)
        for (int k = 0; k <= total; ++k)
            for (const Partition& mu : partitions_of(k))
                for (const Partition& nu : partitions_of(total - k))
                    for (int N = 0; N <= 4; ++N) {
                        Int lhs = 0;
                        for (const Partition& lambda : partitions_of(total))
                            lhs += c.lr.coefficient(lambda, mu, nu) * count_ssyt(lambda, N);
                        ok &= c.expect(lhs == count_ssyt(mu, N) * count_ssyt(nu, N));
                    }
    detail = std::to_string(c.checks) + " coefficients and specializations";
    return ok;
}

Diagram random_basis_diagram(std::mt19937_64& rng, const DiagObject& x, const DiagObject& y) {
    auto basis = hom_basis(x, y);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    return basis[pick(rng)];
}

DiagObject random_object(std::mt19937_64& rng, bool oriented, int max_size) {
    std::uniform_int_distribution<int> size_dist(0, max_size);
    int size = size_dist(rng);
    if (!oriented) return DiagObject(size);
    std::vector<int> signs(static_cast<std::size_t>(size));
    std::uniform_int_distribution<int> coin(0, 1);
    for (auto& s : signs) s = coin(rng) ? 1 : -1;
    return DiagObject(std::move(signs));
}

// 5. Diagram-category laws: hom counts, associativity, interchange,
//    zig-zags, circle relation.
bool diagram_laws(Ctx& c, std::string& detail) {
    bool ok = true;
    for (int m = 0; m <= 12; ++m)
        for (int n = 0; m + n <= 12; ++n) {
            if ((m + n) % 2 != 0) continue;
            ok &= c.expect(Int(hom_basis(DiagObject(m), DiagObject(n)).size()) ==
                           hom_count_unoriented(m + n));
        }

    std::mt19937_64 rng(c.seed + 5);
    int done = 0;
    while (done < 500) {
        bool oriented = (rng() & 1u) != 0;
        DiagObject a = random_object(rng, oriented, 4);
        DiagObject b = random_object(rng, oriented, 4);
        DiagObject x = random_object(rng, oriented, 4);
        DiagObject y = random_object(rng, oriented, 4);
        if (hom_basis(a, b).empty() || hom_basis(b, x).empty() || hom_basis(x, y).empty()) continue;
        Morphism f(random_basis_diagram(rng, a, b));
        Morphism g(random_basis_diagram(rng, b, x));
        Morphism h(random_basis_diagram(rng, x, y));
        ok &= c.expect(compose(compose(h, g), f) == compose(h, compose(g, f)));

        // Interchange on independently drawn pairs.
        DiagObject a2 = random_object(rng, oriented, 3);
        DiagObject b2 = random_object(rng, oriented, 3);
        DiagObject x2 = random_object(rng, oriented, 3);
        if (hom_basis(a2, b2).empty() || hom_basis(b2, x2).empty()) continue;
        Morphism f2(random_basis_diagram(rng, a2, b2));
        Morphism g2(random_basis_diagram(rng, b2, x2));
        ok &= c.expect(compose(tensor(g, g2), tensor(f, f2)) == tensor(compose(g, f), compose(g2, f2)));
        ++done;
    }

    // Zig-zags: (cap (x) id) o (id (x) cup) = id and its mirror.
    const DiagObject one(1);
    const Morphism id1 = Morphism::identity(one);
    const Morphism cup(Diagram(DiagObject(0), DiagObject(2), {{0, 1}}));
    const Morphism cap = cup.flipped();
    ok &= c.expect(compose(tensor(cap, id1), tensor(id1, cup)) == id1);
    ok &= c.expect(compose(tensor(id1, cap), tensor(cup, id1)) == id1);
    // Oriented zig-zag on a single + strand.
    const DiagObject oriented_empty{std::vector<int>{}};
    const DiagObject plus(std::vector<int>{1});
    const Morphism idp = Morphism::identity(plus);
    const Morphism coev(Diagram(oriented_empty, DiagObject(std::vector<int>{1, -1}), {{0, 1}}));
    const Morphism ev(Diagram(DiagObject(std::vector<int>{-1, 1}), oriented_empty, {{0, 1}}));
    ok &= c.expect(compose(tensor(idp, ev), tensor(coev, idp)) == idp);

    // Circle relation: cap o cup = t * [empty diagram].
    Morphism circle = compose(cap, cup);
    Morphism expected = RationalFunction::t() * Morphism(Diagram(DiagObject(0), DiagObject(0), {}));
    ok &= c.expect(circle == expected);

    detail = std::to_string(c.checks) + " law instances (500 random triples)";
    return ok;
}

// 6. Interpolation dimensions: closure of e_lambda vs the hook content
//    polynomial, nonvanishing through |lambda| = 6, integer evaluations.
//    The central idempotent carries the full isotypic block, so its
//    closure at t = N is dim V_lambda * count_ssyt(lambda, N).
bool interpolation_dims(Ctx& c, std::string& detail) {
    bool ok = true;
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            RationalFunction closure = symmetrizer_closure_dim(lambda, DiagKind::unoriented);
            ok &= c.expect(closure == content_polynomial_dim(lambda));
            const Int mult = dim_irrep(lambda);
            for (int N = 0; N <= 5; ++N)
                ok &= c.expect(closure.eval_at(Rational(N)) == Rational(mult * count_ssyt(lambda, N)));
        }
    // Oriented diagrams share closures of permutation diagrams.
    for (const Partition& lambda : partitions_of(3))
        ok &= c.expect(symmetrizer_closure_dim(lambda, DiagKind::oriented) ==
                       content_polynomial_dim(lambda));
    for (const Partition& lambda : partitions_of(6)) {
        RationalFunction closure = symmetrizer_closure_dim(lambda, DiagKind::unoriented);
        ok &= c.expect(closure.is_polynomial() && !closure.is_zero());
    }
    detail = std::to_string(c.checks) + " dimension identities";
    return ok;
}

// 7. Gram determinants at k = 1, 2, 3.
bool gram_determinants(Ctx& c, std::string& detail) {
    bool ok = true;
    std::string roots_text;
    for (int k = 1; k <= 3; ++k) {
        GramForm gram = gram_determinant(k);
        for (std::size_t a = 0; a < gram.matrix.rows(); ++a)
            ok &= c.expect(gram.matrix(a, a) == RationalFunction(Polynomial::monomial(1, static_cast<unsigned>(k))));
        if (k == 1) ok &= c.expect(gram.determinant == RationalFunction::t());
        ok &= c.expect(!gram.determinant.is_zero() && gram.determinant.is_polynomial());
        roots_text += " k=" + std::to_string(k) + ":{";
        for (std::size_t i = 0; i < gram.rational_roots.size(); ++i)
            roots_text += (i ? "," : "") + gram.rational_roots[i].to_string();
        roots_text += "}";
    }
    detail = "roots" + roots_text;
    return ok;
}

// 8. Key Lemma: delta^n = 0 <=> Sym^n = 0; verified geometric inverse.
bool key_lemma_nilpotency(Ctx& c, std::string& detail) {
    bool ok = true;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q) {
            SuperDim d{p, q};
            for (int n = 0; n <= 6; ++n)
                ok &= c.expect(delta_power(d, n).is_zero() == (sym_dim(d, n) == 0));
            GeometricInverse inv = geometric_inverse(d);
            if (inv.nilpotent) {
                ok &= c.expect(inv.product_verified);
                ok &= c.expect(delta_power(d, inv.index).is_zero());
            } else {
                ok &= c.expect(!delta_power(d, 6).is_zero());
            }
        }
    detail = std::to_string(c.checks) + " nilpotency checks";
    return ok;
}

// 9. Hook-partition lemma, exhaustively over small boxes.
bool hook_partition_exhaustive(Ctx& c, std::string& detail) {
    bool ok = true;
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            for (int k = m * n + 1; k <= m * n + 4; ++k) {
                HookLemmaReport rep = hook_partition_lemma_report(m, n, k);
                ok &= c.expect(rep.hypothesis_met && rep.holds && rep.counterexamples.empty());
            }
    detail = std::to_string(c.checks) + " (m,n,k) boxes";
    return ok;
}

// 10. CLI determinism and cache purity.
bool cli_determinism(Ctx& c, std::string& detail) {
    bool ok = true;
    const std::vector<std::vector<std::string>> commands = {
        {"partition", "dim", "--lambda", "4,3,1"},
        {"partition", "lr", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1", "--format", "json"},
        {"partition", "char", "--lambda", "3,1", "--cycle-type", "2,1,1", "--format", "tsv"},
        {"schur", "decompose", "--dim", "2,1", "--n", "4", "--format", "json"},
        {"schur", "vanishes", "--lambda", "2,2", "--dim", "1,1"},
        {"diagram", "hom", "--bottom", "2", "--top", "2", "--format", "json"},
        {"diagram", "trace", "--identity", "3"},
        {"diagram", "schurdim", "--lambda", "2,2", "--format", "json"},
        {"diagram", "gram", "--k", "2", "--format", "json"},
        {"keylemma", "inverse", "--dim", "0,2", "--format", "json"},
        {"keylemma", "hooklemma", "--m", "2", "--n", "3", "--k", "7", "--format", "json"},
    };
    for (const auto& argv : commands) {
        std::ostringstream out1, err1, out2, err2;
        int rc1 = run_cli(argv, out1, err1);
        int rc2 = run_cli(argv, out2, err2);
        ok &= c.expect(rc1 == 0 && rc2 == 0 && out1.str() == out2.str() && err1.str() == err2.str());
    }

    // Cache purity: disk roundtrip changes nothing but timing.
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() /
                   ("tc-selftest-" + std::to_string(static_cast<unsigned long long>(c.seed)));
    fs::create_directories(dir);
    const std::string cache_path = (dir / "lr.tsv").string();
    std::mt19937_64 rng(c.seed + 10);
    std::uniform_int_distribution<int> ndist(0, 6);
    auto random_partition = [&](int n) {
        auto all = partitions_of(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        return all[pick(rng)];
    };
    LrCache warm;
    std::vector<std::array<Partition, 3>> triples;
    for (int i = 0; i < 100; ++i) {
        int n = ndist(rng);
        std::uniform_int_distribution<int> kdist(0, n);
        int k = kdist(rng);
        Partition lambda = random_partition(n);
        Partition mu = random_partition(k);
        Partition nu = random_partition(n - k);
        triples.push_back({lambda, mu, nu});
        warm.coefficient(lambda, mu, nu);
    }
    store_cache_file(warm, cache_path);
    LrCache reloaded = load_cache_file(cache_path);
    for (const auto& [lambda, mu, nu] : triples)
        ok &= c.expect(reloaded.coefficient(lambda, mu, nu) == lr_coefficient(lambda, mu, nu));

    // The CLI with a populated cache stays byte-identical across reruns.
    const std::vector<std::string> cached_cmd = {"partition", "lr",    "--lambda", "4,2",  "--mu",
                                                 "2,1",       "--nu",  "2,1",      "--cache", cache_path};
    std::ostringstream o1, e1, o2, e2;
    int rc1 = run_cli(cached_cmd, o1, e1);
    int rc2 = run_cli(cached_cmd, o2, e2);
    ok &= c.expect(rc1 == 0 && rc2 == 0 && o1.str() == o2.str());
    std::ostringstream o3, e3;
    int rc3 = run_cli({"partition", "lr", "--lambda", "4,2", "--mu", "2,1", "--nu", "2,1"}, o3, e3);
    ok &= c.expect(rc3 == 0 && o3.str() == o1.str());

    std::error_code ec;
    fs::remove_all(dir, ec);
    detail = std::to_string(c.checks) + " determinism checks";
    return ok;
}

using CriterionFn = std::function<bool(Ctx&, std::string&)>;

struct Criterion {
    int id;
    const char* name;
    CriterionFn run;
};

const std::vector<Criterion>& registry() {
    static const std::vector<Criterion> criteria = {
        {1, "schur-weyl-identity", schur_weyl_identity},
        {2, "hook-criterion-threeway", hook_criterion_threeway},
        {3, "dim-irrep-tableaux", dim_irrep_tableaux},
        {4, "lr-coefficients", lr_coefficients},
        {5, "diagram-laws", diagram_laws},
        {6, "interpolation-dims", interpolation_dims},
        {7, "gram-determinants", gram_determinants},
        {8, "key-lemma-nilpotency", key_lemma_nilpotency},
        {9, "hook-partition-lemma", hook_partition_exhaustive},
        {10, "cli-determinism", cli_determinism},
    };
    return criteria;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const SelftestOptions& options, std::ostream& progress) {
    std::vector<CriterionResult> results;
    for (const Criterion& criterion : registry()) {
        if (!options.filter.empty() &&
            std::string(criterion.name).find(options.filter) == std::string::npos)
            continue;
        Ctx ctx;
        ctx.seed = options.seed;
        CriterionResult res;
        res.id = criterion.id;
        res.name = criterion.name;
        auto start = std::chrono::steady_clock::now();
        try {
            res.passed = criterion.run(ctx, res.detail);
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (res.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << res.id << "  " << std::left
             << std::setw(26) << res.name << std::right << "  (" << std::fixed << std::setprecision(2)
             << res.seconds << "s)";
        if (!res.detail.empty()) line << "  " << res.detail;
        progress << line.str() << '\n';
        results.push_back(std::move(res));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    if (results.empty()) return false;
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace tc
