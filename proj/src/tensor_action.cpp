#include "tc/tensor_action.hpp"

#include <map>
#include <stdexcept>

#include "tc/characters.hpp"

namespace tc {

int signed_permute(const std::vector<int>& perm, const std::vector<int>& word,
                   const SuperDim& d, std::vector<int>& out) {
    const std::size_t n = word.size();
    out.assign(n, 0);
    int sign = 1;
    for (std::size_t a = 0; a < n; ++a) {
        out[static_cast<std::size_t>(perm[a])] = word[a];
        if (word[a] < d.p) continue;
        for (std::size_t b = a + 1; b < n; ++b)
            if (perm[b] < perm[a] && word[b] >= d.p) sign = -sign;
    }
    return sign;
}

namespace {

Int checked_pow(int base, int exp) {
    Int v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

std::size_t encode(const std::vector<int>& word, int radix) {
    std::size_t idx = 0;
    for (int digit : word) idx = idx * static_cast<std::size_t>(radix) + static_cast<std::size_t>(digit);
    return idx;
}

void decode(std::size_t idx, int radix, std::vector<int>& word) {
    for (std::size_t a = word.size(); a-- > 0;) {
        word[a] = static_cast<int>(idx % static_cast<std::size_t>(radix));
        idx /= static_cast<std::size_t>(radix);
    }
}

}  // namespace

SignedTensorAction signed_tensor_action(const SuperDim& d, int n) {
    const int radix = d.total();
    if (n < 1) throw std::invalid_argument("signed_tensor_action: n must be >= 1");
    Int dim_big = checked_pow(radix, n);
    if (dim_big > 4096) throw std::domain_error("oracle size limit: (p+q)^n > 4096");
    const std::size_t D = static_cast<std::size_t>(dim_big.get_ui());

    SignedTensorAction action;
    action.n = n;
    action.dim = d;
    std::vector<int> word(static_cast<std::size_t>(n)), moved;
    for (int k = 0; k + 1 < n; ++k) {
        Matrix<Rational> m(D, D);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a) perm[static_cast<std::size_t>(a)] = a;
        std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(k + 1)]);
        for (std::size_t j = 0; j < D; ++j) {
            decode(j, radix, word);
            int sign = signed_permute(perm, word, d, moved);
            m(encode(moved, radix), j) = Rational(sign);
        }
        action.generators.push_back(std::move(m));
    }
    return action;
}

Int isotypic_projector_rank(const Partition& lambda, const SuperDim& d) {
    const int n = lambda.size();
    const int radix = d.total();
    if (n == 0) return 1;
    if (radix == 0) return 0;
    Int dim_big = checked_pow(radix, n);
    if (dim_big > 4096) throw std::domain_error("oracle size limit: (p+q)^n > 4096");
    const std::size_t D = static_cast<std::size_t>(dim_big.get_ui());

    // chi^lambda on every permutation, looked up by cycle type.
    std::map<std::vector<int>, Int> chi;
    for (const Partition& rho : partitions_of(n)) chi[rho.parts()] = character(lambda, rho);
    std::vector<std::vector<int>> perms;
    std::vector<const Int*> chi_of_perm;
    for_each_permutation(n, [&](const std::vector<int>& p) {
        perms.push_back(p);
        chi_of_perm.push_back(&chi.at(cycle_type(p).parts()));
    });

    // The scaled projector M = sum_g chi(g) sigma(g) preserves the letter
    // content of a tensor word, so it is block diagonal over content
    // classes; rank is computed block by block.
    std::map<std::vector<int>, std::vector<std::size_t>> blocks;
    std::vector<int> word(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < D; ++j) {
        decode(j, radix, word);
        std::vector<int> key = word;
        std::sort(key.begin(), key.end());
        blocks[std::move(key)].push_back(j);
    }

    Int rank = 0;
    std::vector<int> moved;
    for (const auto& [content, members] : blocks) {
        const std::size_t s = members.size();
        std::map<std::size_t, std::size_t> local;
        for (std::size_t i = 0; i < s; ++i) local[members[i]] = i;
        std::vector<std::vector<Int>> block(s, std::vector<Int>(s, 0));
        for (std::size_t jj = 0; jj < s; ++jj) {
            decode(members[jj], radix, word);
            for (std::size_t g = 0; g < perms.size(); ++g) {
                if (*chi_of_perm[g] == 0) continue;
                int sign = signed_permute(perms[g], word, d, moved);
                std::size_t i = local.at(encode(moved, radix));
                if (sign > 0)
                    block[i][jj] += *chi_of_perm[g];
                else
                    block[i][jj] -= *chi_of_perm[g];
            }
        }
        rank += integer_rank(std::move(block));
    }

    Int dv = dim_irrep(lambda);
    if (rank % dv != 0)
        throw std::logic_error("projector rank not divisible by dim V_lambda");
    return rank / dv;
}

}  // namespace tc
