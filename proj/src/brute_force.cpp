#include "tc/brute_force.hpp"

#include "tc/characters.hpp"

namespace tc::brute {

namespace {

// Peels corner cells one at a time (placing n, n-1, ..., 1).
Int syt_fill(std::vector<int>& rows, const Partition& lambda, int remaining) {
    if (remaining == 0) return 1;
    Int total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        // A cell can be removed last iff it is a corner of the current shape.
        if (rows[i] == 0) continue;
        if (i + 1 < rows.size() && rows[i + 1] == rows[i]) continue;
        --rows[i];
        total += syt_fill(rows, lambda, remaining - 1);
        ++rows[i];
    }
    return total;
}

Int ssyt_fill(std::vector<std::vector<int>>& t, const Partition& lambda, int N, int row, int col) {
    if (row == lambda.length()) return 1;
    int next_row = row, next_col = col + 1;
    if (next_col == lambda.row(row)) {
        ++next_row;
        next_col = 0;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)]);
    if (row > 0 && col < lambda.row(row - 1))
        lo = std::max(lo, t[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
    Int total = 0;
    for (int v = lo; v <= N; ++v) {
        t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
        total += ssyt_fill(t, lambda, N, next_row, next_col);
    }
    t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
    return total;
}

// Cycle type of the disjoint union of two permutations.
Partition merged_type(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

}  // namespace

Int syt_count(const Partition& lambda) {
    std::vector<int> rows = lambda.parts();
    return syt_fill(rows, lambda, lambda.size());
}

Int ssyt_count(const Partition& lambda, int N) {
    if (lambda.empty()) return 1;
    std::vector<std::vector<int>> t(static_cast<std::size_t>(lambda.length()));
    for (int i = 0; i < lambda.length(); ++i)
        t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lambda.row(i)), 0);
    return ssyt_fill(t, lambda, N, 0, 0);
}

Int lr_by_characters(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lambda.size()) return 0;
    // <chi^mu x chi^nu, Res chi^lambda> as a class sum over S_k x S_m.
    Rational acc(0);
    for (const Partition& alpha : partitions_of(mu.size())) {
        Int chi_mu = character(mu, alpha);
        if (chi_mu == 0) continue;
        for (const Partition& beta : partitions_of(nu.size())) {
            Int chi_nu = character(nu, beta);
            if (chi_nu == 0) continue;
            Int chi_l = character(lambda, merged_type(alpha, beta));
            if (chi_l == 0) continue;
            acc += Rational(chi_mu * chi_nu * chi_l, centralizer_order(alpha) * centralizer_order(beta));
        }
    }
    if (!acc.is_integer()) throw std::logic_error("lr_by_characters: non-integral inner product");
    return acc.numerator();
}

}  // namespace tc::brute
