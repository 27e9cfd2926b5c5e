#include "tc/super_schur.hpp"

#include <ostream>
#include <stdexcept>

namespace tc {

SuperDim SuperDim::parse(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("malformed super dimension '" + text + "' (expected \"p,q\")");
    try {
        std::size_t used_p = 0, used_q = 0;
        std::string ps = text.substr(0, comma), qs = text.substr(comma + 1);
        int p = std::stoi(ps, &used_p);
        int q = std::stoi(qs, &used_q);
        if (used_p != ps.size() || used_q != qs.size() || p < 0 || q < 0)
            throw std::invalid_argument(text);
        return {p, q};
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed super dimension '" + text + "' (expected \"p,q\")");
    }
}

std::ostream& operator<<(std::ostream& os, const SuperDim& d) {
    return os << d.to_string();
}

bool vanishes(const Partition& lambda, const SuperDim& d) {
    // Rows are weakly decreasing, so the first candidate violation is row p+1.
    return lambda.row(d.p) > d.q;
}

Int schur_dim(const Partition& lambda, const SuperDim& d, LrCache& lr) {
    const int n = lambda.size();
    Int total = 0;
    for (int k = 0; k <= n; ++k) {
        for (const Partition& mu : partitions_of(k)) {
            Int even_dim = count_ssyt(mu, d.p);
            if (even_dim == 0) continue;
            if (!lambda.contains(mu)) continue;
            for (const Partition& nu : partitions_of(n - k)) {
                Int odd_dim = count_ssyt(nu.conjugate(), d.q);
                if (odd_dim == 0) continue;
                Int c = lr.coefficient(lambda, mu, nu);
                if (c == 0) continue;
                total += c * even_dim * odd_dim;
            }
        }
    }
    return total;
}

std::vector<DecompositionRow> tensor_power_decomposition(const SuperDim& d, int n, LrCache& lr) {
    std::vector<DecompositionRow> rows;
    for (const Partition& lambda : partitions_of(n)) {
        Int dim = schur_dim(lambda, d, lr);
        if (dim == 0) continue;
        rows.push_back({lambda, dim_irrep(lambda), dim});
    }
    return rows;
}

std::vector<LengthGrowthRow> length_growth_report(const SuperDim& d, int n_max) {
    std::vector<LengthGrowthRow> rows;
    Int power = 1;
    const Int N = d.total();
    for (int n = 1; n <= n_max; ++n) {
        power *= N;
        Int admissible = 0;
        for (const Partition& lambda : partitions_of(n))
            if (!vanishes(lambda, d)) admissible += dim_irrep(lambda);
        rows.push_back({n, power, power, admissible});
    }
    return rows;
}

}  // namespace tc
