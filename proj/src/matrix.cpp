#include "tc/matrix.hpp"

#include <utility>

namespace tc {

LinAlgResult<Rational> rank_det_kernel(const Matrix<Rational>& m) {
    const std::size_t R = m.rows(), C = m.cols();
    Matrix<Rational> a = m;
    LinAlgResult<Rational> out;
    std::vector<std::size_t> pivot_cols;
    Rational det_acc(1);
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < C && r < R; ++col) {
        std::size_t prow = r;
        while (prow < R && a(prow, col).is_zero()) ++prow;
        if (prow == R) continue;
        if (prow != r) {
            for (std::size_t j = 0; j < C; ++j) std::swap(a(prow, j), a(r, j));
            sign = -sign;
        }
        det_acc *= a(r, col);
        Rational inv = a(r, col).reciprocal();
        for (std::size_t j = col; j < C; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || a(i, col).is_zero()) continue;
            Rational f = a(i, col);
            for (std::size_t j = col; j < C; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_cols.push_back(col);
        ++r;
    }
    out.rank = static_cast<int>(r);
    if (R == C) out.det = (r == R) ? (sign < 0 ? -det_acc : det_acc) : Rational(0);
    // Kernel basis: one vector per free column, read off the reduced form.
    std::vector<bool> is_pivot(C, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(C, Rational(0));
        v[f] = Rational(1);
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, f);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

namespace {

struct BareissEchelon {
    Matrix<Polynomial> mat;
    std::vector<std::size_t> pivot_cols;
    int swap_sign = 1;
};

// Fraction-free elimination: every division is exact by construction.
BareissEchelon bareiss(Matrix<Polynomial> a) {
    const std::size_t R = a.rows(), C = a.cols();
    BareissEchelon e;
    Polynomial prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < C && r < R; ++col) {
        std::size_t prow = r;
        while (prow < R && a(prow, col).is_zero()) ++prow;
        if (prow == R) continue;
        if (prow != r) {
            for (std::size_t j = 0; j < C; ++j) std::swap(a(prow, j), a(r, j));
            e.swap_sign = -e.swap_sign;
        }
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = col + 1; j < C; ++j)
                a(i, j) = exact_div(a(r, col) * a(i, j) - a(i, col) * a(r, j), prev);
            a(i, col) = Polynomial();
        }
        prev = a(r, col);
        e.pivot_cols.push_back(col);
        ++r;
    }
    e.mat = std::move(a);
    return e;
}

}  // namespace

LinAlgResult<RationalFunction> rank_det_kernel(const Matrix<RationalFunction>& m) {
    const std::size_t R = m.rows(), C = m.cols();
    // Clear denominators row by row; row scaling changes det by a known
    // factor and leaves rank and kernel untouched.
    Matrix<Polynomial> p(R, C);
    RationalFunction scale_product(1);
    for (std::size_t i = 0; i < R; ++i) {
        Polynomial row_lcm(1);
        for (std::size_t j = 0; j < C; ++j)
            row_lcm = exact_div(row_lcm * m(i, j).den(), poly_gcd(row_lcm, m(i, j).den()));
        for (std::size_t j = 0; j < C; ++j)
            p(i, j) = m(i, j).num() * exact_div(row_lcm, m(i, j).den());
        scale_product *= RationalFunction(row_lcm);
    }

    BareissEchelon e = bareiss(std::move(p));
    const std::size_t rank = e.pivot_cols.size();

    LinAlgResult<RationalFunction> out;
    out.rank = static_cast<int>(rank);
    if (R == C) {
        if (rank < R) {
            out.det = RationalFunction(0);
        } else {
            // Last Bareiss pivot is the determinant of the scaled matrix.
            RationalFunction d(e.mat(R - 1, C - 1));
            if (e.swap_sign < 0) d = -d;
            out.det = d / scale_product;
        }
    }

    std::vector<bool> is_pivot(C, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<RationalFunction> v(C, RationalFunction(0));
        v[f] = RationalFunction(1);
        for (std::size_t k = rank; k-- > 0;) {
            RationalFunction acc(0);
            for (std::size_t j = e.pivot_cols[k] + 1; j < C; ++j) {
                if (e.mat(k, j).is_zero() || v[j].is_zero()) continue;
                acc += RationalFunction(e.mat(k, j)) * v[j];
            }
            v[e.pivot_cols[k]] = -acc / RationalFunction(e.mat(k, e.pivot_cols[k]));
        }
        out.kernel.push_back(std::move(v));
    }
    return out;
}

int integer_rank(std::vector<std::vector<Int>> a) {
    const std::size_t R = a.size();
    const std::size_t C = R == 0 ? 0 : a[0].size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < C && r < R; ++col) {
        std::size_t prow = r;
        while (prow < R && a[prow][col] == 0) ++prow;
        if (prow == R) continue;
        if (prow != r) std::swap(a[prow], a[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = col + 1; j < C; ++j) {
                Int num = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                a[i][j] = num / prev;  // exact by the Bareiss invariant
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace tc
