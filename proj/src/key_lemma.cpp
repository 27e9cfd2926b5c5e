#include "tc/key_lemma.hpp"

#include <stdexcept>

namespace tc {

namespace {

void check_guard(const SuperDim& d, int n) {
    if (d.p < 0 || d.q < 0) throw std::invalid_argument("negative super dimension");
    if (d.p + d.q > 3 || n > 8) throw std::domain_error("size limit: requires p+q <= 3 and n <= 8");
}

}  // namespace

PairedSymElement delta_power(const SuperDim& d, int n) {
    if (n < 0) throw std::invalid_argument("delta_power: negative exponent");
    check_guard(d, n);
    PairedSymElement acc = PairedSymElement::unit(d);
    const PairedSymElement delta = PairedSymElement::coevaluation(d);
    for (int i = 0; i < n; ++i) acc = acc * delta;
    return acc;
}

GeometricInverse geometric_inverse(const SuperDim& d, int guard) {
    check_guard(d, guard);
    GeometricInverse out;
    const PairedSymElement delta = PairedSymElement::coevaluation(d);
    PairedSymElement power = PairedSymElement::unit(d);
    out.powers.push_back(power);
    for (int n = 1; n <= guard; ++n) {
        power = power * delta;
        if (power.is_zero()) {
            out.nilpotent = true;
            out.index = n;
            break;
        }
        out.powers.push_back(power);
    }
    if (!out.nilpotent) {
        out.index = guard + 1;
        out.powers.clear();
        return out;
    }
    // (1 - delta) * (1 + delta + ... + delta^{index-1}) == 1, verified by
    // actual multiplication rather than telescoping.
    PairedSymElement sum(d);
    for (const auto& p : out.powers) sum += p;
    PairedSymElement one_minus_delta = PairedSymElement::unit(d);
    one_minus_delta -= delta;
    out.product_verified = (one_minus_delta * sum) == PairedSymElement::unit(d);
    return out;
}

GradedEquationsReport graded_equations_check(const SuperDim& d, int n_max) {
    check_guard(d, n_max);
    GradedEquationsReport out;
    out.n_max = n_max;
    out.powers_match = true;
    const PairedSymElement delta = PairedSymElement::coevaluation(d);
    // x_{0,0} = 1, and each graded equation x_{k,k} = delta * x_{k-1,k-1}.
    PairedSymElement x = PairedSymElement::unit(d);
    for (int k = 0; k <= n_max; ++k) {
        if (x != delta_power(d, k)) out.powers_match = false;
        if (x.is_zero()) {
            out.finite_solution = true;
            out.solution_length = k;
            return out;
        }
        x = delta * x;
    }
    return out;
}

HookLemmaReport hook_partition_lemma_report(int m, int n, int k) {
    if (m < 0 || n < 0 || k < 0) throw std::invalid_argument("hook_partition_lemma: negative argument");
    HookLemmaReport out;
    out.m = m;
    out.n = n;
    out.k = k;
    out.hypothesis_met = k > m * n;
    out.holds = true;
    for (const Partition& lambda : partitions_of(k)) {
        const bool escapes = lambda.row(0) > n || lambda.length() > m;
        if (!escapes) {
            out.holds = false;
            out.counterexamples.push_back(lambda);
        }
    }
    return out;
}

bool hook_partition_lemma(int m, int n, int k) {
    return hook_partition_lemma_report(m, n, k).holds;
}

}  // namespace tc
