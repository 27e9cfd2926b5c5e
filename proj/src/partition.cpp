#include "tc/partition.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace tc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.row(i) > row(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

int Partition::hook(int i, int j) const {
    if (!contains_box(i, j)) throw std::invalid_argument("hook: box outside diagram");
    int col_len = 0;
    for (int r = i; r < length() && row(r) > j; ++r) ++col_len;
    return (row(i) - j) + col_len - 1;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    if (text.empty() || text == "0") return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition part '" + tok + "' in '" + text + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(e.what()) + " in '" + text + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
}

namespace {

void enumerate_partitions(int n, int max_part, std::vector<int>& stack, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        stack.push_back(k);
        enumerate_partitions(n - k, k, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> stack;
    enumerate_partitions(n, n, stack, out);
    return out;
}

Int partition_count(int n) {
    if (n < 0) return 0;
    // Classic p(k) recurrence table, used as an enumeration cross-check.
    std::vector<Int> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - k)];
    return p[static_cast<std::size_t>(n)];
}

Int dim_irrep(const Partition& lambda) {
    Int hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.row(i); ++j) hooks *= lambda.hook(i, j);
    Int nf = factorial(static_cast<unsigned>(lambda.size()));
    if (nf % hooks != 0) throw std::logic_error("hook length formula: inexact division");
    return nf / hooks;
}

Int count_ssyt(const Partition& lambda, int N) {
    if (N < 0) throw std::invalid_argument("count_ssyt: negative N");
    if (lambda.length() > N) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.row(i); ++j) {
            num *= N + j - i;
            den *= lambda.hook(i, j);
        }
    if (num % den != 0) throw std::logic_error("hook content formula: inexact division");
    return num / den;
}

}  // namespace tc
