#include "tc/characters.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace tc {

namespace {

// Beta-numbers of lambda: {lambda_i + (L-1-i)}, strictly decreasing.
std::vector<int> beta_set(const Partition& lambda) {
    const int L = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) beta[static_cast<std::size_t>(i)] = lambda.row(i) + (L - 1 - i);
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int L = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < L; ++i) {
        int p = beta[static_cast<std::size_t>(i)] - (L - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;
std::map<MemoKey, Int> g_char_memo;
std::mutex g_char_mutex;

// Murnaghan-Nakayama: strip a border strip of size rho[k] for each k,
// realized as beta -> beta - r moves.
Int mn_character(const Partition& lambda, const std::vector<int>& rho, std::size_t k) {
    if (k == rho.size()) return 1;  // lambda is empty here
    MemoKey key(lambda.parts(), std::vector<int>(rho.begin() + static_cast<long>(k), rho.end()));
    {
        std::lock_guard<std::mutex> lock(g_char_mutex);
        auto it = g_char_memo.find(key);
        if (it != g_char_memo.end()) return it->second;
    }
    const int r = rho[k];
    std::vector<int> beta = beta_set(lambda);
    Int total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        if (b < r) continue;
        int nb = b - r;
        bool occupied = false;
        int height = 0;
        for (int other : beta) {
            if (other == nb) occupied = true;
            if (other > nb && other < b) ++height;
        }
        if (occupied) continue;
        std::vector<int> next = beta;
        next[i] = nb;
        Int sub = mn_character(from_beta(std::move(next)), rho, k + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    std::lock_guard<std::mutex> lock(g_char_mutex);
    g_char_memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int character(const Partition& lambda, const Partition& cycle_type) {
    if (lambda.size() != cycle_type.size())
        throw std::domain_error("character: |lambda| != |cycle type|");
    return mn_character(lambda, cycle_type.parts(), 0);
}

Int centralizer_order(const Partition& cycle_type) {
    Int z = 1;
    int run = 0;
    int prev = 0;
    for (std::size_t i = 0; i <= cycle_type.parts().size(); ++i) {
        int part = i < cycle_type.parts().size() ? cycle_type.parts()[i] : 0;
        if (part == prev) {
            ++run;
        } else {
            if (prev != 0) z *= factorial(static_cast<unsigned>(run));
            prev = part;
            run = 1;
        }
        if (part != 0) z *= part;
    }
    return z;
}

Partition cycle_type(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> cycles;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end(), std::greater<int>());
    return Partition(std::move(cycles));
}

int cycle_count(const std::vector<int>& perm) {
    return cycle_type(perm).length();
}

}  // namespace tc
