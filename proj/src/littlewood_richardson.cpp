#include "tc/littlewood_richardson.hpp"

#include <algorithm>

namespace tc {

namespace {

struct SkewCell {
    int row, col;
};

struct LrSearch {
    const Partition* lambda;
    const Partition* mu;
    std::vector<int> weight_left;      // remaining capacity per letter, 1-based
    std::vector<int> letter_count;     // letters placed so far, 1-based
    std::vector<std::vector<int>> entry;  // entry[row][col], 0 = unfilled/absent
    std::vector<SkewCell> order;       // reverse reading order
    Int found = 0;

    void fill(std::size_t pos) {
        if (pos == order.size()) {
            ++found;
            return;
        }
        const auto [row, col] = order[pos];
        const int letters = static_cast<int>(weight_left.size()) - 1;
        for (int l = 1; l <= letters; ++l) {
            if (weight_left[static_cast<std::size_t>(l)] == 0) continue;
            // Ballot condition on the reverse reading word.
            if (l > 1 && letter_count[static_cast<std::size_t>(l - 1)] <=
                             letter_count[static_cast<std::size_t>(l)])
                continue;
            // Rows weakly increase; the right neighbour is already placed.
            if (col + 1 < lambda->row(row) && entry[static_cast<std::size_t>(row)][static_cast<std::size_t>(col + 1)] != 0 &&
                l > entry[static_cast<std::size_t>(row)][static_cast<std::size_t>(col + 1)])
                continue;
            // Columns strictly increase.
            if (row > 0 && col >= mu->row(row - 1)) {
                int above = entry[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)];
                if (l <= above) continue;
            }
            entry[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = l;
            --weight_left[static_cast<std::size_t>(l)];
            ++letter_count[static_cast<std::size_t>(l)];
            fill(pos + 1);
            ++weight_left[static_cast<std::size_t>(l)];
            --letter_count[static_cast<std::size_t>(l)];
            entry[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
        }
    }
};

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lambda.size()) return 0;
    if (!lambda.contains(mu)) return 0;
    if (nu.empty()) return mu == lambda ? 1 : 0;
    if (nu.length() > lambda.length()) return 0;

    LrSearch s;
    s.lambda = &lambda;
    s.mu = &mu;
    s.weight_left.assign(static_cast<std::size_t>(nu.length()) + 1, 0);
    for (int l = 1; l <= nu.length(); ++l) s.weight_left[static_cast<std::size_t>(l)] = nu.row(l - 1);
    s.letter_count.assign(static_cast<std::size_t>(nu.length()) + 1, 0);
    s.entry.assign(static_cast<std::size_t>(lambda.length()), {});
    for (int i = 0; i < lambda.length(); ++i)
        s.entry[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lambda.row(i)), 0);
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = lambda.row(i) - 1; j >= mu.row(i); --j) s.order.push_back({i, j});

    s.fill(0);
    return s.found;
}

LrCache::LrCache(LrCache&& other) noexcept {
    std::lock_guard<std::mutex> lock(other.mutex_);
    memo_ = std::move(other.memo_);
    dirty_ = other.dirty_;
}

LrCache::Key LrCache::make_key(const Partition& lambda, const Partition& mu, const Partition& nu) {
    // a^lambda_{mu,nu} is symmetric in (mu, nu); store one orientation.
    const Partition& a = mu.parts() <= nu.parts() ? mu : nu;
    const Partition& b = mu.parts() <= nu.parts() ? nu : mu;
    return {lambda.parts(), a.parts(), b.parts()};
}

Int LrCache::coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    Key key = make_key(lambda, mu, nu);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Int value = lr_coefficient(lambda, mu, nu);
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = memo_.emplace(std::move(key), value);
    if (inserted) dirty_ = true;
    return it->second;
}

void LrCache::insert(const Partition& lambda, const Partition& mu, const Partition& nu, const Int& coeff) {
    std::lock_guard<std::mutex> lock(mutex_);
    memo_[make_key(lambda, mu, nu)] = coeff;
}

std::map<LrCache::Key, Int> LrCache::snapshot() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_;
}

bool LrCache::dirty() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return dirty_;
}

void LrCache::mark_clean() {
    std::lock_guard<std::mutex> lock(mutex_);
    dirty_ = false;
}

}  // namespace tc
