#include "tc/diagram.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace tc {

DiagObject::DiagObject(int size) : kind_(DiagKind::unoriented), size_(size) {
    if (size < 0) throw std::invalid_argument("object size must be nonnegative");
}

DiagObject::DiagObject(std::vector<int> signs)
    : kind_(DiagKind::oriented), size_(static_cast<int>(signs.size())), signs_(std::move(signs)) {
    for (int s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
}

int DiagObject::sign(int i) const {
    if (i < 0 || i >= size_) throw std::invalid_argument("sign index out of range");
    return oriented() ? signs_[static_cast<std::size_t>(i)] : 1;
}

std::string DiagObject::sign_word() const {
    std::string w;
    for (int s : signs_) w += (s > 0 ? '+' : '-');
    return w;
}

std::vector<int> DiagObject::parse_sign_word(const std::string& word) {
    std::vector<int> signs;
    for (char c : word) {
        if (c == '+')
            signs.push_back(1);
        else if (c == '-')
            signs.push_back(-1);
        else
            throw std::invalid_argument(std::string("malformed sign word character '") + c + "'");
    }
    return signs;
}

DiagObject operator+(const DiagObject& a, const DiagObject& b) {
    if (a.kind_ != b.kind_) throw std::invalid_argument("kind mismatch");
    if (!a.oriented()) return DiagObject(a.size_ + b.size_);
    std::vector<int> signs = a.signs_;
    signs.insert(signs.end(), b.signs_.begin(), b.signs_.end());
    return DiagObject(std::move(signs));
}

bool operator<(const DiagObject& a, const DiagObject& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.signs_ < b.signs_;
}

std::string DiagObject::to_string() const {
    return oriented() ? "[" + sign_word() + "]" : "[" + std::to_string(size_) + "]";
}

namespace {

// Sign of a boundary point in the combined 0..m+n-1 indexing.
int point_sign(const DiagObject& src, const DiagObject& tgt, int point) {
    return point < src.size() ? src.sign(point) : tgt.sign(point - src.size());
}

bool pair_orientation_ok(const DiagObject& src, const DiagObject& tgt, int a, int b) {
    const bool a_bottom = a < src.size();
    const bool b_bottom = b < src.size();
    const int sa = point_sign(src, tgt, a);
    const int sb = point_sign(src, tgt, b);
    return (a_bottom != b_bottom) ? sa == sb : sa != sb;
}

}  // namespace

Diagram::Diagram(DiagObject source, DiagObject target, std::vector<std::pair<int, int>> pairs)
    : source_(std::move(source)), target_(std::move(target)), pairs_(std::move(pairs)) {
    if (source_.kind() != target_.kind()) throw std::invalid_argument("kind mismatch");
    const int total = source_.size() + target_.size();
    if (total % 2 != 0)
        throw std::invalid_argument("odd boundary size admits no perfect matching");
    std::vector<bool> used(static_cast<std::size_t>(total), false);
    for (auto& pr : pairs_) {
        if (pr.first > pr.second) std::swap(pr.first, pr.second);
        if (pr.first < 0 || pr.second >= total || pr.first == pr.second)
            throw std::invalid_argument("matching pair out of range");
        if (used[static_cast<std::size_t>(pr.first)] || used[static_cast<std::size_t>(pr.second)])
            throw std::invalid_argument("point matched twice");
        used[static_cast<std::size_t>(pr.first)] = used[static_cast<std::size_t>(pr.second)] = true;
        if (source_.oriented() && !pair_orientation_ok(source_, target_, pr.first, pr.second))
            throw std::invalid_argument("orientation-inconsistent strand");
    }
    for (bool u : used)
        if (!u) throw std::invalid_argument("unmatched boundary point");
    std::sort(pairs_.begin(), pairs_.end());
}

Diagram Diagram::identity(const DiagObject& x) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(x.size()));
    for (int i = 0; i < x.size(); ++i) pairs.emplace_back(i, x.size() + i);
    return Diagram(x, x, std::move(pairs));
}

Diagram Diagram::permutation(const DiagObject& x, const std::vector<int>& g) {
    if (static_cast<int>(g.size()) != x.size())
        throw std::invalid_argument("permutation length != object size");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.size());
    for (int i = 0; i < x.size(); ++i) pairs.emplace_back(i, x.size() + g[static_cast<std::size_t>(i)]);
    return Diagram(x, x, std::move(pairs));
}

Diagram Diagram::flipped() const {
    const int m = source_.size();
    const int n = target_.size();
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(pairs_.size());
    auto reflect = [&](int p) { return p < m ? n + p : p - m; };
    for (const auto& [a, b] : pairs_) pairs.emplace_back(reflect(a), reflect(b));
    return Diagram(target_, source_, std::move(pairs));
}

bool operator<(const Diagram& a, const Diagram& b) {
    if (a.source_ != b.source_) return a.source_ < b.source_;
    if (a.target_ != b.target_) return a.target_ < b.target_;
    return a.pairs_ < b.pairs_;
}

std::string Diagram::to_string() const {
    std::string s = source_.to_string() + "->" + target_.to_string() + "{";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(pairs_[i].first) + "-" + std::to_string(pairs_[i].second);
    }
    return s + "}";
}

namespace {

void enumerate_matchings(const DiagObject& x, const DiagObject& y, std::vector<int>& partner,
                         std::vector<std::pair<int, int>>& acc, std::vector<Diagram>& out) {
    const int total = static_cast<int>(partner.size());
    int first = 0;
    while (first < total && partner[static_cast<std::size_t>(first)] >= 0) ++first;
    if (first == total) {
        out.emplace_back(x, y, acc);
        return;
    }
    for (int second = first + 1; second < total; ++second) {
        if (partner[static_cast<std::size_t>(second)] >= 0) continue;
        if (x.oriented()) {
            // Check sign consistency before descending.
            const bool fb = first < x.size();
            const bool sb = second < x.size();
            const int sf = fb ? x.sign(first) : y.sign(first - x.size());
            const int ss = sb ? x.sign(second) : y.sign(second - x.size());
            if ((fb != sb) ? (sf != ss) : (sf == ss)) continue;
        }
        partner[static_cast<std::size_t>(first)] = second;
        partner[static_cast<std::size_t>(second)] = first;
        acc.emplace_back(first, second);
        enumerate_matchings(x, y, partner, acc, out);
        acc.pop_back();
        partner[static_cast<std::size_t>(first)] = -1;
        partner[static_cast<std::size_t>(second)] = -1;
    }
}

}  // namespace

std::vector<Diagram> hom_basis(const DiagObject& x, const DiagObject& y) {
    if (x.kind() != y.kind()) throw std::invalid_argument("kind mismatch");
    if ((x.size() + y.size()) % 2 != 0) return {};
    std::vector<Diagram> out;
    std::vector<int> partner(static_cast<std::size_t>(x.size() + y.size()), -1);
    std::vector<std::pair<int, int>> acc;
    enumerate_matchings(x, y, partner, acc, out);
    return out;
}

Int hom_count_unoriented(int boundary_points) {
    if (boundary_points % 2 != 0) return 0;
    Int v = 1;
    for (int k = boundary_points - 1; k > 1; k -= 2) v *= k;
    return v;
}

std::ostream& operator<<(std::ostream& os, const DiagObject& x) {
    return os << x.to_string();
}

std::ostream& operator<<(std::ostream& os, const Diagram& d) {
    return os << d.to_string();
}

}  // namespace tc
