#include "lct/lce.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "lct/error.hpp"

namespace lct {

LcpRmq::LcpRmq(const Word& y, std::vector<Pos> sa) {
    const std::size_t n = y.size();
    rank_.resize(n);
    for (Pos k = 0; k < n; ++k)
        rank_[sa[k]] = static_cast<std::uint32_t>(k);

    // Kasai: lcp[k] = lcp(sa[k-1], sa[k]), lcp[0] = 0.
    std::vector<std::uint32_t> lcp(n, 0);
    std::size_t h = 0;
    for (Pos i = 0; i < n; ++i) {
        if (rank_[i] == 0) {
            h = 0;
            continue;
        }
        const Pos j = sa[rank_[i] - 1];
        while (i + h < n && j + h < n && y[i + h] == y[j + h])
            ++h;
        lcp[rank_[i]] = static_cast<std::uint32_t>(h);
        if (h > 0)
            --h;
    }

    levels_.push_back(std::move(lcp));
    for (std::size_t width = 1; 2 * width <= n; width *= 2) {
        const auto& prev = levels_.back();
        std::vector<std::uint32_t> next(n - 2 * width + 1);
        for (Pos p = 0; p < next.size(); ++p)
            next[p] = std::min(prev[p], prev[p + width]);
        levels_.push_back(std::move(next));
    }
}

std::size_t LcpRmq::lcp(Pos i, Pos j) const noexcept {
    if (i == j)
        return rank_.size() - i;
    auto lo = rank_[i], hi = rank_[j];
    if (lo > hi)
        std::swap(lo, hi);
    ++lo;
    const auto k = std::bit_width(static_cast<std::uint32_t>(hi - lo + 1)) - 1;
    const auto& level = levels_[k];
    return std::min(level[lo], level[hi - (1u << k) + 1]);
}

std::uint64_t word_fingerprint(const Word& y) noexcept {
    // FNV-1a
    std::uint64_t h = 1469598103934665603ull;
    for (Symbol c : y.symbols()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h ^ y.size();
}

namespace {

void check_range(std::size_t n, Pos i, Pos j) {
    if (i >= n || j >= n)
        throw Error(ErrorCode::out_of_range, "LCE query (" + std::to_string(i) + ", " +
                                                 std::to_string(j) + ") on a word of length " +
                                                 std::to_string(n));
}

} // namespace

std::size_t LceIndex::right(Pos i, Pos j) const {
    check_range(n_, i, j);
    return forward_.lcp(i, j);
}

std::size_t LceIndex::left(Pos i, Pos j) const {
    check_range(n_, i, j);
    return backward_.lcp(n_ - 1 - i, n_ - 1 - j);
}

LceIndex build_lce(const Word& y, Ordering ord) {
    require_non_empty(y.size(), "build_lce");
    return build_lce(y, rank_table(y, ord));
}

LceIndex build_lce(const Word& y, const RankTable& forward) {
    require_non_empty(y.size(), "build_lce");
    if (forward.size() != y.size())
        throw Error(ErrorCode::rank_mismatch, "rank table does not match the word length");
    LceIndex ix;
    ix.n_ = y.size();
    ix.fingerprint_ = word_fingerprint(y);
    ix.forward_ = LcpRmq(y, suffix_order(forward));
    // Symbol equality is all LCE needs, so the mirror index may use either ordering.
    const Word mirror = y.reversed();
    ix.backward_ = LcpRmq(mirror, suffix_array(mirror, forward.ordering));
    return ix;
}

} // namespace lct
