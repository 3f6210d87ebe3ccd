#pragma once

#include <cstdint>
#include <vector>

#include "lct/suffix.hpp"
#include "lct/word.hpp"

namespace lct {

/// Constant-time longest-common-prefix queries between suffixes of one word:
/// suffix array, Kasai LCP array and a doubling table for range minima.
class LcpRmq {
public:
    LcpRmq() = default;
    LcpRmq(const Word& y, std::vector<Pos> sa);

    /// Longest common prefix of the suffixes starting at i and j.
    std::size_t lcp(Pos i, Pos j) const noexcept;
    std::size_t size() const noexcept { return rank_.size(); }

private:
    std::vector<std::uint32_t> rank_;
    // levels_[k][p] = min of lcp entries p .. p + 2^k - 1
    std::vector<std::vector<std::uint32_t>> levels_;
};

/// Rightward and leftward longest common extensions after O(n log n) preprocessing.
class LceIndex {
public:
    LceIndex() = default;

    std::size_t size() const noexcept { return n_; }
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

    /// Common prefix length of y[i..] and y[j..]. Throws OutOfRange.
    std::size_t right(Pos i, Pos j) const;
    /// Common suffix length of y[0..i] and y[0..j]. Throws OutOfRange.
    std::size_t left(Pos i, Pos j) const;

    friend LceIndex build_lce(const Word& y, Ordering ord);
    friend LceIndex build_lce(const Word& y, const RankTable& forward);

private:
    std::size_t n_ = 0;
    std::uint64_t fingerprint_ = 0;
    LcpRmq forward_;
    LcpRmq backward_;
};

LceIndex build_lce(const Word& y, Ordering ord = Ordering::normal);
/// Reuses an existing rank table for the forward direction.
LceIndex build_lce(const Word& y, const RankTable& forward);

inline std::size_t lce_right(const LceIndex& ix, Pos i, Pos j) { return ix.right(i, j); }
inline std::size_t lce_left(const LceIndex& ix, Pos i, Pos j) { return ix.left(i, j); }

/// Content hash used to tie prebuilt indexes to the word they were built for.
std::uint64_t word_fingerprint(const Word& y) noexcept;

} // namespace lct
