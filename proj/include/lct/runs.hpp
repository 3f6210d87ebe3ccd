#pragma once

#include <vector>

#include "lct/lce.hpp"
#include "lct/suffix.hpp"
#include "lct/word.hpp"

namespace lct {

/// Maximal periodicity y[start..end] (inclusive) with smallest period `period`.
struct Run {
    Pos start = 0;
    Pos end = 0;
    std::size_t period = 0;

    std::size_t length() const noexcept { return end - start + 1; }

    friend bool operator==(const Run&, const Run&) = default;
    friend auto operator<=>(const Run&, const Run&) = default;
};

/// One examined position: the longest Lyndon factor at i extended by ell to the
/// left and r to the right with period lyn.
struct RunCandidate {
    Ordering ordering = Ordering::normal;
    Pos i = 0;
    std::size_t lyn = 0;
    std::size_t ell = 0;
    std::size_t r = 0;

    bool emitted() const noexcept { return ell + r >= lyn; }
};

/// Single pass for one alphabet ordering. The result is sorted by (start, end)
/// and free of duplicates. Throws IndexMismatch if r or ix were built for
/// another word or ordering.
std::vector<Run> runs_pass(const Word& y, Ordering ord, const RankTable& r, const LceIndex& ix,
                           std::vector<RunCandidate>* trace = nullptr);

/// All runs of y: union of the normal and inverted passes.
std::vector<Run> find_runs(const Word& y, std::vector<RunCandidate>* trace = nullptr);

/// Sorted union keyed on (start, end).
std::vector<Run> merge_runs(std::vector<Run> a, const std::vector<Run>& b);

} // namespace lct
