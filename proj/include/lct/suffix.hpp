#pragma once

#include <span>
#include <vector>

#include "lct/word.hpp"

namespace lct {

/// rank[i] is the position of suffix y[i..n-1] in the sorted list of all suffixes.
struct RankTable {
    std::vector<Pos> rank;
    Ordering ordering = Ordering::normal;

    std::size_t size() const noexcept { return rank.size(); }
    Pos operator[](Pos i) const noexcept { return rank[i]; }

    friend bool operator==(const RankTable&, const RankTable&) = default;
};

/// Sorted list of suffix start positions, built by induced sorting in O(n).
std::vector<Pos> suffix_array(const Word& y, Ordering ord);

RankTable rank_table(const Word& y, Ordering ord = Ordering::normal);

/// Inverse permutation of a rank table. Throws NotAPermutation.
std::vector<Pos> suffix_order(std::span<const Pos> rank);
inline std::vector<Pos> suffix_order(const RankTable& r) { return suffix_order(r.rank); }

bool is_permutation(std::span<const Pos> values);

} // namespace lct
