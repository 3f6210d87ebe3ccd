#pragma once

#include <vector>

#include "lct/suffix.hpp"
#include "lct/word.hpp"

namespace lct {

/// lyn[i] is the length of the longest Lyndon factor starting at i.
using LynTable = std::vector<Pos>;

/// Closed interval [first, last] of positions.
struct Interval {
    Pos first = 0;
    Pos last = 0;

    std::size_t length() const noexcept { return last - first + 1; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// How adjacent phrases are compared while merging right to left.
enum class PhraseCompare { letters, ranks };

/// Lyndon tree of one Lyndon factor. Node ids are local: leaves are 0..m-1 and
/// the internal node whose right child starts at local position s has id m-1+s.
/// Intervals are absolute positions in the source word.
struct LyndonTree {
    Pos offset = 0;
    std::size_t leaves = 0;
    Pos root = 0;
    std::vector<Pos> parent;
    std::vector<Pos> left;
    std::vector<Pos> right;
    std::vector<Interval> span;

    std::size_t node_count() const noexcept { return parent.size(); }
    bool is_leaf(Pos node) const noexcept { return node < leaves; }
    Interval whole() const noexcept { return span[root]; }

    friend bool operator==(const LyndonTree&, const LyndonTree&) = default;
};

bool is_lyndon(std::span<const Symbol> w, Ordering ord = Ordering::normal);
inline bool is_lyndon(const Word& w, Ordering ord = Ordering::normal) {
    return is_lyndon(w.symbols(), ord);
}

/// Right-to-left merging with direct letter comparison of phrases (quadratic worst case).
LynTable lyndon_table_letters(const Word& y, Ordering ord = Ordering::normal);

/// Same recurrence with phrases compared through suffix ranks: at most 2n-2
/// rank comparisons. Throws RankMismatch if r does not fit y.
LynTable lyndon_table_ranked(const Word& y, const RankTable& r);
LynTable lyndon_table_ranked(const Word& y, const RankTable& r, OpStats& stats);

/// Throws NotLyndon unless y is a Lyndon word under ord.
LyndonTree lyndon_tree(const Word& y, Ordering ord = Ordering::normal,
                       PhraseCompare cmp = PhraseCompare::ranks);

/// One tree per factor of the Lyndon factorisation, left to right.
std::vector<LyndonTree> lyndon_forest(const Word& y, Ordering ord = Ordering::normal,
                                      PhraseCompare cmp = PhraseCompare::ranks);

/// Greedy cover p0 = 0, p(k+1) = p(k) + lyn[p(k)]. Throws TableMismatch.
std::vector<Interval> cfl_factorize(const Word& y, const LynTable& lt);

} // namespace lct
