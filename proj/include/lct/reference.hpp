#pragma once

// Definitional brute-force oracles. Nothing here calls into the main
// algorithms; each function transcribes its definition literally.

#include <vector>

#include "lct/cartesian.hpp"
#include "lct/lyndon.hpp"
#include "lct/runs.hpp"
#include "lct/suffix.hpp"
#include "lct/word.hpp"

namespace lct::reference {

enum class Direction { right, left };

NnsTable naive_nns(const NumSeq& x);

/// Root is the rightmost minimum; both sides are built recursively.
PosTree naive_cartesian(const NumSeq& x);

/// Lexicographic comparison of y[a..] and y[b..] symbol by symbol.
int naive_compare(std::span<const Symbol> a, std::span<const Symbol> b, Ordering ord);

/// Smaller than every proper non-empty suffix.
bool naive_is_lyndon(std::span<const Symbol> w, Ordering ord);

LynTable naive_lyn(const Word& y, Ordering ord = Ordering::normal);

RankTable naive_rank(const Word& y, Ordering ord = Ordering::normal);

/// Right: common prefix of y[i..] and y[j..]. Left: common suffix of y[0..i] and y[0..j].
std::size_t naive_lce(const Word& y, Pos i, Pos j, Direction dir);

/// Longest Lyndon prefix, repeatedly.
std::vector<Interval> naive_cfl(const Word& y, Ordering ord = Ordering::normal);

/// Recursive standard factorisation: the right factor is the smallest proper suffix.
LyndonTree naive_lyndon_tree(const Word& y, Ordering ord = Ordering::normal);

/// Smallest p >= 1 with w[k] = w[k+p] for every valid k.
std::size_t naive_smallest_period(std::span<const Symbol> w);

/// Every factor tested for its smallest period and its maximality. O(n^3).
std::vector<Run> naive_runs(const Word& y);

} // namespace lct::reference
