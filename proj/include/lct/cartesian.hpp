#pragma once

#include <limits>
#include <vector>

#include "lct/word.hpp"

namespace lct {

inline constexpr Pos no_pos = std::numeric_limits<Pos>::max();

/// Binary tree whose nodes are the positions 0..n-1, stored as flat link arrays.
/// Absent links hold no_pos.
struct PosTree {
    std::vector<Pos> parent;
    std::vector<Pos> left;
    std::vector<Pos> right;
    Pos root = no_pos;

    std::size_t size() const noexcept { return parent.size(); }

    /// Throws InconsistentTree unless links agree and inorder is 0..n-1.
    void validate() const;

    friend bool operator==(const PosTree&, const PosTree&) = default;
};

/// Symmetric traversal order of a tree.
std::vector<Pos> inorder(const PosTree& t);

/// Per position, the next strictly smaller position, or n when none exists.
using NnsTable = std::vector<Pos>;

/// Right-to-left construction that climbs the leftmost path from i+1.
/// Among equal values the rightmost becomes the ancestor.
PosTree build_cartesian(const NumSeq& x);
PosTree build_cartesian(const NumSeq& x, OpStats& stats);

NnsTable nns_table(const NumSeq& x);
NnsTable nns_table(const NumSeq& x, OpStats& stats);

/// Reads the NNS table off a Cartesian tree of x.
NnsTable nns_from_tree(const PosTree& t, const NumSeq& x);

} // namespace lct
