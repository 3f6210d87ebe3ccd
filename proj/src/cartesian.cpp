#include "lct/cartesian.hpp"

#include <string>

#include "lct/error.hpp"

namespace lct {

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
    throw Error(ErrorCode::inconsistent_tree, what);
}

} // namespace

void PosTree::validate() const {
    const std::size_t n = parent.size();
    if (left.size() != n || right.size() != n)
        inconsistent("link arrays differ in length");
    if (n == 0) {
        if (root != no_pos)
            inconsistent("empty tree with a root");
        return;
    }
    if (root >= n || parent[root] != no_pos)
        inconsistent("bad root");
    for (Pos p = 0; p < n; ++p) {
        if (p != root && parent[p] >= n)
            inconsistent("node " + std::to_string(p) + " has no parent");
        if (Pos c = left[p]; c != no_pos && (c >= p || parent[c] != p))
            inconsistent("left link of " + std::to_string(p));
        if (Pos c = right[p]; c != no_pos && (c <= p || c >= n || parent[c] != p))
            inconsistent("right link of " + std::to_string(p));
        if (Pos q = parent[p]; q != no_pos && left[q] != p && right[q] != p)
            inconsistent("parent of " + std::to_string(p) + " does not link back");
    }
    // Parent links alone can still form cycles detached from the root.
    const auto order = inorder(*this);
    if (order.size() != n)
        inconsistent("tree does not span all positions");
    for (Pos k = 0; k < n; ++k) {
        if (order[k] != k)
            inconsistent("symmetric order is not increasing");
    }
}

std::vector<Pos> inorder(const PosTree& t) {
    std::vector<Pos> out;
    std::vector<Pos> stack;
    Pos cur = t.root;
    while ((cur != no_pos || !stack.empty()) && out.size() <= t.size()) {
        while (cur != no_pos && stack.size() <= t.size()) {
            stack.push_back(cur);
            cur = t.left[cur];
        }
        if (stack.empty())
            break;
        cur = stack.back();
        stack.pop_back();
        out.push_back(cur);
        cur = t.right[cur];
    }
    return out;
}

PosTree build_cartesian(const NumSeq& x) {
    OpStats ignored;
    return build_cartesian(x, ignored);
}

PosTree build_cartesian(const NumSeq& x, OpStats& stats) {
    require_non_empty(x.size(), "build_cartesian");
    const std::size_t n = x.size();
    // Slot n is the virtual -infinity sentinel; comparisons against it are never executed.
    std::vector<Pos> parent(n + 1, no_pos), left(n + 1, no_pos), right(n + 1, no_pos);
    for (Pos i = n; i-- > 0;) {
        Pos s = i + 1;
        while (s != n) {
            ++stats.comparisons;
            if (!(x[i] < x[s]))
                break;
            s = parent[s];
        }
        right[i] = left[s];
        if (right[i] != no_pos)
            parent[right[i]] = i;
        left[s] = i;
        parent[i] = s;
    }
    PosTree t;
    t.root = left[n];
    parent.pop_back();
    left.pop_back();
    right.pop_back();
    parent[t.root] = no_pos;
    t.parent = std::move(parent);
    t.left = std::move(left);
    t.right = std::move(right);
    return t;
}

NnsTable nns_table(const NumSeq& x) {
    OpStats ignored;
    return nns_table(x, ignored);
}

NnsTable nns_table(const NumSeq& x, OpStats& stats) {
    require_non_empty(x.size(), "nns_table");
    const std::size_t n = x.size();
    NnsTable nns(n);
    nns[n - 1] = n;
    for (Pos i = n - 1; i-- > 0;) {
        // Chase while x[j] >= x[i]; equal values are not smaller and are skipped too.
        Pos j = i + 1;
        while (j != n) {
            ++stats.comparisons;
            if (x[j] < x[i])
                break;
            j = nns[j];
        }
        nns[i] = j;
    }
    return nns;
}

NnsTable nns_from_tree(const PosTree& t, const NumSeq& x) {
    require_non_empty(x.size(), "nns_from_tree");
    if (t.size() != x.size())
        inconsistent("tree has " + std::to_string(t.size()) + " nodes for a sequence of length " +
                     std::to_string(x.size()));
    t.validate();
    const std::size_t n = x.size();

    // Nearest ancestor lying to the right of each node, filled top-down.
    std::vector<Pos> right_anc(n, n);
    std::vector<Pos> stack{t.root};
    while (!stack.empty()) {
        const Pos p = stack.back();
        stack.pop_back();
        if (Pos c = t.left[p]; c != no_pos) {
            right_anc[c] = p;
            stack.push_back(c);
        }
        if (Pos c = t.right[p]; c != no_pos) {
            right_anc[c] = right_anc[p];
            stack.push_back(c);
        }
    }

    // An ancestor holding an equal value is skipped through its own entry.
    NnsTable nns(n);
    for (Pos i = n; i-- > 0;) {
        const Pos a = right_anc[i];
        nns[i] = (a == n || x[a] < x[i]) ? a : nns[a];
    }
    return nns;
}

} // namespace lct
