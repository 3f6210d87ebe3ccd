#include "lct/reference.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lct/error.hpp"

namespace lct::reference {

NnsTable naive_nns(const NumSeq& x) {
    require_non_empty(x.size(), "naive_nns");
    const std::size_t n = x.size();
    NnsTable nns(n, n);
    for (Pos i = 0; i < n; ++i) {
        for (Pos j = i + 1; j < n; ++j) {
            if (x[j] < x[i]) {
                nns[i] = j;
                break;
            }
        }
    }
    return nns;
}

namespace {

Pos build_range(const NumSeq& x, Pos lo, Pos hi, Pos parent, PosTree& t) {
    if (lo >= hi)
        return no_pos;
    Pos m = lo;
    for (Pos k = lo; k < hi; ++k) {
        if (x[k] <= x[m])
            m = k;
    }
    t.parent[m] = parent;
    t.left[m] = build_range(x, lo, m, m, t);
    t.right[m] = build_range(x, m + 1, hi, m, t);
    return m;
}

} // namespace

PosTree naive_cartesian(const NumSeq& x) {
    require_non_empty(x.size(), "naive_cartesian");
    PosTree t;
    t.parent.assign(x.size(), no_pos);
    t.left.assign(x.size(), no_pos);
    t.right.assign(x.size(), no_pos);
    t.root = build_range(x, 0, x.size(), no_pos, t);
    return t;
}

int naive_compare(std::span<const Symbol> a, std::span<const Symbol> b, Ordering ord) {
    for (std::size_t k = 0;; ++k) {
        if (k == a.size() && k == b.size())
            return 0;
        if (k == a.size())
            return -1;
        if (k == b.size())
            return 1;
        if (a[k] != b[k]) {
            const bool less = ord == Ordering::normal ? a[k] < b[k] : a[k] > b[k];
            return less ? -1 : 1;
        }
    }
}

bool naive_is_lyndon(std::span<const Symbol> w, Ordering ord) {
    require_non_empty(w.size(), "naive_is_lyndon");
    for (std::size_t k = 1; k < w.size(); ++k) {
        if (naive_compare(w, w.subspan(k), ord) >= 0)
            return false;
    }
    return true;
}

LynTable naive_lyn(const Word& y, Ordering ord) {
    require_non_empty(y.size(), "naive_lyn");
    const std::size_t n = y.size();
    LynTable lyn(n, 0);
    for (Pos i = 0; i < n; ++i) {
        for (std::size_t len = 1; i + len <= n; ++len) {
            if (naive_is_lyndon(y.symbols().subspan(i, len), ord))
                lyn[i] = len;
        }
    }
    return lyn;
}

RankTable naive_rank(const Word& y, Ordering ord) {
    require_non_empty(y.size(), "naive_rank");
    const std::size_t n = y.size();
    std::vector<Pos> order(n);
    std::iota(order.begin(), order.end(), Pos{0});
    std::sort(order.begin(), order.end(), [&](Pos a, Pos b) {
        return naive_compare(y.suffix(a), y.suffix(b), ord) < 0;
    });
    RankTable r;
    r.ordering = ord;
    r.rank.resize(n);
    for (Pos k = 0; k < n; ++k)
        r.rank[order[k]] = k;
    return r;
}

std::size_t naive_lce(const Word& y, Pos i, Pos j, Direction dir) {
    const std::size_t n = y.size();
    if (i >= n || j >= n)
        throw Error(ErrorCode::out_of_range, "naive_lce query out of range");
    std::size_t len = 0;
    if (dir == Direction::right) {
        while (i + len < n && j + len < n && y[i + len] == y[j + len])
            ++len;
    } else {
        while (len <= i && len <= j && y[i - len] == y[j - len])
            ++len;
    }
    return len;
}

std::vector<Interval> naive_cfl(const Word& y, Ordering ord) {
    require_non_empty(y.size(), "naive_cfl");
    std::vector<Interval> factors;
    for (Pos p = 0; p < y.size();) {
        std::size_t best = 1;
        for (std::size_t len = 1; p + len <= y.size(); ++len) {
            if (naive_is_lyndon(y.symbols().subspan(p, len), ord))
                best = len;
        }
        factors.push_back(Interval{p, p + best - 1});
        p += best;
    }
    return factors;
}

namespace {

// Returns the local node id of the subtree spanning w[lo..hi].
Pos standard_split(const Word& w, Ordering ord, Pos lo, Pos hi, LyndonTree& t) {
    if (lo == hi) {
        t.span[lo] = Interval{t.offset + lo, t.offset + lo};
        return lo;
    }
    const auto factor = w.symbols().subspan(lo, hi - lo + 1);
    Pos best = lo + 1;
    for (Pos s = lo + 1; s <= hi; ++s) {
        if (naive_compare(factor.subspan(s - lo), factor.subspan(best - lo), ord) < 0)
            best = s;
    }
    const Pos node = t.leaves - 1 + best;
    const Pos l = standard_split(w, ord, lo, best - 1, t);
    const Pos r = standard_split(w, ord, best, hi, t);
    t.left[node] = l;
    t.right[node] = r;
    t.parent[l] = node;
    t.parent[r] = node;
    t.span[node] = Interval{t.offset + lo, t.offset + hi};
    return node;
}

} // namespace

LyndonTree naive_lyndon_tree(const Word& y, Ordering ord) {
    require_non_empty(y.size(), "naive_lyndon_tree");
    if (!naive_is_lyndon(y.symbols(), ord))
        throw Error(ErrorCode::not_lyndon, "naive_lyndon_tree needs a Lyndon word");
    LyndonTree t;
    t.offset = 0;
    t.leaves = y.size();
    const std::size_t nodes = 2 * y.size() - 1;
    t.parent.assign(nodes, no_pos);
    t.left.assign(nodes, no_pos);
    t.right.assign(nodes, no_pos);
    t.span.resize(nodes);
    t.root = standard_split(y, ord, 0, y.size() - 1, t);
    return t;
}

std::size_t naive_smallest_period(std::span<const Symbol> w) {
    for (std::size_t p = 1; p < w.size(); ++p) {
        bool ok = true;
        for (std::size_t k = 0; k + p < w.size(); ++k) {
            if (w[k] != w[k + p]) {
                ok = false;
                break;
            }
        }
        if (ok)
            return p;
    }
    return w.size();
}

std::vector<Run> naive_runs(const Word& y) {
    require_non_empty(y.size(), "naive_runs");
    const std::size_t n = y.size();
    std::vector<Run> runs;
    for (Pos i = 0; i < n; ++i) {
        for (Pos j = i + 1; j < n; ++j) {
            const std::size_t len = j - i + 1;
            const std::size_t p = naive_smallest_period(y.factor(i, j));
            if (2 * p > len)
                continue;
            const bool left_max = i == 0 || y[i - 1] != y[i - 1 + p];
            const bool right_max = j == n - 1 || y[j + 1] != y[j + 1 - p];
            if (left_max && right_max)
                runs.push_back(Run{i, j, p});
        }
    }
    return runs;
}

} // namespace lct::reference
