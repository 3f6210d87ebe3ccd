#include "lct/lyndon.hpp"

#include <string>

#include "lct/cartesian.hpp"
#include "lct/error.hpp"

namespace lct {

bool is_lyndon(std::span<const Symbol> w, Ordering ord) {
    require_non_empty(w.size(), "is_lyndon");
    // Duval scan: w is Lyndon iff the scan consumes w with a period equal to |w|.
    const std::size_t n = w.size();
    std::size_t j = 1, k = 0;
    while (j < n) {
        const auto c = compare_symbols(w[k], w[j], ord);
        if (c > 0)
            return false;
        k = (c < 0) ? 0 : k + 1;
        ++j;
    }
    return k == 0;
}

LynTable lyndon_table_letters(const Word& y, Ordering ord) {
    require_non_empty(y.size(), "lyndon_table_letters");
    const std::size_t n = y.size();
    LynTable lyn(n);
    for (Pos i = n; i-- > 0;) {
        lyn[i] = 1;
        Pos j = i + 1;
        while (j < n && compare_words(y.factor(i, j - 1), y.factor(j, j + lyn[j] - 1), ord) < 0) {
            lyn[i] += lyn[j];
            j += lyn[j];
        }
    }
    return lyn;
}

namespace {

void check_ranks(const Word& y, const RankTable& r) {
    if (r.size() != y.size())
        throw Error(ErrorCode::rank_mismatch, "rank table of length " + std::to_string(r.size()) +
                                                  " for a word of length " +
                                                  std::to_string(y.size()));
    if (!is_permutation(r.rank))
        throw Error(ErrorCode::rank_mismatch, "rank table is not a permutation");
}

struct Phrase {
    Interval span;
    Pos node;
};

// Global numbering: leaf i is node i, the internal node splitting before
// position s (1 <= s < n) is node n-1+s.
struct Forest {
    std::vector<Pos> parent, left, right;
    std::vector<Phrase> phrases; // leftmost phrase at the back
};

template <typename Less>
Forest merge_phrases(std::size_t n, Less less) {
    Forest f;
    const std::size_t nodes = 2 * n - 1;
    f.parent.assign(nodes, no_pos);
    f.left.assign(nodes, no_pos);
    f.right.assign(nodes, no_pos);
    for (Pos i = n; i-- > 0;) {
        Phrase u{{i, i}, i};
        while (!f.phrases.empty() && less(u.span, f.phrases.back().span)) {
            const Phrase v = f.phrases.back();
            f.phrases.pop_back();
            const Pos node = n - 1 + v.span.first;
            f.left[node] = u.node;
            f.right[node] = v.node;
            f.parent[u.node] = node;
            f.parent[v.node] = node;
            u = Phrase{{u.span.first, v.span.last}, node};
        }
        f.phrases.push_back(u);
    }
    return f;
}

LyndonTree extract_tree(const Forest& f, std::size_t n, const Phrase& phrase) {
    const Pos a = phrase.span.first;
    const std::size_t m = phrase.span.length();
    auto local = [&](Pos global) -> Pos {
        if (global == no_pos)
            return no_pos;
        return global < n ? global - a : m - 1 + (global - (n - 1) - a);
    };
    auto global_of = [&](Pos id) -> Pos { return id < m ? a + id : n - 1 + a + (id - (m - 1)); };

    LyndonTree t;
    t.offset = a;
    t.leaves = m;
    const std::size_t nodes = 2 * m - 1;
    t.parent.assign(nodes, no_pos);
    t.left.assign(nodes, no_pos);
    t.right.assign(nodes, no_pos);
    t.span.resize(nodes);
    t.root = local(phrase.node);
    for (Pos id = 0; id < nodes; ++id) {
        const Pos g = global_of(id);
        if (id != t.root)
            t.parent[id] = local(f.parent[g]);
        t.left[id] = local(f.left[g]);
        t.right[id] = local(f.right[g]);
    }
    // Spans follow from the leaves, children before parents.
    for (Pos id = 0; id < m; ++id)
        t.span[id] = Interval{a + id, a + id};
    std::vector<std::pair<Pos, bool>> stack{{t.root, false}};
    while (!stack.empty()) {
        auto [id, expanded] = stack.back();
        stack.pop_back();
        if (t.is_leaf(id))
            continue;
        if (expanded) {
            t.span[id] = Interval{t.span[t.left[id]].first, t.span[t.right[id]].last};
        } else {
            stack.push_back({id, true});
            stack.push_back({t.right[id], false});
            stack.push_back({t.left[id], false});
        }
    }
    return t;
}

std::vector<LyndonTree> build_forest(const Word& y, Ordering ord, PhraseCompare cmp) {
    const std::size_t n = y.size();
    Forest f;
    if (cmp == PhraseCompare::letters) {
        f = merge_phrases(n, [&](const Interval& u, const Interval& v) {
            return compare_words(y.factor(u.first, u.last), y.factor(v.first, v.last), ord) < 0;
        });
    } else {
        const RankTable r = rank_table(y, ord);
        f = merge_phrases(n, [&](const Interval& u, const Interval& v) {
            return r[u.first] < r[v.first];
        });
    }
    std::vector<LyndonTree> trees;
    trees.reserve(f.phrases.size());
    for (auto it = f.phrases.rbegin(); it != f.phrases.rend(); ++it)
        trees.push_back(extract_tree(f, n, *it));
    return trees;
}

} // namespace

LynTable lyndon_table_ranked(const Word& y, const RankTable& r) {
    OpStats ignored;
    return lyndon_table_ranked(y, r, ignored);
}

LynTable lyndon_table_ranked(const Word& y, const RankTable& r, OpStats& stats) {
    require_non_empty(y.size(), "lyndon_table_ranked");
    check_ranks(y, r);
    const std::size_t n = y.size();
    LynTable lyn(n);
    for (Pos i = n; i-- > 0;) {
        lyn[i] = 1;
        Pos j = i + 1;
        while (j < n) {
            ++stats.comparisons;
            if (!(r[i] < r[j]))
                break;
            lyn[i] += lyn[j];
            j += lyn[j];
        }
    }
    return lyn;
}

LyndonTree lyndon_tree(const Word& y, Ordering ord, PhraseCompare cmp) {
    require_non_empty(y.size(), "lyndon_tree");
    if (!is_lyndon(y, ord))
        throw Error(ErrorCode::not_lyndon,
                    "input is not a Lyndon word under the " + std::string(to_string(ord)) +
                        " ordering");
    auto trees = build_forest(y, ord, cmp);
    return std::move(trees.front());
}

std::vector<LyndonTree> lyndon_forest(const Word& y, Ordering ord, PhraseCompare cmp) {
    require_non_empty(y.size(), "lyndon_forest");
    return build_forest(y, ord, cmp);
}

std::vector<Interval> cfl_factorize(const Word& y, const LynTable& lt) {
    require_non_empty(y.size(), "cfl_factorize");
    const std::size_t n = y.size();
    if (lt.size() != n)
        throw Error(ErrorCode::table_mismatch, "Lyndon table of length " +
                                                   std::to_string(lt.size()) +
                                                   " for a word of length " + std::to_string(n));
    std::vector<Interval> factors;
    for (Pos p = 0; p < n;) {
        if (lt[p] < 1 || lt[p] > n - p)
            throw Error(ErrorCode::table_mismatch,
                        "entry " + std::to_string(lt[p]) + " at " + std::to_string(p) +
                            " is outside 1..n-i");
        factors.push_back(Interval{p, p + lt[p] - 1});
        p += lt[p];
    }
    return factors;
}

} // namespace lct
