#include "lct/runs.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "lct/error.hpp"
#include "lct/lyndon.hpp"

namespace lct {

namespace {

#ifndef NDEBUG
// Prefix-function check that `period` is the smallest period of the run.
bool smallest_period_is(const Word& y, const Run& run) {
    const auto w = y.factor(run.start, run.end);
    std::vector<std::size_t> border(w.size(), 0);
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::size_t b = border[k - 1];
        while (b > 0 && w[k] != w[b])
            b = border[b - 1];
        border[k] = (w[k] == w[b]) ? b + 1 : 0;
    }
    return w.size() - border.back() == run.period;
}
#endif

void sort_unique(std::vector<Run>& runs) {
    std::sort(runs.begin(), runs.end());
    auto same_interval = [](const Run& a, const Run& b) {
        assert(a.start != b.start || a.end != b.end || a.period == b.period);
        return a.start == b.start && a.end == b.end;
    };
    runs.erase(std::unique(runs.begin(), runs.end(), same_interval), runs.end());
}

} // namespace

std::vector<Run> merge_runs(std::vector<Run> a, const std::vector<Run>& b) {
    a.insert(a.end(), b.begin(), b.end());
    sort_unique(a);
    return a;
}

std::vector<Run> runs_pass(const Word& y, Ordering ord, const RankTable& r, const LceIndex& ix,
                           std::vector<RunCandidate>* trace) {
    require_non_empty(y.size(), "runs_pass");
    const std::size_t n = y.size();
    if (r.size() != n || r.ordering != ord)
        throw Error(ErrorCode::index_mismatch,
                    "rank table was not built for this word under the " +
                        std::string(to_string(ord)) + " ordering");
    if (ix.size() != n || ix.fingerprint() != word_fingerprint(y))
        throw Error(ErrorCode::index_mismatch, "LCE index was not built for this word");

    const LynTable lyn = lyndon_table_ranked(y, r);
    std::vector<Run> runs;
    for (Pos i = n; i-- > 0;) {
        const std::size_t len = lyn[i];
        // Extensions past a border of the word are empty.
        const std::size_t ell = (i == 0) ? 0 : ix.left(i - 1, i + len - 1);
        const std::size_t ext = (i + len == n) ? 0 : ix.right(i, i + len);
        const RunCandidate cand{ord, i, len, ell, ext};
        if (trace)
            trace->push_back(cand);
        if (cand.emitted()) {
            const Run run{i - ell, i + len + ext - 1, len};
            assert(smallest_period_is(y, run));
            runs.push_back(run);
        }
    }
    sort_unique(runs);
    return runs;
}

std::vector<Run> find_runs(const Word& y, std::vector<RunCandidate>* trace) {
    require_non_empty(y.size(), "find_runs");
    const RankTable normal = rank_table(y, Ordering::normal);
    const RankTable inverted = rank_table(y, Ordering::inverted);
    const LceIndex ix = build_lce(y, normal);
    auto runs = runs_pass(y, Ordering::normal, normal, ix, trace);
    return merge_runs(std::move(runs), runs_pass(y, Ordering::inverted, inverted, ix, trace));
}

} // namespace lct
