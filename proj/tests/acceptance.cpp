// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lct/cartesian.hpp"
#include "lct/cli.hpp"
#include "lct/equivalence.hpp"
#include "lct/lce.hpp"
#include "lct/lyndon.hpp"
#include "lct/reference.hpp"
#include "lct/runs.hpp"
#include "lct/suffix.hpp"
#include "support.hpp"

using namespace lct;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass)
            detail = why;
        pass = false;
    }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
    std::printf("[%s] criterion %d: %s%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(),
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass)
        ++failures;
}

std::string cli_tsv(const std::vector<std::string>& args, double& best_ms) {
    std::string out_text;
    best_ms = 1e9;
    for (int rep = 0; rep < 5; ++rep) {
        std::ostringstream out, err;
        std::istringstream in;
        const auto start = Clock::now();
        lct::cli::run_cli(args, out, err, in);
        best_ms = std::min(best_ms, seconds_since(start) * 1e3);
        out_text = out.str();
    }
    return out_text;
}

std::string tsv_row(const std::vector<Pos>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? " " : "") + std::to_string(v[k]);
    return s + "\n";
}

// Binary words of length 1..max_binary, then `random_count` ternary words with length 1..max_random.
void for_each_test_word(std::size_t max_binary, std::size_t random_count, std::size_t max_random,
                        std::uint64_t seed, const std::function<void(const Word&)>& fn) {
    for (std::size_t n = 1; n <= max_binary; ++n)
        for_each_word("ab", n, fn);
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < random_count; ++k)
        fn(testing::random_word(rng, max_random, "abc"));
}

NumSeq as_numseq(const std::vector<Pos>& v) {
    return NumSeq(std::vector<std::int64_t>(v.begin(), v.end()));
}

void criterion_golden_tables() {
    Outcome o;
    const std::string ints = "7,15,12,4,10,1,5,13,6,14,11,3,9,0,2,8";
    const std::vector<std::pair<std::vector<std::string>, std::vector<Pos>>> cases{
        {{"nns", "--ints", ints, "--format", "tsv"}, testing::paper_nns},
        {{"lyn", "--text", testing::paper_word, "--format", "tsv"}, testing::paper_lyn},
        {{"ranks", "--text", testing::paper_word, "--format", "tsv"}, testing::paper_rank},
    };
    std::ostringstream timings;
    for (const auto& [args, expected] : cases) {
        double ms = 0;
        const std::string got = cli_tsv(args, ms);
        timings << args[0] << "=" << ms << "ms ";
        if (got != tsv_row(expected))
            o.fail(args[0] + " printed '" + got + "'");
        if (ms >= 1.0)
            o.fail(args[0] + " took " + std::to_string(ms) + " ms");
    }
    if (o.pass)
        o.detail = timings.str();
    report(1, "golden NNS, Lyn and Rank rows of the worked example", o);
}

void criterion_cartesian_golden() {
    Outcome o;
    const PosTree t = build_cartesian(NumSeq(testing::paper_sequence));
    const std::map<Pos, Pos> parent{{0, 3},  {1, 2},   {2, 0},   {3, 5},   {4, 3},
                                    {5, 13}, {6, 11},  {7, 8},   {8, 6},   {9, 10},
                                    {10, 8}, {11, 5},  {12, 11}, {14, 13}, {15, 14}};
    if (t.root != 13)
        o.fail("root " + std::to_string(t.root));
    for (auto [c, p] : parent) {
        if (t.parent[c] != p)
            o.fail("parent of " + std::to_string(c));
    }
    report(2, "Cartesian tree edge list of the worked example", o);
}

void criterion_oracles_and_counts() {
    Outcome eq, counts;
    std::size_t words = 0, lce_pairs = 0;
    const auto start = Clock::now();
    std::mt19937_64 pair_rng(77);

    auto check_word = [&](const Word& y, bool sample_lce) {
        ++words;
        const std::size_t n = y.size();
        const RankTable r = rank_table(y);
        if (r != reference::naive_rank(y))
            eq.fail("rank_table on '" + y.str() + "'");

        OpStats lyn_stats;
        const LynTable by_letters = lyndon_table_letters(y);
        const LynTable by_ranks = lyndon_table_ranked(y, r, lyn_stats);
        if (by_letters != by_ranks || by_ranks != reference::naive_lyn(y))
            eq.fail("Lyndon tables on '" + y.str() + "'");
        if (lyn_stats.comparisons > 2 * n - 2)
            counts.fail("lyndon_table_ranked used " + std::to_string(lyn_stats.comparisons) +
                        " comparisons on '" + y.str() + "'");

        // NNS over the rank permutation and over the raw symbol codes (with ties).
        const std::vector<Pos> codes(y.symbols().begin(), y.symbols().end());
        for (const NumSeq& x : {as_numseq(r.rank), as_numseq(codes)}) {
            OpStats tree_stats;
            const PosTree t = build_cartesian(x, tree_stats);
            const NnsTable nns = nns_table(x);
            if (nns != reference::naive_nns(x) || nns_from_tree(t, x) != nns)
                eq.fail("NNS tables on '" + y.str() + "'");
            if (tree_stats.comparisons > 2 * n - 2)
                counts.fail("build_cartesian used " + std::to_string(tree_stats.comparisons) +
                            " comparisons on '" + y.str() + "'");
        }

        if (sample_lce) {
            const LceIndex ix = build_lce(y);
            std::uniform_int_distribution<Pos> pos(0, n - 1);
            for (int q = 0; q < 10; ++q) {
                const Pos i = pos(pair_rng), j = pos(pair_rng);
                ++lce_pairs;
                if (ix.right(i, j) != reference::naive_lce(y, i, j, reference::Direction::right) ||
                    ix.left(i, j) != reference::naive_lce(y, i, j, reference::Direction::left))
                    eq.fail("LCE (" + std::to_string(i) + "," + std::to_string(j) + ") on '" +
                            y.str() + "'");
            }
        }
    };

    for (std::size_t n = 1; n <= 12; ++n)
        for_each_word("ab", n, [&](const Word& y) { check_word(y, false); });
    std::mt19937_64 rng(3);
    for (int k = 0; k < 1000; ++k)
        check_word(testing::random_word(rng, 64, "abc"), true);

    const double elapsed = seconds_since(start);
    if (lce_pairs < 10000)
        eq.fail("only " + std::to_string(lce_pairs) + " LCE pairs sampled");
    if (elapsed >= 120.0)
        eq.fail("took " + std::to_string(elapsed) + " s");
    if (eq.pass)
        eq.detail = std::to_string(words) + " words, " + std::to_string(lce_pairs) +
                    " LCE pairs, " + std::to_string(elapsed) + " s";
    report(3, "fast tables equal the brute-force oracles", eq);
    if (counts.pass)
        counts.detail = "<= 2n-2 on all " + std::to_string(words) + " inputs";
    report(9, "comparison counts of build_cartesian and lyndon_table_ranked", counts);
}

void criterion_prop1() {
    Outcome o;
    std::size_t checked = 0;
    for (auto ord : {Ordering::normal, Ordering::inverted}) {
        for (std::size_t lu = 1; lu <= 6; ++lu) {
            for_each_word("ab", lu, [&](const Word& u) {
                if (!is_lyndon(u, ord))
                    return;
                for (std::size_t lw = 1; lw <= 6; ++lw) {
                    for_each_word("ab", lw, [&](const Word& w) {
                        ++checked;
                        const auto r = check_prop1(u, w, ord);
                        if (!r.pass)
                            o.fail(r.subject + " " + r.witness.value_or(""));
                    });
                }
            });
        }
    }
    if (o.pass)
        o.detail = std::to_string(checked) + " pairs";
    report(4, "u < v iff uw < w for Lyndon u and first factor v of w", o);
}

void criterion_nns_lyn() {
    Outcome o;
    std::size_t checked = 0;
    for_each_test_word(14, 1000, 64, 5, [&](const Word& y) {
        for (auto ord : {Ordering::normal, Ordering::inverted}) {
            ++checked;
            const auto r = check_nns_lyn(y, ord);
            if (!r.pass)
                o.fail(r.subject + " " + r.witness.value_or(""));
        }
    });
    if (o.pass)
        o.detail = std::to_string(checked) + " checks";
    report(5, "NNS over suffix ranks equals i + Lyn[i]", o);
}

void criterion_isomorphism() {
    Outcome o;
    std::size_t checked = 0;
    for (std::size_t n = 2; n <= 14; ++n) {
        for_each_word("ab", n, [&](const Word& y) {
            for (auto ord : {Ordering::normal, Ordering::inverted}) {
                if (!is_lyndon(y, ord))
                    continue;
                ++checked;
                const auto r = check_isomorphism(y, ord);
                if (!r.pass)
                    o.fail(r.subject + " " + r.witness.value_or(""));
            }
        });
    }
    if (o.pass)
        o.detail = std::to_string(checked) + " Lyndon words";
    report(6, "Lyndon tree internal nodes match the Cartesian tree of ranks", o);
}

void criterion_runs() {
    Outcome o;
    std::size_t words = 0, total = 0;
    auto check = [&](const Word& y) {
        ++words;
        const auto runs = find_runs(y);
        total += runs.size();
        if (runs != reference::naive_runs(y))
            o.fail("run sets differ on '" + y.str() + "'");
        if (runs.size() >= y.size())
            o.fail(std::to_string(runs.size()) + " runs on a word of length " +
                   std::to_string(y.size()));
        for (const Run& r : runs) {
            if (r.length() < 2 * r.period ||
                reference::naive_smallest_period(y.factor(r.start, r.end)) != r.period)
                o.fail("bad period in run of '" + y.str() + "'");
        }
    };
    for (std::size_t n = 1; n <= 12; ++n)
        for_each_word("ab", n, check);
    std::mt19937_64 rng(7);
    for (int k = 0; k < 500; ++k)
        check(testing::random_word(rng, 200, "abc"));
    if (o.pass)
        o.detail = std::to_string(words) + " words, " + std::to_string(total) + " runs";
    report(7, "find_runs equals the naive run enumeration", o);
}

double pipeline_seconds(const Word& y) {
    const auto start = Clock::now();
    const RankTable r = rank_table(y);
    const LynTable lyn = lyndon_table_ranked(y, r);
    const auto runs = find_runs(y);
    const double s = seconds_since(start);
    if (lyn.size() != y.size() || runs.size() >= y.size())
        return -1.0;
    return s;
}

void criterion_scaling() {
    Outcome o;
    std::mt19937_64 rng(2016);
    auto binary = [&](std::size_t n) {
        std::string s(n, 'a');
        for (char& c : s)
            c = (rng() & 1) ? 'b' : 'a';
        return Word(s);
    };
    const Word small = binary(std::size_t{1} << 20);
    const Word large = binary(std::size_t{1} << 21);
    double t_small = 1e9, t_large = 1e9;
    for (int rep = 0; rep < 3; ++rep) {
        t_small = std::min(t_small, pipeline_seconds(small));
        t_large = std::min(t_large, pipeline_seconds(large));
    }
    if (t_small < 0 || t_large < 0)
        o.fail("pipeline output inconsistent");
    const double ratio = t_large / t_small;
    if (ratio > 2.6)
        o.fail("growth factor " + std::to_string(ratio));
    if (t_small >= 10.0)
        o.fail("2^20 took " + std::to_string(t_small) + " s");
    if (o.pass)
        o.detail = "2^20: " + std::to_string(t_small) + " s, 2^21: " + std::to_string(t_large) +
                   " s, ratio " + std::to_string(ratio);
    report(8, "ranks + lyn + runs scale near-linearly", o);
}

} // namespace

int main() {
    criterion_golden_tables();
    criterion_cartesian_golden();
    criterion_oracles_and_counts();
    criterion_prop1();
    criterion_nns_lyn();
    criterion_isomorphism();
    criterion_runs();
    criterion_scaling();
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
