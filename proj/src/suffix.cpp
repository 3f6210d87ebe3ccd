#include "lct/suffix.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "lct/error.hpp"

namespace lct {

namespace {

// Reads a byte word through the alphabet order: inverted maps c to 255 - c,
// which reverses every strict comparison without copying the word.
struct OrderedView {
    std::span<const Symbol> symbols;
    Ordering ord;

    std::int32_t operator[](std::size_t i) const noexcept {
        return ord == Ordering::normal ? symbols[i] : 255 - symbols[i];
    }
    std::size_t size() const noexcept { return symbols.size(); }
};

template <typename Seq>
std::vector<std::int32_t> sort_suffixes_naive(const Seq& s) {
    const auto n = static_cast<std::int32_t>(s.size());
    std::vector<std::int32_t> sa(n);
    std::iota(sa.begin(), sa.end(), 0);
    std::sort(sa.begin(), sa.end(), [&](std::int32_t a, std::int32_t b) {
        while (a < n && b < n) {
            if (s[a] != s[b])
                return s[a] < s[b];
            ++a;
            ++b;
        }
        return a == n;
    });
    return sa;
}

// Induced sorting over integer symbols in [0, upper]. The end of the text acts
// as a virtual sentinel smaller than every symbol.
template <typename Seq>
std::vector<std::int32_t> sa_is(const Seq& s, std::int32_t upper) {
    const auto n = static_cast<std::int32_t>(s.size());
    if (n < 10)
        return sort_suffixes_naive(s);

    std::vector<std::int32_t> sa(n);
    std::vector<bool> stype(n, false);
    for (std::int32_t i = n - 2; i >= 0; --i)
        stype[i] = (s[i] == s[i + 1]) ? stype[i + 1] : (s[i] < s[i + 1]);

    std::vector<std::int32_t> sum_l(upper + 2, 0), sum_s(upper + 2, 0);
    for (std::int32_t i = 0; i < n; ++i) {
        if (!stype[i])
            ++sum_s[s[i]];
        else
            ++sum_l[s[i] + 1];
    }
    for (std::int32_t c = 0; c <= upper; ++c) {
        sum_s[c] += sum_l[c];
        if (c < upper)
            sum_l[c + 1] += sum_s[c];
    }

    auto induce = [&](const std::vector<std::int32_t>& lms) {
        std::fill(sa.begin(), sa.end(), -1);
        std::vector<std::int32_t> buf(upper + 2);
        std::copy(sum_s.begin(), sum_s.end(), buf.begin());
        for (std::int32_t d : lms) {
            if (d != n)
                sa[buf[s[d]]++] = d;
        }
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        sa[buf[s[n - 1]]++] = n - 1;
        for (std::int32_t k = 0; k < n; ++k) {
            const std::int32_t v = sa[k];
            if (v >= 1 && !stype[v - 1])
                sa[buf[s[v - 1]]++] = v - 1;
        }
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        for (std::int32_t k = n - 1; k >= 0; --k) {
            const std::int32_t v = sa[k];
            if (v >= 1 && stype[v - 1])
                sa[--buf[s[v - 1] + 1]] = v - 1;
        }
    };

    std::vector<std::int32_t> lms_index(n + 1, -1);
    std::vector<std::int32_t> lms;
    for (std::int32_t i = 1; i < n; ++i) {
        if (!stype[i - 1] && stype[i]) {
            lms_index[i] = static_cast<std::int32_t>(lms.size());
            lms.push_back(i);
        }
    }
    const auto m = static_cast<std::int32_t>(lms.size());

    induce(lms);

    if (m > 0) {
        std::vector<std::int32_t> sorted_lms;
        sorted_lms.reserve(m);
        for (std::int32_t v : sa) {
            if (lms_index[v] != -1)
                sorted_lms.push_back(v);
        }
        // Name LMS substrings; equal names mean identical substrings.
        std::vector<std::int32_t> reduced(m);
        std::int32_t name = 0;
        reduced[lms_index[sorted_lms[0]]] = 0;
        for (std::int32_t k = 1; k < m; ++k) {
            std::int32_t l = sorted_lms[k - 1], r = sorted_lms[k];
            const std::int32_t end_l = (lms_index[l] + 1 < m) ? lms[lms_index[l] + 1] : n;
            const std::int32_t end_r = (lms_index[r] + 1 < m) ? lms[lms_index[r] + 1] : n;
            bool same = true;
            if (end_l - l != end_r - r) {
                same = false;
            } else {
                while (l < end_l && s[l] == s[r]) {
                    ++l;
                    ++r;
                }
                if (l == n || s[l] != s[r])
                    same = false;
            }
            if (!same)
                ++name;
            reduced[lms_index[sorted_lms[k]]] = name;
        }

        const auto reduced_sa = sa_is(reduced, name);
        for (std::int32_t k = 0; k < m; ++k)
            sorted_lms[k] = lms[reduced_sa[k]];
        induce(sorted_lms);
    }
    return sa;
}

} // namespace

std::vector<Pos> suffix_array(const Word& y, Ordering ord) {
    require_non_empty(y.size(), "suffix_array");
    if (y.size() >= static_cast<std::size_t>(INT32_MAX))
        throw Error(ErrorCode::out_of_range, "word too long for 32-bit suffix sorting");
    const auto sa = sa_is(OrderedView{y.symbols(), ord}, 255);
    return {sa.begin(), sa.end()};
}

RankTable rank_table(const Word& y, Ordering ord) {
    require_non_empty(y.size(), "rank_table");
    const auto sa = suffix_array(y, ord);
    RankTable r;
    r.ordering = ord;
    r.rank.resize(sa.size());
    for (Pos k = 0; k < sa.size(); ++k)
        r.rank[sa[k]] = k;
    return r;
}

bool is_permutation(std::span<const Pos> values) {
    std::vector<bool> seen(values.size(), false);
    for (Pos v : values) {
        if (v >= values.size() || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

std::vector<Pos> suffix_order(std::span<const Pos> rank) {
    if (rank.empty() || !is_permutation(rank))
        throw Error(ErrorCode::not_a_permutation,
                    "rank table of length " + std::to_string(rank.size()) +
                        " is not a permutation of 0..n-1");
    std::vector<Pos> order(rank.size());
    for (Pos i = 0; i < rank.size(); ++i)
        order[rank[i]] = i;
    return order;
}

} // namespace lct
