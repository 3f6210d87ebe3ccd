#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lct/cartesian.hpp"
#include "lct/lyndon.hpp"
#include "lct/word.hpp"

namespace lct {

/// Outcome of one executable property check. A failing report always carries a
/// witness, and `inputs` holds the words needed to replay it.
struct VerificationReport {
    std::string property;
    std::string subject;
    bool pass = true;
    std::optional<std::string> witness;
    Ordering ordering = Ordering::normal;
    std::vector<std::string> inputs;
    std::size_t checked = 1;
};

inline constexpr std::string_view prop_first_factor = "prop1";
inline constexpr std::string_view prop_nns_lyn = "nns_lyn";
inline constexpr std::string_view prop_isomorphism = "isomorphism";

/// For Lyndon u and v the first Lyndon factor of w: (u < v) == (uw < w).
/// Throws NotLyndon.
VerificationReport check_prop1(const Word& u, const Word& w, Ordering ord = Ordering::normal);

/// NNS over the suffix ranks equals i + lyn[i] at every position.
VerificationReport check_nns_lyn(const Word& y, Ordering ord = Ordering::normal);

/// Tree on the n-1 internal nodes of a Lyndon tree. The internal node whose
/// right child starts at local position s becomes position s-1. Throws SingleLeaf.
PosTree internal_projection(const LyndonTree& t);

/// Lyndon tree (letter comparisons) projected on its internal nodes versus the
/// Cartesian tree of rank[1..n-1]. Throws NotLyndon.
VerificationReport check_isomorphism(const Word& y, Ordering ord = Ordering::normal);

/// First difference between two position trees, if any.
std::optional<std::string> tree_difference(const PosTree& a, const PosTree& b);

/// Re-runs the check recorded in a report on its stored inputs.
VerificationReport replay(const VerificationReport& report);

struct SuiteLimits {
    std::size_t prop1_max_len = 6;
    std::size_t nns_lyn_max_len = 14;
    std::size_t nns_lyn_random_words = 1000;
    std::size_t nns_lyn_random_max_len = 64;
    std::size_t isomorphism_max_len = 14;
    std::uint64_t seed = 20161104;
};

/// Exhaustive and randomized suites for the three properties, under both
/// orderings. One aggregated report per property and ordering.
std::vector<VerificationReport> run_builtin_suites(const SuiteLimits& limits = {});

/// Checks applicable to a single word: NNS/Lyn identity, the isomorphism when
/// y is Lyndon with n >= 2, and the first-factor property for every pair
/// (longest Lyndon factor at i, remaining suffix).
std::vector<VerificationReport> verify_word(const Word& y, Ordering ord);

/// Calls fn on every word of length n over the given alphabet, in lexicographic order.
template <typename Fn>
void for_each_word(std::string_view alphabet, std::size_t n, Fn&& fn) {
    std::vector<std::size_t> digits(n, 0);
    std::string text(n, alphabet.empty() ? '\0' : alphabet[0]);
    if (alphabet.empty())
        return;
    while (true) {
        fn(Word(text));
        std::size_t k = n;
        while (k > 0 && digits[k - 1] + 1 == alphabet.size()) {
            digits[k - 1] = 0;
            text[k - 1] = alphabet[0];
            --k;
        }
        if (k == 0)
            return;
        ++digits[k - 1];
        text[k - 1] = alphabet[digits[k - 1]];
    }
}

} // namespace lct
