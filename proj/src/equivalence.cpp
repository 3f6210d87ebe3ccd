#include "lct/equivalence.hpp"

#include <random>
#include <sstream>

#include "lct/error.hpp"
#include "lct/suffix.hpp"

namespace lct {

namespace {

std::string join(const std::vector<Pos>& values) {
    std::ostringstream out;
    out << '[';
    for (std::size_t k = 0; k < values.size(); ++k)
        out << (k ? "," : "") << values[k];
    out << ']';
    return out.str();
}

std::string describe(Pos p) { return p == no_pos ? "none" : std::to_string(p); }

VerificationReport make_report(std::string_view property, std::string subject, Ordering ord,
                               std::vector<std::string> inputs) {
    VerificationReport r;
    r.property = std::string(property);
    r.subject = std::move(subject);
    r.ordering = ord;
    r.inputs = std::move(inputs);
    return r;
}

void fail(VerificationReport& r, std::string witness) {
    r.pass = false;
    r.witness = std::move(witness);
}

std::string concat(const Word& a, const Word& b) { return a.str() + b.str(); }

} // namespace

VerificationReport check_prop1(const Word& u, const Word& w, Ordering ord) {
    require_non_empty(u.size(), "check_prop1");
    require_non_empty(w.size(), "check_prop1");
    if (!is_lyndon(u, ord))
        throw Error(ErrorCode::not_lyndon, "u = '" + u.str() + "' is not a Lyndon word");
    auto report = make_report(prop_first_factor, "u=" + u.str() + " w=" + w.str(), ord,
                              {u.str(), w.str()});

    const auto factors = cfl_factorize(w, lyndon_table_ranked(w, rank_table(w, ord)));
    const auto v = w.factor(factors.front().first, factors.front().last);
    const Word uw(concat(u, w));
    const bool local = compare_words(u.symbols(), v, ord) < 0;
    const bool global = compare_words(uw.symbols(), w.symbols(), ord) < 0;
    if (local != global) {
        fail(report, "v=" + std::string(v.begin(), v.end()) + " u<v=" + (local ? "1" : "0") +
                         " uw<w=" + (global ? "1" : "0"));
    }
    return report;
}

VerificationReport check_nns_lyn(const Word& y, Ordering ord) {
    require_non_empty(y.size(), "check_nns_lyn");
    auto report = make_report(prop_nns_lyn, y.str(), ord, {y.str()});
    const RankTable r = rank_table(y, ord);
    const NnsTable nns = nns_table(NumSeq(std::vector<std::int64_t>(r.rank.begin(), r.rank.end())));
    const LynTable lyn = lyndon_table_letters(y, ord);
    for (Pos i = 0; i < y.size(); ++i) {
        if (nns[i] != i + lyn[i]) {
            fail(report, "i=" + std::to_string(i) + " nns=" + std::to_string(nns[i]) +
                             " i+lyn=" + std::to_string(i + lyn[i]) + " rank=" + join(r.rank));
            break;
        }
    }
    return report;
}

PosTree internal_projection(const LyndonTree& t) {
    const std::size_t n = t.leaves;
    if (n < 2)
        throw Error(ErrorCode::single_leaf, "a single-leaf Lyndon tree has no internal node");
    // Internal node id n-1+s maps to position s-1, i.e. id - n.
    auto project = [&](Pos id) { return (id == no_pos || t.is_leaf(id)) ? no_pos : id - n; };
    PosTree p;
    p.parent.assign(n - 1, no_pos);
    p.left.assign(n - 1, no_pos);
    p.right.assign(n - 1, no_pos);
    for (Pos id = n; id < t.node_count(); ++id) {
        const Pos k = id - n;
        p.parent[k] = project(t.parent[id]);
        p.left[k] = project(t.left[id]);
        p.right[k] = project(t.right[id]);
    }
    p.root = project(t.root);
    return p;
}

std::optional<std::string> tree_difference(const PosTree& a, const PosTree& b) {
    if (a.size() != b.size())
        return "sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size());
    if (a.root != b.root)
        return "roots " + describe(a.root) + " and " + describe(b.root);
    for (Pos k = 0; k < a.size(); ++k) {
        if (a.parent[k] != b.parent[k] || a.left[k] != b.left[k] || a.right[k] != b.right[k]) {
            return "node " + std::to_string(k) + ": (parent,left,right) = (" +
                   describe(a.parent[k]) + "," + describe(a.left[k]) + "," +
                   describe(a.right[k]) + ") vs (" + describe(b.parent[k]) + "," +
                   describe(b.left[k]) + "," + describe(b.right[k]) + ")";
        }
    }
    return std::nullopt;
}

VerificationReport check_isomorphism(const Word& y, Ordering ord) {
    require_non_empty(y.size(), "check_isomorphism");
    if (!is_lyndon(y, ord))
        throw Error(ErrorCode::not_lyndon, "'" + y.str() + "' is not a Lyndon word");
    auto report = make_report(prop_isomorphism, y.str(), ord, {y.str()});
    const PosTree projection =
        internal_projection(lyndon_tree(y, ord, PhraseCompare::letters));

    const RankTable r = rank_table(y, ord);
    if (!is_permutation(r.rank)) {
        fail(report, "suffix ranks are not distinct: " + join(r.rank));
        return report;
    }
    const NumSeq tail(std::vector<std::int64_t>(r.rank.begin() + 1, r.rank.end()));
    const PosTree cartesian = build_cartesian(tail);
    if (auto diff = tree_difference(projection, cartesian))
        fail(report, "projection vs Cartesian tree of ranks, " + *diff);
    return report;
}

VerificationReport replay(const VerificationReport& report) {
    if (report.property == prop_first_factor && report.inputs.size() == 2)
        return check_prop1(Word(report.inputs[0]), Word(report.inputs[1]), report.ordering);
    if (report.property == prop_nns_lyn && report.inputs.size() == 1)
        return check_nns_lyn(Word(report.inputs[0]), report.ordering);
    if (report.property == prop_isomorphism && report.inputs.size() == 1)
        return check_isomorphism(Word(report.inputs[0]), report.ordering);
    throw std::invalid_argument("report '" + report.property + "' cannot be replayed");
}

namespace {

// Folds one case into an aggregate; the first failure becomes the aggregate's witness.
void absorb(VerificationReport& total, const VerificationReport& one) {
    ++total.checked;
    if (!one.pass && total.pass) {
        total.pass = false;
        total.witness = one.subject + ": " + one.witness.value_or("");
        total.inputs = one.inputs;
    }
}

VerificationReport aggregate(std::string_view property, std::string subject, Ordering ord) {
    auto r = make_report(property, std::move(subject), ord, {});
    r.checked = 0;
    return r;
}

} // namespace

std::vector<VerificationReport> run_builtin_suites(const SuiteLimits& limits) {
    std::vector<VerificationReport> out;
    for (Ordering ord : {Ordering::normal, Ordering::inverted}) {
        auto prop1 = aggregate(prop_first_factor,
                               "Lyndon u x w over {a,b}, |u|,|w| <= " +
                                   std::to_string(limits.prop1_max_len),
                               ord);
        std::vector<Word> lyndon_words, all_words;
        for (std::size_t n = 1; n <= limits.prop1_max_len; ++n) {
            for_each_word("ab", n, [&](const Word& w) {
                all_words.push_back(w);
                if (is_lyndon(w, ord))
                    lyndon_words.push_back(w);
            });
        }
        for (const auto& u : lyndon_words) {
            for (const auto& w : all_words)
                absorb(prop1, check_prop1(u, w, ord));
        }
        out.push_back(std::move(prop1));

        auto nns_lyn = aggregate(prop_nns_lyn,
                                 "binary words n <= " + std::to_string(limits.nns_lyn_max_len) +
                                     ", " + std::to_string(limits.nns_lyn_random_words) +
                                     " ternary words n <= " +
                                     std::to_string(limits.nns_lyn_random_max_len),
                                 ord);
        for (std::size_t n = 1; n <= limits.nns_lyn_max_len; ++n)
            for_each_word("ab", n, [&](const Word& y) { absorb(nns_lyn, check_nns_lyn(y, ord)); });
        std::mt19937_64 rng(limits.seed);
        std::uniform_int_distribution<std::size_t> len(1, limits.nns_lyn_random_max_len);
        std::uniform_int_distribution<int> letter(0, 2);
        for (std::size_t k = 0; k < limits.nns_lyn_random_words; ++k) {
            std::string text(len(rng), 'a');
            for (char& c : text)
                c = static_cast<char>('a' + letter(rng));
            absorb(nns_lyn, check_nns_lyn(Word(text), ord));
        }
        out.push_back(std::move(nns_lyn));

        auto iso = aggregate(prop_isomorphism,
                             "binary Lyndon words 2 <= n <= " +
                                 std::to_string(limits.isomorphism_max_len),
                             ord);
        for (std::size_t n = 2; n <= limits.isomorphism_max_len; ++n) {
            for_each_word("ab", n, [&](const Word& y) {
                if (is_lyndon(y, ord))
                    absorb(iso, check_isomorphism(y, ord));
            });
        }
        out.push_back(std::move(iso));
    }
    return out;
}

std::vector<VerificationReport> verify_word(const Word& y, Ordering ord) {
    require_non_empty(y.size(), "verify_word");
    std::vector<VerificationReport> out;
    out.push_back(check_nns_lyn(y, ord));
    if (y.size() >= 2 && is_lyndon(y, ord))
        out.push_back(check_isomorphism(y, ord));

    auto prop1 = aggregate(prop_first_factor, "longest Lyndon factor at i against y[i+lyn[i]..]",
                           ord);
    const LynTable lyn = lyndon_table_letters(y, ord);
    for (Pos i = 0; i + lyn[i] < y.size(); ++i) {
        const Word u(std::vector<Symbol>(y.factor(i, i + lyn[i] - 1).begin(),
                                         y.factor(i, i + lyn[i] - 1).end()));
        const Word w(std::vector<Symbol>(y.suffix(i + lyn[i]).begin(), y.suffix(i + lyn[i]).end()));
        absorb(prop1, check_prop1(u, w, ord));
    }
    out.push_back(std::move(prop1));
    return out;
}

} // namespace lct
