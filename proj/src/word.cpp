#include "lct/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "lct/error.hpp"

namespace lct {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::malformed_integer: return "MalformedInteger";
    case ErrorCode::inconsistent_tree: return "InconsistentTree";
    case ErrorCode::not_a_permutation: return "NotAPermutation";
    case ErrorCode::rank_mismatch: return "RankMismatch";
    case ErrorCode::not_lyndon: return "NotLyndon";
    case ErrorCode::table_mismatch: return "TableMismatch";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::index_mismatch: return "IndexMismatch";
    case ErrorCode::single_leaf: return "SingleLeaf";
    }
    return "Unknown";
}

std::string_view to_string(Ordering ord) noexcept {
    return ord == Ordering::normal ? "normal" : "inverted";
}

std::strong_ordering compare_words(std::span<const Symbol> a, std::span<const Symbol> b,
                                   Ordering ord) noexcept {
    const std::size_t m = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < m; ++k) {
        if (a[k] != b[k])
            return compare_symbols(a[k], b[k], ord);
    }
    return a.size() <=> b.size();
}

void require_non_empty(std::size_t n, std::string_view what) {
    if (n == 0)
        throw Error(ErrorCode::empty_input, std::string(what) + " requires a non-empty input");
}

Word ingest_text(std::string_view raw) {
    if (!raw.empty() && raw.back() == '\n')
        raw.remove_suffix(1);
    require_non_empty(raw.size(), "text ingestion");
    return Word(raw);
}

NumSeq ingest_integers(std::string_view raw) {
    auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    std::vector<std::int64_t> values;
    std::size_t k = 0;
    while (k < raw.size()) {
        if (is_sep(raw[k])) {
            ++k;
            continue;
        }
        std::size_t end = k;
        while (end < raw.size() && !is_sep(raw[end]))
            ++end;
        const std::string_view token = raw.substr(k, end - k);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw Error(ErrorCode::malformed_integer, "'" + std::string(token) + "'");
        values.push_back(value);
        k = end;
    }
    require_non_empty(values.size(), "integer ingestion");
    return NumSeq(std::move(values));
}

std::string serialize(const Word& w) { return w.str(); }

std::string serialize(const NumSeq& x) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(x[i]);
    }
    return out;
}

} // namespace lct
