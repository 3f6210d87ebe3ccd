#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lct {

using Symbol = std::uint8_t;

/// Positions and lengths on words and sequences.
using Pos = std::size_t;

/// Selects the alphabet order. Inverted flips every strict symbol comparison.
enum class Ordering { normal, inverted };

std::string_view to_string(Ordering ord) noexcept;

constexpr std::strong_ordering compare_symbols(Symbol a, Symbol b, Ordering ord) noexcept {
    return ord == Ordering::normal ? a <=> b : b <=> a;
}

constexpr bool symbol_less(Symbol a, Symbol b, Ordering ord) noexcept {
    return ord == Ordering::normal ? a < b : b < a;
}

/// Lexicographic comparison of two symbol strings; a proper prefix is smaller.
std::strong_ordering compare_words(std::span<const Symbol> a, std::span<const Symbol> b,
                                   Ordering ord) noexcept;

/// A word over the byte alphabet. Bytes are kept verbatim.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
    explicit Word(std::string_view text) : symbols_(text.begin(), text.end()) {}

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](Pos i) const noexcept { return symbols_[i]; }

    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    std::span<const Symbol> factor(Pos first, Pos last) const noexcept {
        return std::span<const Symbol>(symbols_).subspan(first, last - first + 1);
    }
    std::span<const Symbol> suffix(Pos i) const noexcept {
        return std::span<const Symbol>(symbols_).subspan(i);
    }

    std::string str() const { return {symbols_.begin(), symbols_.end()}; }
    Word reversed() const { return Word(std::vector<Symbol>(symbols_.rbegin(), symbols_.rend())); }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Symbol> symbols_;
};

/// A sequence of signed 64-bit numbers. The -infinity sentinel is never stored.
class NumSeq {
public:
    NumSeq() = default;
    explicit NumSeq(std::vector<std::int64_t> values) : values_(std::move(values)) {}
    NumSeq(std::initializer_list<std::int64_t> values) : values_(values) {}

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    std::int64_t operator[](Pos i) const noexcept { return values_[i]; }
    std::span<const std::int64_t> values() const noexcept { return values_; }

    friend bool operator==(const NumSeq&, const NumSeq&) = default;

private:
    std::vector<std::int64_t> values_;
};

/// Text ingestion: drops a single trailing newline, rejects an empty payload.
Word ingest_text(std::string_view raw);

/// Integer ingestion: signed decimal tokens separated by commas and/or whitespace.
NumSeq ingest_integers(std::string_view raw);

std::string serialize(const Word& w);
/// Canonical comma-separated form, e.g. "7,15,12".
std::string serialize(const NumSeq& x);

void require_non_empty(std::size_t n, std::string_view what);

/// Instrumentation for algorithms whose comparison count is part of their contract.
struct OpStats {
    std::size_t comparisons = 0;
};

} // namespace lct
