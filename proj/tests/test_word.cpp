#include <doctest.h>

#include <random>

#include "lct/error.hpp"
#include "lct/word.hpp"
#include "support.hpp"

using namespace lct;

TEST_CASE("compare_symbols under both orderings") {
    CHECK(compare_symbols('a', 'b', Ordering::normal) == std::strong_ordering::less);
    CHECK(compare_symbols('a', 'b', Ordering::inverted) == std::strong_ordering::greater);
    CHECK(compare_symbols('a', 'a', Ordering::inverted) == std::strong_ordering::equal);

    for (int a = 0; a < 256; ++a) {
        for (int b = 0; b < 256; b += 7) {
            const auto sa = static_cast<Symbol>(a), sb = static_cast<Symbol>(b);
            CHECK(compare_symbols(sa, sb, Ordering::inverted) ==
                  compare_symbols(sb, sa, Ordering::normal));
        }
    }
}

TEST_CASE("compare_words treats a proper prefix as smaller in both orderings") {
    const Word ab("ab"), abb("abb"), b("b");
    for (auto ord : {Ordering::normal, Ordering::inverted}) {
        CHECK(compare_words(ab.symbols(), abb.symbols(), ord) < 0);
        CHECK(compare_words(abb.symbols(), abb.symbols(), ord) == 0);
    }
    CHECK(compare_words(abb.symbols(), b.symbols(), Ordering::normal) < 0);
    CHECK(compare_words(abb.symbols(), b.symbols(), Ordering::inverted) > 0);
}

TEST_CASE("text ingestion") {
    CHECK(ingest_text("abbab").size() == 5);
    CHECK(ingest_text("abbab\n").str() == "abbab");
    CHECK(ingest_text("ab\n\n").str() == "ab\n");
    CHECK(ingest_text("AbC").str() == "AbC");
    CHECK_THROWS_AS(ingest_text(""), Error);
    try {
        ingest_text("\n");
        FAIL("expected EmptyInput");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::empty_input);
    }
}

TEST_CASE("integer ingestion") {
    CHECK(ingest_integers("7,15,12") == NumSeq{7, 15, 12});
    CHECK(ingest_integers(" 7 ,\n15\t12 ") == NumSeq{7, 15, 12});
    CHECK(ingest_integers("-9223372036854775808,9223372036854775807") ==
          NumSeq{INT64_MIN, INT64_MAX});

    auto code_of = [](std::string_view raw) {
        try {
            ingest_integers(raw);
        } catch (const Error& e) {
            return e.code();
        }
        FAIL("expected an error");
        return ErrorCode::empty_input;
    };
    CHECK(code_of("") == ErrorCode::empty_input);
    CHECK(code_of(" , ") == ErrorCode::empty_input);
    CHECK(code_of("1,x") == ErrorCode::malformed_integer);
    CHECK(code_of("1.5") == ErrorCode::malformed_integer);
    CHECK(code_of("+3") == ErrorCode::malformed_integer);
    CHECK(code_of("9223372036854775808") == ErrorCode::malformed_integer);
}

TEST_CASE("ingest then serialize is the identity on canonical inputs") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        const NumSeq x = testing::random_numseq(rng, 40, INT64_MIN, INT64_MAX);
        const std::string canonical = serialize(x);
        CHECK(ingest_integers(canonical) == x);
        CHECK(serialize(ingest_integers(canonical)) == canonical);

        std::string bytes(1 + k % 17, '\0');
        for (char& c : bytes)
            c = static_cast<char>(rng() % 255 + 1);
        if (bytes.back() == '\n')
            bytes.back() = 'z';
        CHECK(serialize(ingest_text(bytes)) == bytes);
    }
}
