#pragma once

#include <random>
#include <string>
#include <vector>

#include "lct/word.hpp"

namespace lct::testing {

inline const std::string paper_word = "abbabaababbabaab";
inline const std::vector<std::int64_t> paper_sequence{7, 15, 12, 4, 10, 1, 5, 13,
                                                      6, 14, 11, 3, 9,  0, 2, 8};
inline const std::vector<Pos> paper_nns{3, 2, 3, 5, 5, 13, 11, 8, 11, 10, 11, 13, 13, 16, 16, 16};
inline const std::vector<Pos> paper_lyn{3, 1, 1, 2, 1, 8, 5, 1, 3, 1, 1, 2, 1, 3, 2, 1};
inline const std::vector<Pos> paper_rank{7, 15, 12, 4, 10, 1, 5, 13, 6, 14, 11, 3, 9, 0, 2, 8};

inline Word random_word(std::mt19937_64& rng, std::size_t max_len, std::string_view alphabet,
                        std::size_t min_len = 1) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string s(len(rng), alphabet[0]);
    for (char& c : s)
        c = alphabet[pick(rng)];
    return Word(s);
}

inline NumSeq random_numseq(std::mt19937_64& rng, std::size_t max_len, std::int64_t lo,
                            std::int64_t hi) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<std::int64_t> value(lo, hi);
    std::vector<std::int64_t> v(len(rng));
    for (auto& x : v)
        x = value(rng);
    return NumSeq(std::move(v));
}

inline Word complement_ab(const Word& y) {
    std::string s = y.str();
    for (char& c : s)
        c = (c == 'a') ? 'b' : 'a';
    return Word(s);
}

} // namespace lct::testing
