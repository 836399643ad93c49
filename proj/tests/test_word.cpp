#include <doctest.h>

#include "ncld/word.hpp"

using namespace ncld;

TEST_CASE("degree-lex enumeration") {
    auto w22 = enumerate_words(2, 2);
    std::vector<Word> expected = {Word{}, {1}, {2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
    CHECK(w22 == expected);

    auto w13 = enumerate_words(1, 3);
    CHECK(w13 == std::vector<Word>{Word{}, {1}, {1, 1}, {1, 1, 1}});

    CHECK(enumerate_words(3, 2).size() == 13);
    CHECK(word_count(2, 10) == 2047);
}

TEST_CASE("concat and transpose") {
    CHECK(concat(Word{1, 2}, Word{2}) == Word{1, 2, 2});
    CHECK(concat(Word{}, Word{2, 1}) == Word{2, 1});
    CHECK(concat(Word{1}, Word{}) == Word{1});

    CHECK(transpose(Word{1, 2}) == Word{2, 1});
    CHECK(transpose(Word{}) == Word{});
    CHECK(transpose(Word{1, 1, 2}) == Word{2, 1, 1});
}

TEST_CASE("reduce_pair classification") {
    auto r = reduce_pair(Word{1}, Word{1, 2});
    CHECK(r.kind == PairReduction::Kind::RightResidual);
    CHECK(r.residual == Word{2});

    r = reduce_pair(Word{1, 1}, Word{1});
    CHECK(r.kind == PairReduction::Kind::LeftResidual);
    CHECK(r.residual == Word{1});

    r = reduce_pair(Word{1}, Word{2});
    CHECK(r.kind == PairReduction::Kind::Zero);

    r = reduce_pair(Word{1, 2}, Word{1, 2});
    CHECK(r.kind == PairReduction::Kind::RightResidual);
    CHECK(r.residual == Word{});
}

TEST_CASE("reduce_pair properties over all short words") {
    auto words = enumerate_words(2, 4);
    for (const Word& a : words) {
        for (const Word& b : words) {
            auto ab = reduce_pair(a, b);
            auto ba = reduce_pair(b, a);
            // swapping arguments swaps Left/Right with the same residual
            if (ab.kind == PairReduction::Kind::Zero) {
                CHECK(ba.kind == PairReduction::Kind::Zero);
            } else if (ab.kind == PairReduction::Kind::RightResidual && !ab.residual.empty()) {
                CHECK(ba.kind == PairReduction::Kind::LeftResidual);
                CHECK(ba.residual == ab.residual);
            }
            // alpha is always a prefix of alpha.g
            auto rr = reduce_pair(a, concat(a, b));
            CHECK(rr.kind == PairReduction::Kind::RightResidual);
            CHECK(rr.residual == b);
        }
    }
}

TEST_CASE("enumeration order is total and length-consistent") {
    auto words = enumerate_words(3, 3);
    for (std::size_t i = 1; i < words.size(); ++i) {
        CHECK(deglex_less(words[i - 1], words[i]));
        CHECK(words[i - 1].length() <= words[i].length());
    }
}

TEST_CASE("serialization round trip") {
    CHECK(to_string(Word{1, 2, 1}, 2) == "121");
    CHECK(to_string(Word{}, 2) == "e");
    CHECK(to_string(Word{1, 2, 1}, 12) == "1.2.1");
    CHECK(parse_word("121", 2) == Word{1, 2, 1});
    CHECK(parse_word("e", 2) == Word{});
    CHECK(parse_word("1.2.1", 12) == Word{1, 2, 1});
    CHECK(parse_word("10.2", 12) == Word{10, 2});
    CHECK_THROWS(parse_word("13", 2));
}
