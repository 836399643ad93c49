#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ncld {

/// A word in the free monoid on d generators; letters are 1-based.
/// The empty word is the monoid unit.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> l) : letters(std::move(l)) {}
    Word(std::initializer_list<int> l) : letters(l) {}

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }

    bool operator==(const Word&) const = default;
};

Word concat(const Word& a, const Word& b);
Word transpose(const Word& w);

/// Degree-lexicographic order: shorter words first, then lexicographic.
bool deglex_less(const Word& a, const Word& b);

/// Classification of (L^alpha)* L^beta under the row-isometry relations
/// L_k* L_j = delta_{kj} I:
///   RightResidual(g): beta = alpha.g, the product equals L^g
///   LeftResidual(g):  alpha = beta.g with g nonempty, the product equals (L^g)*
///   Zero:             neither word is a prefix of the other
struct PairReduction {
    enum class Kind { RightResidual, LeftResidual, Zero };
    Kind kind = Kind::Zero;
    Word residual;
};

PairReduction reduce_pair(const Word& alpha, const Word& beta);

/// Number of words of length <= max_len over d letters.
std::int64_t word_count(int d, int max_len);

/// All words of length <= max_len in degree-lex order.
std::vector<Word> enumerate_words(int d, int max_len);

/// Serialization: "e" for the empty word, concatenated digits for d <= 9,
/// dot-separated integers otherwise.
std::string to_string(const Word& w, int d);
Word parse_word(const std::string& s, int d);

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int c : w.letters) h = h * 1099511628211ull + static_cast<std::size_t>(c);
        return h;
    }
};

}  // namespace ncld
