#include "ncld/word.hpp"

#include <algorithm>
#include <sstream>

#include "ncld/errors.hpp"

namespace ncld {

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

Word transpose(const Word& w) {
    Word r = w;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
}

bool deglex_less(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.letters < b.letters;
}

PairReduction reduce_pair(const Word& alpha, const Word& beta) {
    const auto na = alpha.letters.size();
    const auto nb = beta.letters.size();
    const auto n = std::min(na, nb);
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha.letters[i] != beta.letters[i])
            return {PairReduction::Kind::Zero, Word{}};
    }
    if (na <= nb) {
        Word g(std::vector<int>(beta.letters.begin() + static_cast<long>(na), beta.letters.end()));
        return {PairReduction::Kind::RightResidual, std::move(g)};
    }
    Word g(std::vector<int>(alpha.letters.begin() + static_cast<long>(nb), alpha.letters.end()));
    return {PairReduction::Kind::LeftResidual, std::move(g)};
}

std::int64_t word_count(int d, int max_len) {
    if (d < 1) throw Error("word_count: d must be >= 1");
    if (max_len < 0) return 0;
    if (d == 1) return max_len + 1;
    std::int64_t total = 0, level = 1;
    for (int n = 0; n <= max_len; ++n) {
        total += level;
        level *= d;
        if (total > (std::int64_t{1} << 40)) throw Error("word_count: basis too large");
    }
    return total;
}

std::vector<Word> enumerate_words(int d, int max_len) {
    if (d < 1) throw Error("enumerate_words: d must be >= 1");
    if (max_len < 0) throw Error("enumerate_words: max_len must be >= 0");
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(word_count(d, max_len)));
    out.emplace_back();
    std::size_t level_begin = 0, level_end = 1;
    for (int n = 1; n <= max_len; ++n) {
        // appending each letter to every length n-1 word (in order) keeps the
        // level lexicographically sorted
        std::size_t new_begin = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (int k = 1; k <= d; ++k) {
                Word w = out[i];
                w.letters.push_back(k);
                out.push_back(std::move(w));
            }
        }
        level_begin = new_begin;
        level_end = out.size();
    }
    return out;
}

std::string to_string(const Word& w, int d) {
    if (w.empty()) return "e";
    std::ostringstream os;
    if (d <= 9) {
        for (int c : w.letters) os << c;
    } else {
        for (std::size_t i = 0; i < w.letters.size(); ++i) {
            if (i) os << '.';
            os << w.letters[i];
        }
    }
    return os.str();
}

Word parse_word(const std::string& s, int d) {
    if (s == "e" || s.empty()) return Word{};
    Word w;
    if (d <= 9 && s.find('.') == std::string::npos) {
        for (char c : s) {
            if (c < '1' || c > '9') throw SpecParseError("bad word letter in '" + s + "'");
            int v = c - '0';
            if (v > d) throw SpecParseError("letter out of range in '" + s + "'");
            w.letters.push_back(v);
        }
        return w;
    }
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, '.')) {
        int v = 0;
        try {
            v = std::stoi(tok);
        } catch (...) {
            throw SpecParseError("bad word token '" + tok + "'");
        }
        if (v < 1 || v > d) throw SpecParseError("letter out of range in '" + s + "'");
        w.letters.push_back(v);
    }
    return w;
}

}  // namespace ncld
