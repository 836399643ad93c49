#include "ncld/fock.hpp"

#include <cmath>

#include "ncld/errors.hpp"

namespace ncld {

FockTruncation::FockTruncation(int d_, int N_) : d(d_), N(N_) {
    basis = enumerate_words(d, N);
    index.reserve(basis.size());
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) index.emplace(basis[i], i);
}

int FockTruncation::index_of(const Word& w) const {
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
}

namespace {

SparseCd shift_matrix(int k, const FockTruncation& T, ShiftSide side) {
    if (k < 1 || k > T.d) throw Error("shift_matrix: letter out of range");
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(static_cast<std::size_t>(word_count(T.d, T.N - 1)));
    Word gen{std::vector<int>{k}};
    for (int i = 0; i < T.dim(); ++i) {
        const Word& a = T.basis[i];
        if (a.length() >= T.N) continue;
        Word target = side == ShiftSide::Left ? concat(gen, a) : concat(a, gen);
        trip.emplace_back(T.index_of(target), i, Complex{1.0, 0.0});
    }
    SparseCd m(T.dim(), T.dim());
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

}  // namespace

SparseCd left_shift_matrix(int k, const FockTruncation& T) {
    return shift_matrix(k, T, ShiftSide::Left);
}

SparseCd right_shift_matrix(int k, const FockTruncation& T) {
    return shift_matrix(k, T, ShiftSide::Right);
}

SparseCd transpose_unitary(const FockTruncation& T) {
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(static_cast<std::size_t>(T.dim()));
    for (int i = 0; i < T.dim(); ++i)
        trip.emplace_back(T.index_of(transpose(T.basis[i])), i, Complex{1.0, 0.0});
    SparseCd m(T.dim(), T.dim());
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

Eigen::VectorXcd apply_word(const FockTruncation& T, ShiftSide side, const Word& w,
                            const Eigen::VectorXcd& v, bool strict) {
    if (v.size() != T.dim()) throw Error("apply_word: vector dimension mismatch");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(T.dim());
    for (int i = 0; i < T.dim(); ++i) {
        if (v[i] == Complex{0.0, 0.0}) continue;
        const Word& a = T.basis[i];
        if (a.length() + w.length() > T.N) {
            if (strict)
                throw TruncationOverflow("apply_word: support pushed past truncation level");
            continue;
        }
        Word target = side == ShiftSide::Left ? concat(w, a) : concat(a, w);
        out[T.index_of(target)] += v[i];
    }
    return out;
}

void write_coordinate_csv(std::ostream& os, const SparseCd& m) {
    os << "row,col,re,im\n";
    for (int j = 0; j < m.outerSize(); ++j)
        for (SparseCd::InnerIterator it(m, j); it; ++it)
            os << it.row() << ',' << it.col() << ',' << it.value().real() << ','
               << it.value().imag() << '\n';
}

}  // namespace ncld
