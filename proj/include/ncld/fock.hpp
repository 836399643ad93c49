#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "ncld/word.hpp"

namespace ncld {

using Complex = std::complex<double>;
using SparseCd = Eigen::SparseMatrix<Complex>;

/// Fock space truncated at word length N; basis in degree-lex order so the
/// level-(N-1) space is the leading block of the level-N space.
struct FockTruncation {
    int d = 1;
    int N = 0;
    std::vector<Word> basis;
    std::unordered_map<Word, int, WordHash> index;

    FockTruncation(int d_, int N_);

    int dim() const { return static_cast<int>(basis.size()); }
    /// Index of w in the basis, -1 if |w| > N.
    int index_of(const Word& w) const;
};

enum class ShiftSide { Left, Right };

/// L_k: e_a -> e_{ka}; words of length N map to zero.
SparseCd left_shift_matrix(int k, const FockTruncation& T);
/// R_k: e_a -> e_{ak}; words of length N map to zero.
SparseCd right_shift_matrix(int k, const FockTruncation& T);
/// Permutation e_a -> e_{a^t} (word reversal); an involution.
SparseCd transpose_unitary(const FockTruncation& T);

/// Apply L^w (or R^w) to v. In strict mode, throws TruncationOverflow if any
/// nonzero coefficient of v would be pushed past length N.
Eigen::VectorXcd apply_word(const FockTruncation& T, ShiftSide side, const Word& w,
                            const Eigen::VectorXcd& v, bool strict = true);

/// Coordinate-format dump: one "row,col,re,im" line per stored entry.
void write_coordinate_csv(std::ostream& os, const SparseCd& m);

}  // namespace ncld
