#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ncld/measure.hpp"
#include "ncld/word.hpp"

namespace ncld {

/// Gram matrix of mu over words of length <= N:
/// G[a,b] = mu(L^g) if b = a.g, conj(mu(L^g)) if a = b.g, 0 otherwise.
Eigen::MatrixXcd gram_matrix(const MomentTable& mu, int N);

/// Finite-level GNS quotient. The factor F (rank x dim) satisfies
/// F^* F ~ gram; coordinates of the class of a coefficient vector c are F c,
/// and the Euclidean inner product of coordinates is the GNS inner product.
struct GnsSpace {
    MomentTable mu;
    int N = 0;
    double rank_tol = 0.0;  // absolute threshold actually used
    std::vector<Word> words;
    Eigen::MatrixXcd gram;
    Eigen::MatrixXcd factor;  // rank x dim
    Eigen::VectorXcd cyclic;  // class of the empty word
    double gram_min_eig = 0.0;

    int rank() const { return static_cast<int>(factor.rows()); }
    int interior_dim_words() const;  // number of basis words of length <= N-1
    /// Quotient coordinates of the class of a word (must have length <= N).
    Eigen::VectorXcd class_of(const Word& w) const;
};

GnsSpace gns_space(const MomentTable& mu, int N, double rank_tol_rel = 1e-10);

/// GNS row isometry matrices in quotient coordinates, with an orthonormal
/// basis of the interior subspace (span of classes of words <= N-1) used for
/// all defect compressions.
struct GnsRowIsometry {
    std::vector<Eigen::MatrixXcd> pi;      // d matrices, rank x rank
    Eigen::MatrixXcd interior_basis;       // rank x m, orthonormal columns
    double isometry_defect = 0.0;          // max_kj || U*(Pi_k* Pi_j - d_kj I)U ||
};

GnsRowIsometry gns_row_isometry(const GnsSpace& g);

struct WanderingReport {
    bool is_wandering = false;
    double max_violation = 0.0;
    double norm = 0.0;
};

/// Checks <v, Pi^a v> = ||v||^2 d_{a,empty} for all nonempty |a| <= depth.
WanderingReport wandering_test(const GnsSpace& g, const GnsRowIsometry& iso,
                               const Eigen::VectorXcd& v, int depth, double tol = 1e-10);

/// GNS-norm distance from the class of the empty word to the closed span of
/// classes of nonempty words.
double column_extreme_distance(const GnsSpace& g);
/// Same computation from a Gram matrix alone (avoids the eigendecomposition
/// cost of building a GnsSpace for large N).
double column_extreme_distance(const Eigen::MatrixXcd& gram);

/// Operator norm of (I - sum_k Pi_k Pi_k*) compressed to the interior.
double cuntz_defect(const GnsSpace& g, const GnsRowIsometry& iso);

}  // namespace ncld
