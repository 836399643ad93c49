#pragma once

#include <Eigen/Dense>
#include <unordered_map>
#include <vector>

#include "ncld/measure.hpp"
#include "ncld/word.hpp"

namespace ncld {

/// A d-tuple of n x n matrices; series are evaluated only at strict row
/// contractions (row norm < 1).
struct MatrixPoint {
    std::vector<Eigen::MatrixXcd> Z;

    static MatrixPoint scalar(const std::vector<Complex>& z);

    int n() const { return Z.empty() ? 0 : static_cast<int>(Z[0].rows()); }
    int d() const { return static_cast<int>(Z.size()); }
    /// Operator norm of the row [Z_1 ... Z_d].
    double row_norm() const;
};

/// Z^a = Z_{a_1} ... Z_{a_m}; identity for the empty word.
Eigen::MatrixXcd word_eval(const MatrixPoint& p, const Word& w);

struct KernelEvaluation {
    Eigen::MatrixXcd value;
    double tail_bound = 0.0;
};

/// Free polynomial p(L) = sum p_hat(w) L^w given by its coefficient table.
struct FreePolynomial {
    int d = 1;
    std::unordered_map<Word, Complex, WordHash> coeffs;

    int degree() const;
    double coeff_l1() const;
};

/// H_mu(Z) = mu(I) I_n + 2 sum_{a != empty, |a| <= M} Z^a conj(mu(L^{a^t})).
KernelEvaluation herglotz_eval(const MomentTable& mu, const MatrixPoint& z, int M);

/// Free Cauchy transform (C_mu p)(Z) = sum_{|a| <= M} Z^a mu((L^a)* p(L)).
KernelEvaluation cauchy_eval(const MomentTable& mu, const FreePolynomial& p,
                             const MatrixPoint& z, int M);

/// Szego kernel K(Z,W)[P] = sum_{|a| <= M} Z^a P (W^a)*.
KernelEvaluation szego_kernel_eval(const MatrixPoint& z, const MatrixPoint& w,
                                   const Eigen::MatrixXcd& p, int M);

/// Herglotz kernel K^H(Z,W)[P] = 1/2 K(Z,W)[H(Z) P + P H(W)*].
KernelEvaluation herglotz_kernel_eval(const MomentTable& mu, const MatrixPoint& z,
                                      const MatrixPoint& w, const Eigen::MatrixXcd& p, int M);

/// Cayley transform B(Z) = (H(Z) - I)(H(Z) + I)^{-1}, a Schur-class value.
Eigen::MatrixXcd cayley_to_schur(const MomentTable& mu, const MatrixPoint& z, int M);

struct DominationReport {
    bool holds = false;
    double min_eigenvalue = 0.0;
};

/// mu <= t^2 lambda at level N, tested as Gram(t^2 lambda - mu) PSD.
DominationReport domination_check(const MomentTable& mu, const MomentTable& lambda, double t,
                                  int N, double tol = 1e-10);

}  // namespace ncld
