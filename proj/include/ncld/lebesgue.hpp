#pragma once

#include <Eigen/Dense>
#include <string>

#include "ncld/fock.hpp"
#include "ncld/measure.hpp"
#include "ncld/transforms.hpp"

namespace ncld {

struct DecompositionResult {
    MomentTable mu_ac;
    MomentTable mu_s;
    Eigen::VectorXd pencil_spectrum;  // ascending, all in (0, 1]
    int singular_rank = 0;
    double threshold = 0.0;
    int N = 0;
    int N_out = 0;
};

/// Default pencil threshold. 10/N separates the singular modes (which decay
/// like O(1/N)) from stable AC modes, capped below the AC plateau for small N.
double default_threshold(int N);

/// Lebesgue decomposition mu = mu_ac + mu_s against NC Lebesgue measure.
/// Works on lambda = mu + m: directions whose Fock norm is small relative to
/// their GNS(lambda) norm (pencil eigenvalue s < threshold) span the
/// finite-level singular subspace Q; lambda_ac is the Q-complement compression
/// of lambda and mu_ac = lambda_ac - m.
/// threshold <= 0 selects the default schedule.
DecompositionResult decompose(const MomentTable& mu, int N, double threshold, int N_out);

struct Classification {
    double ac_mass = 0.0;
    double sing_mass = 0.0;
    double column_extreme_distance = 0.0;
    double cuntz_defect = 0.0;
    std::string verdict;  // "AC", "SINGULAR" or "MIXED"
};

Classification classify(const MomentTable& mu, int N, double threshold = 0.0,
                        double mass_tol = 0.1);

struct FactorResiduals {
    double ff = 0.0;  // || F*F - (2I + T) ||
    double gg = 0.0;  // || G*G - (2I + T) ||
    double fg = 0.0;  // || F*G - T ||
};

/// Checks the asymmetric factorization identities for F = R_1 A(R) + R_2,
/// G = R_1 A(R) - R_2 and T = A(R)*A(R) - I, compressed to words short enough
/// that no truncation occurs. Exact algebra; residuals should be ~1e-15.
FactorResiduals mk_factor_check(const FockTruncation& T, const FreePolynomial& a);

/// Forward check of Popescu factorization: T = F(R)*F(R) is L-Toeplitz,
/// max_kj || P (L_k* T L_j - d_kj T) P || on the untruncated interior.
double popescu_factor_check(const FockTruncation& T, const FreePolynomial& f);

/// A(R) as a matrix on the truncated Fock space (appends the symbol words).
Eigen::MatrixXcd right_multiplier_matrix(const FockTruncation& T, const FreePolynomial& a);

}  // namespace ncld
