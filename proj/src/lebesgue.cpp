#include "ncld/lebesgue.hpp"

#include <algorithm>
#include <cmath>

#include "ncld/errors.hpp"
#include "ncld/gns.hpp"

namespace ncld {

double default_threshold(int N) { return std::min(10.0 / N, 0.3); }

DecompositionResult decompose(const MomentTable& mu, int N, double threshold, int N_out) {
    if (threshold <= 0.0) threshold = default_threshold(N);
    if (threshold >= 1.0) throw Error("decompose: threshold must lie in (0,1)");
    if (N_out > N - 1) throw Error("decompose: N_out must be <= N-1");
    if (N > mu.depth) throw DepthExceeded("decompose: moments needed to depth N");

    // lambda = mu + m; its Gram dominates the identity, so the pencil
    // spectrum s = (Fock norm)/(GNS norm) lies in (0, 1].
    MomentTable lambda = add(mu, nc_lebesgue(mu.d, mu.depth));
    Eigen::MatrixXcd g = gram_matrix(lambda, N);
    const int n = static_cast<int>(g.rows());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
    const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
    double max_eig = ev(n - 1);
    if (ev(0) < 1.0 - 1e-8 * std::max(max_eig, 1.0) * n)
        throw NotPositive("decompose: input measure is not positive at this level");
    if (max_eig / ev(0) > 1e13)
        throw IllConditioned("decompose: Gram condition number too large for the pencil");

    DecompositionResult res;
    res.threshold = threshold;
    res.N = N;
    res.N_out = N_out;
    res.pencil_spectrum.resize(n);
    for (int i = 0; i < n; ++i) res.pencil_spectrum(i) = 1.0 / ev(n - 1 - i);  // ascending in s

    // Singular directions: pencil eigenvalue s = 1/ev below threshold.
    std::vector<int> sing;
    for (int i = 0; i < n; ++i)
        if (1.0 / ev(i) < threshold) sing.push_back(i);
    res.singular_rank = static_cast<int>(sing.size());

    // lambda_ac(L^a) = <e_0, (I-Q) Pi^a e_0>_lambda
    //               = lambda(L^a) - sum_i ev_i u_i(0) conj(u_i(a))
    // with u_i the Euclidean-orthonormal eigenvectors spanning Q.
    std::vector<Word> words = enumerate_words(mu.d, N_out);
    res.mu_ac = MomentTable(mu.d, N_out);
    res.mu_s = MomentTable(mu.d, N_out);
    auto level_words = enumerate_words(mu.d, N);
    for (const Word& a : words) {
        auto it = std::lower_bound(level_words.begin(), level_words.end(), a, deglex_less);
        int ia = static_cast<int>(it - level_words.begin());
        Complex corr{0.0, 0.0};
        for (int i : sing)
            corr += ev(i) * es.eigenvectors()(0, i) * std::conj(es.eigenvectors()(ia, i));
        Complex lam_a = lambda.value(a);
        Complex ac = lam_a - corr;
        if (a.empty()) ac -= 1.0;  // mu_ac = lambda_ac - m
        Complex mu_a = mu.value(a);
        if (ac != Complex{}) res.mu_ac.moments[a] = ac;
        if (mu_a - ac != Complex{}) res.mu_s.moments[a] = mu_a - ac;
    }
    return res;
}

Classification classify(const MomentTable& mu, int N, double threshold, double mass_tol) {
    DecompositionResult dec = decompose(mu, N, threshold, N - 1);
    Classification c;
    c.ac_mass = dec.mu_ac.mass();
    c.sing_mass = dec.mu_s.mass();

    GnsSpace g = gns_space(mu, N);
    GnsRowIsometry iso = gns_row_isometry(g);
    c.column_extreme_distance = column_extreme_distance(g);
    c.cuntz_defect = cuntz_defect(g, iso);

    double total = mu.mass();
    if (c.ac_mass <= mass_tol * total)
        c.verdict = "SINGULAR";
    else if (c.sing_mass <= mass_tol * total)
        c.verdict = "AC";
    else
        c.verdict = "MIXED";
    return c;
}

Eigen::MatrixXcd right_multiplier_matrix(const FockTruncation& T, const FreePolynomial& a) {
    if (a.d != T.d) throw Error("right_multiplier_matrix: generator counts differ");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(T.dim(), T.dim());
    for (const auto& [w, c] : a.coeffs) {
        if (c == Complex{}) continue;
        for (int i = 0; i < T.dim(); ++i) {
            const Word& alpha = T.basis[i];
            if (alpha.length() + w.length() > T.N) continue;
            m(T.index_of(concat(alpha, w)), i) += c;
        }
    }
    return m;
}

namespace {

/// Projection onto words of length <= lmax is a leading block in deglex order.
Eigen::MatrixXcd interior_block(const Eigen::MatrixXcd& op, const FockTruncation& T, int lmax) {
    int m = static_cast<int>(word_count(T.d, lmax));
    return op.topLeftCorner(m, m);
}

double op_norm(const Eigen::MatrixXcd& m) { return m.jacobiSvd().singularValues()(0); }

}  // namespace

FactorResiduals mk_factor_check(const FockTruncation& T, const FreePolynomial& a) {
    if (T.d < 2) throw Error("mk_factor_check: needs d >= 2");
    int g = a.degree();
    int lmax = T.N - 1 - g;
    if (lmax < 0) throw Error("mk_factor_check: truncation too small for symbol degree");

    Eigen::MatrixXcd A = right_multiplier_matrix(T, a);
    Eigen::MatrixXcd R1 = Eigen::MatrixXcd(right_shift_matrix(1, T));
    Eigen::MatrixXcd R2 = Eigen::MatrixXcd(right_shift_matrix(2, T));
    Eigen::MatrixXcd F = R1 * A + R2;
    Eigen::MatrixXcd G = R1 * A - R2;
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(T.dim(), T.dim());
    Eigen::MatrixXcd Top = A.adjoint() * A - I;

    FactorResiduals r;
    r.ff = op_norm(interior_block(F.adjoint() * F - (2.0 * I + Top), T, lmax));
    r.gg = op_norm(interior_block(G.adjoint() * G - (2.0 * I + Top), T, lmax));
    r.fg = op_norm(interior_block(F.adjoint() * G - Top, T, lmax));
    return r;
}

double popescu_factor_check(const FockTruncation& T, const FreePolynomial& f) {
    int g = f.degree();
    int lmax = T.N - 1 - g;
    if (lmax < 0) throw Error("popescu_factor_check: truncation too small for symbol degree");

    Eigen::MatrixXcd F = right_multiplier_matrix(T, f);
    Eigen::MatrixXcd Top = F.adjoint() * F;
    double resid = 0.0;
    for (int k = 1; k <= T.d; ++k) {
        Eigen::MatrixXcd Lk = Eigen::MatrixXcd(left_shift_matrix(k, T));
        for (int j = 1; j <= T.d; ++j) {
            Eigen::MatrixXcd Lj = Eigen::MatrixXcd(left_shift_matrix(j, T));
            Eigen::MatrixXcd x = Lk.adjoint() * Top * Lj;
            if (k == j) x -= Top;
            resid = std::max(resid, op_norm(interior_block(x, T, lmax)));
        }
    }
    return resid;
}

}  // namespace ncld
