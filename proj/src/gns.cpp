#include "ncld/gns.hpp"

#include <algorithm>
#include <cmath>

#include "ncld/errors.hpp"

namespace ncld {

Eigen::MatrixXcd gram_matrix(const MomentTable& mu, int N) {
    if (N > mu.depth) throw DepthExceeded("gram_matrix: level exceeds moment depth");
    std::vector<Word> words = enumerate_words(mu.d, N);
    const int n = static_cast<int>(words.size());
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            PairReduction r = reduce_pair(words[static_cast<std::size_t>(i)],
                                          words[static_cast<std::size_t>(j)]);
            Complex v{0.0, 0.0};
            switch (r.kind) {
                case PairReduction::Kind::RightResidual: v = mu.value(r.residual); break;
                case PairReduction::Kind::LeftResidual: v = std::conj(mu.value(r.residual)); break;
                case PairReduction::Kind::Zero: break;
            }
            g(i, j) = v;
            g(j, i) = std::conj(v);
        }
    }
    return g;
}

int GnsSpace::interior_dim_words() const {
    return static_cast<int>(word_count(mu.d, N - 1));
}

Eigen::VectorXcd GnsSpace::class_of(const Word& w) const {
    auto it = std::lower_bound(words.begin(), words.end(), w, deglex_less);
    if (it == words.end() || !(*it == w)) throw Error("class_of: word not in level basis");
    return factor.col(it - words.begin());
}

GnsSpace gns_space(const MomentTable& mu, int N, double rank_tol_rel) {
    GnsSpace g;
    g.mu = mu;
    g.N = N;
    g.words = enumerate_words(mu.d, N);
    g.gram = gram_matrix(mu, N);
    const int n = static_cast<int>(g.words.size());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g.gram);
    const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
    g.gram_min_eig = ev(0);
    double max_eig = std::max(ev(n - 1), 0.0);
    g.rank_tol = rank_tol_rel * max_eig;
    if (g.gram_min_eig < -g.rank_tol * n)
        throw NotPositive("gns_space: Gram matrix is not positive semi-definite");

    int r = 0;
    for (int i = 0; i < n; ++i)
        if (ev(i) > g.rank_tol) ++r;
    g.factor.resize(r, n);
    int row = 0;
    for (int i = 0; i < n; ++i) {
        if (ev(i) <= g.rank_tol) continue;
        g.factor.row(row++) = std::sqrt(ev(i)) * es.eigenvectors().col(i).adjoint();
    }
    g.cyclic = r > 0 ? Eigen::VectorXcd(g.factor.col(0)) : Eigen::VectorXcd::Zero(0);
    return g;
}

GnsRowIsometry gns_row_isometry(const GnsSpace& g) {
    const int m = g.interior_dim_words();
    const int r = g.rank();
    Eigen::MatrixXcd A = g.factor.leftCols(m);

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double sv_tol = std::sqrt(std::max(g.rank_tol, 0.0)) +
                          1e-13 * (svd.singularValues().size() ? svd.singularValues()(0) : 0.0);
    int ra = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > sv_tol) ++ra;

    Eigen::MatrixXcd U = svd.matrixU().leftCols(ra);
    Eigen::MatrixXcd V = svd.matrixV().leftCols(ra);
    Eigen::VectorXd sig_inv = svd.singularValues().head(ra).cwiseInverse();
    Eigen::MatrixXcd pinvA = V * sig_inv.asDiagonal() * U.adjoint();

    GnsRowIsometry iso;
    iso.interior_basis = U;
    iso.pi.reserve(static_cast<std::size_t>(g.mu.d));
    for (int k = 1; k <= g.mu.d; ++k) {
        Eigen::MatrixXcd B(r, m);
        Word gen{std::vector<int>{k}};
        for (int c = 0; c < m; ++c) {
            Word target = concat(gen, g.words[static_cast<std::size_t>(c)]);
            auto it = std::lower_bound(g.words.begin(), g.words.end(), target, deglex_less);
            B.col(c) = g.factor.col(it - g.words.begin());
        }
        iso.pi.push_back(B * pinvA);
    }

    double defect = 0.0;
    for (int k = 0; k < g.mu.d; ++k) {
        for (int j = 0; j < g.mu.d; ++j) {
            Eigen::MatrixXcd x = U.adjoint() * iso.pi[static_cast<std::size_t>(k)].adjoint() *
                                 iso.pi[static_cast<std::size_t>(j)] * U;
            if (k == j) x -= Eigen::MatrixXcd::Identity(ra, ra);
            defect = std::max(defect, x.jacobiSvd().singularValues()(0));
        }
    }
    iso.isometry_defect = defect;
    return iso;
}

namespace {

void wandering_rec(const GnsRowIsometry& iso, const Eigen::VectorXcd& v,
                   const Eigen::VectorXcd& state, int remaining, double& violation) {
    if (remaining == 0) return;
    for (const Eigen::MatrixXcd& pik : iso.pi) {
        Eigen::VectorXcd next = pik * state;
        violation = std::max(violation, std::abs(v.dot(next)));
        wandering_rec(iso, v, next, remaining - 1, violation);
    }
}

}  // namespace

WanderingReport wandering_test(const GnsSpace& g, const GnsRowIsometry& iso,
                               const Eigen::VectorXcd& v, int depth, double tol) {
    if (depth > g.N - 1) throw Error("wandering_test: depth must be <= N-1");
    WanderingReport rep;
    rep.norm = v.norm();
    wandering_rec(iso, v, v, depth, rep.max_violation);
    rep.is_wandering = rep.norm > 0.0 && rep.max_violation <= tol;
    return rep;
}

double column_extreme_distance(const Eigen::MatrixXcd& gram) {
    const int n = static_cast<int>(gram.rows());
    double g00 = gram(0, 0).real();
    if (n == 1) return std::sqrt(std::max(g00, 0.0));
    Eigen::VectorXcd b = gram.col(0).tail(n - 1);
    Eigen::MatrixXcd g1 = gram.bottomRightCorner(n - 1, n - 1);

    // Schur complement dist^2 = G00 - b* G1^+ b; LDLT when G1 is definite,
    // eigenvalue pseudo-inverse otherwise.
    Eigen::LDLT<Eigen::MatrixXcd> ldlt(g1);
    double sub = 0.0;
    bool ok = false;
    if (ldlt.info() == Eigen::Success) {
        Eigen::VectorXcd x = ldlt.solve(b);
        double resid = (g1 * x - b).norm();
        if (resid <= 1e-10 * (b.norm() + 1.0)) {
            sub = b.dot(x).real();
            ok = true;
        }
    }
    if (!ok) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g1);
        double tol = 1e-12 * std::max(es.eigenvalues().maxCoeff(), 0.0);
        Eigen::VectorXcd proj = es.eigenvectors().adjoint() * b;
        for (int i = 0; i < n - 1; ++i) {
            if (es.eigenvalues()(i) > tol) sub += std::norm(proj(i)) / es.eigenvalues()(i);
        }
    }
    return std::sqrt(std::max(g00 - sub, 0.0));
}

double column_extreme_distance(const GnsSpace& g) {
    // least squares in quotient coordinates: residual of projecting the class
    // of the empty word onto the classes of nonempty words. Direct residual
    // computation avoids the cancellation of the Schur-complement route when
    // the true distance is zero.
    const int n = static_cast<int>(g.gram.rows());
    if (n == 1 || g.rank() == 0) return std::sqrt(std::max(g.gram(0, 0).real(), 0.0));
    Eigen::VectorXcd target = g.factor.col(0);
    Eigen::MatrixXcd rest = g.factor.rightCols(n - 1);
    Eigen::VectorXcd c = rest.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(target);
    return (target - rest * c).norm();
}

double cuntz_defect(const GnsSpace& g, const GnsRowIsometry& iso) {
    const int r = g.rank();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(r, r);
    for (const Eigen::MatrixXcd& pik : iso.pi) m -= pik * pik.adjoint();
    Eigen::MatrixXcd c = iso.interior_basis.adjoint() * m * iso.interior_basis;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(c, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace ncld
