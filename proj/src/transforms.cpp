#include "ncld/transforms.hpp"

#include <cmath>
#include <limits>

#include "ncld/errors.hpp"
#include "ncld/gns.hpp"

namespace ncld {

MatrixPoint MatrixPoint::scalar(const std::vector<Complex>& z) {
    MatrixPoint p;
    p.Z.reserve(z.size());
    for (Complex c : z) {
        Eigen::MatrixXcd m(1, 1);
        m(0, 0) = c;
        p.Z.push_back(std::move(m));
    }
    return p;
}

double MatrixPoint::row_norm() const {
    if (Z.empty()) return 0.0;
    Eigen::MatrixXcd row(n(), n() * d());
    for (int k = 0; k < d(); ++k) row.middleCols(k * n(), n()) = Z[static_cast<std::size_t>(k)];
    return row.jacobiSvd().singularValues()(0);
}

Eigen::MatrixXcd word_eval(const MatrixPoint& p, const Word& w) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(p.n(), p.n());
    for (int c : w.letters) m *= p.Z[static_cast<std::size_t>(c - 1)];
    return m;
}

int FreePolynomial::degree() const {
    int deg = 0;
    for (const auto& [w, v] : coeffs)
        if (v != Complex{}) deg = std::max(deg, w.length());
    return deg;
}

double FreePolynomial::coeff_l1() const {
    double s = 0.0;
    for (const auto& [w, v] : coeffs) s += std::abs(v);
    return s;
}

namespace {

double geometric_tail(double coeff_bound, double ratio, int M) {
    if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
    return coeff_bound * std::pow(ratio, M + 1) / (1.0 - ratio);
}

void require_strict(const MatrixPoint& z, const char* who) {
    if (z.row_norm() >= 1.0) throw NotStrictContraction(std::string(who) + ": point is not a strict row contraction");
}

}  // namespace

KernelEvaluation herglotz_eval(const MomentTable& mu, const MatrixPoint& z, int M) {
    require_strict(z, "herglotz_eval");
    if (M > mu.depth) throw DepthExceeded("herglotz_eval: truncation degree exceeds moment depth");
    const int n = z.n();
    Eigen::MatrixXcd h = mu.mass() * Eigen::MatrixXcd::Identity(n, n);
    for (const auto& [w, v] : mu.moments) {
        if (w.empty() || w.length() > M) continue;
        h += 2.0 * std::conj(v) * word_eval(z, transpose(w));
    }
    double r = z.row_norm();
    return {std::move(h), geometric_tail(2.0 * mu.mass(), r, M)};
}

KernelEvaluation cauchy_eval(const MomentTable& mu, const FreePolynomial& p,
                             const MatrixPoint& z, int M) {
    require_strict(z, "cauchy_eval");
    if (M + p.degree() > mu.depth)
        throw DepthExceeded("cauchy_eval: moments needed to depth M + deg p");

    // c_a = mu((L^a)* p(L)); nonzero only when a is a prefix of some word in
    // supp(p) (right residual) or a = b.g with b in supp(p), g in supp(mu).
    std::unordered_map<Word, Complex, WordHash> series;
    for (const auto& [b, pb] : p.coeffs) {
        if (pb == Complex{}) continue;
        for (int la = 0; la <= std::min(b.length(), M); ++la) {
            Word a(std::vector<int>(b.letters.begin(), b.letters.begin() + la));
            Word g(std::vector<int>(b.letters.begin() + la, b.letters.end()));
            series[a] += pb * mu.value(g);
        }
        for (const auto& [g, mg] : mu.moments) {
            if (g.empty()) continue;  // covered above with la = |b|
            Word a = concat(b, g);
            if (a.length() > M) continue;
            series[a] += pb * std::conj(mg);
        }
    }
    const int n = z.n();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [a, c] : series) out += c * word_eval(z, a);
    double r = z.row_norm();
    return {std::move(out), geometric_tail(mu.mass() * p.coeff_l1(), r, M)};
}

KernelEvaluation szego_kernel_eval(const MatrixPoint& z, const MatrixPoint& w,
                                   const Eigen::MatrixXcd& p, int M) {
    require_strict(z, "szego_kernel_eval");
    require_strict(w, "szego_kernel_eval");
    if (z.d() != w.d()) throw Error("szego_kernel_eval: generator counts differ");
    Eigen::MatrixXcd level = p;
    Eigen::MatrixXcd sum = p;
    for (int m = 1; m <= M; ++m) {
        Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(p.rows(), p.cols());
        for (int k = 0; k < z.d(); ++k)
            next += z.Z[static_cast<std::size_t>(k)] * level * w.Z[static_cast<std::size_t>(k)].adjoint();
        level = std::move(next);
        sum += level;
    }
    double ratio = z.row_norm() * w.row_norm();
    return {std::move(sum), geometric_tail(p.norm(), ratio, M)};
}

KernelEvaluation herglotz_kernel_eval(const MomentTable& mu, const MatrixPoint& z,
                                      const MatrixPoint& w, const Eigen::MatrixXcd& p, int M) {
    KernelEvaluation hz = herglotz_eval(mu, z, M);
    KernelEvaluation hw = herglotz_eval(mu, w, M);
    Eigen::MatrixXcd arg = 0.5 * (hz.value * p + p * hw.value.adjoint());
    KernelEvaluation k = szego_kernel_eval(z, w, arg, M);
    double ratio = z.row_norm() * w.row_norm();
    double szego_mass = ratio < 1.0 ? 1.0 / (1.0 - ratio) : std::numeric_limits<double>::infinity();
    k.tail_bound += 0.5 * (hz.tail_bound + hw.tail_bound) * p.norm() * szego_mass;
    return k;
}

Eigen::MatrixXcd cayley_to_schur(const MomentTable& mu, const MatrixPoint& z, int M) {
    const int n = z.n();
    Eigen::MatrixXcd h = herglotz_eval(mu, z, M).value;
    Eigen::MatrixXcd hp1 = h + Eigen::MatrixXcd::Identity(n, n);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(hp1);
    if (!lu.isInvertible())
        throw SingularResolvent("cayley_to_schur: H + I singular (tail bound violated)");
    // (H - I)(H + I)^{-1} = (H + I)^{-1}(H - I) since both factors commute
    return lu.solve(h - Eigen::MatrixXcd::Identity(n, n));
}

DominationReport domination_check(const MomentTable& mu, const MomentTable& lambda, double t,
                                  int N, double tol) {
    Eigen::MatrixXcd diff = t * t * gram_matrix(lambda, N) - gram_matrix(mu, N);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff, Eigen::EigenvaluesOnly);
    double min_eig = es.eigenvalues().minCoeff();
    return {min_eig >= -tol, min_eig};
}

}  // namespace ncld
