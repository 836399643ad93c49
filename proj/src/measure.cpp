#include "ncld/measure.hpp"

#include <cmath>
#include <numbers>

#include "ncld/errors.hpp"
#include "ncld/gns.hpp"

namespace ncld {

namespace {
constexpr double kZeroDrop = 0.0;  // exact zeros are not stored
}

Complex MomentTable::value(const Word& w) const {
    if (w.length() > depth) throw DepthExceeded("moment requested past table depth");
    auto it = moments.find(w);
    return it == moments.end() ? Complex{0.0, 0.0} : it->second;
}

void MomentTable::set(const Word& w, Complex v) {
    if (w.length() > depth) throw DepthExceeded("moment stored past table depth");
    if (v == Complex{kZeroDrop, kZeroDrop})
        moments.erase(w);
    else
        moments[w] = v;
}

double MomentTable::mass() const {
    auto it = moments.find(Word{});
    return it == moments.end() ? 0.0 : it->second.real();
}

void ClassicalMeasureSpec::validate(double tol) const {
    for (const auto& [z, c] : atoms) {
        if (std::abs(std::abs(z) - 1.0) > 1e-9) throw Error("classical atom not on the unit circle");
        if (c <= 0.0) throw Error("classical atom weight must be positive");
    }
    const int samples = 4096;
    for (int i = 0; i < samples; ++i) {
        double theta = 2.0 * std::numbers::pi * i / samples;
        if (density_at(theta) < -tol) throw NegativeDensity("classical density negative on the circle");
    }
}

double ClassicalMeasureSpec::density_at(double theta) const {
    if (density.empty()) return 0.0;
    double w = density[0];
    for (std::size_t j = 1; j < density.size(); ++j)
        w += 2.0 * density[j] * std::cos(static_cast<double>(j) * theta);
    return w;
}

MomentTable nc_lebesgue(int d, int depth) {
    MomentTable m(d, depth);
    m.set(Word{}, Complex{1.0, 0.0});
    return m;
}

MomentTable from_vector_state(const FockTruncation& T, const Eigen::VectorXcd& x,
                              const Eigen::VectorXcd& y, int depth) {
    if (x.size() != T.dim() || y.size() != T.dim())
        throw Error("from_vector_state: vector dimension mismatch");
    int max_support = 0;
    for (int i = 0; i < T.dim(); ++i)
        if (x[i] != Complex{} || y[i] != Complex{}) max_support = std::max(max_support, T.basis[i].length());
    if (depth + max_support > T.N)
        throw TruncationOverflow("from_vector_state: depth + support exceeds truncation level");

    // <x, L^a y> = sum over u in supp(x), b in supp(y) with u = a.b
    MomentTable mu(T.d, depth);
    for (int i = 0; i < T.dim(); ++i) {
        if (x[i] == Complex{}) continue;
        const Word& u = T.basis[i];
        for (int j = 0; j < T.dim(); ++j) {
            if (y[j] == Complex{}) continue;
            const Word& b = T.basis[j];
            int la = u.length() - b.length();
            if (la < 0 || la > depth) continue;
            bool suffix = std::equal(b.letters.begin(), b.letters.end(),
                                     u.letters.begin() + la, u.letters.end());
            if (!suffix) continue;
            Word a(std::vector<int>(u.letters.begin(), u.letters.begin() + la));
            auto cur = mu.moments.find(a);
            Complex add = std::conj(x[i]) * y[j];
            if (cur == mu.moments.end())
                mu.moments.emplace(std::move(a), add);
            else
                cur->second += add;
        }
    }
    return mu;
}

namespace {

void scalar_point_rec(const std::vector<Complex>& z, const std::vector<int>& nonzero,
                      Word& w, Complex val, int depth, MomentTable& mu, std::size_t cap) {
    mu.moments[w] = val;
    if (mu.moments.size() > cap)
        throw Error("from_scalar_point: moment table too large at this depth");
    if (w.length() == depth) return;
    for (int k : nonzero) {
        w.letters.push_back(k);
        scalar_point_rec(z, nonzero, w, val * z[static_cast<std::size_t>(k - 1)], depth, mu, cap);
        w.letters.pop_back();
    }
}

}  // namespace

MomentTable from_scalar_point(const std::vector<Complex>& z, int depth) {
    double row = 0.0;
    for (Complex c : z) row += std::norm(c);
    if (row > 1.0 + 1e-12) throw NotRowContraction("from_scalar_point: sum |z_k|^2 > 1");
    MomentTable mu(static_cast<int>(z.size()), depth);
    std::vector<int> nonzero;
    for (int k = 1; k <= static_cast<int>(z.size()); ++k)
        if (z[static_cast<std::size_t>(k - 1)] != Complex{}) nonzero.push_back(k);
    Word w;
    scalar_point_rec(z, nonzero, w, Complex{1.0, 0.0}, depth, mu, std::size_t{1} << 22);
    return mu;
}

MomentTable from_classical(const ClassicalMeasureSpec& spec, int depth) {
    spec.validate();
    MomentTable mu(1, depth);
    for (int k = 0; k <= depth; ++k) {
        // int z^k w(z) dm = a_k (density coefficient), plus atom contributions
        Complex v{0.0, 0.0};
        if (k < static_cast<int>(spec.density.size())) v += spec.density[static_cast<std::size_t>(k)];
        for (const auto& [z, c] : spec.atoms) v += c * std::pow(z, k);
        if (v != Complex{}) mu.moments[Word(std::vector<int>(static_cast<std::size_t>(k), 1))] = v;
    }
    return mu;
}

MomentTable add(const MomentTable& a, const MomentTable& b) {
    if (a.d != b.d) throw Error("add: generator counts differ");
    MomentTable out(a.d, std::min(a.depth, b.depth));
    for (const auto& [w, v] : a.moments)
        if (w.length() <= out.depth) out.moments[w] = v;
    for (const auto& [w, v] : b.moments) {
        if (w.length() > out.depth) continue;
        auto it = out.moments.find(w);
        if (it == out.moments.end())
            out.moments.emplace(w, v);
        else
            it->second += v;
    }
    return out;
}

MomentTable scale(const MomentTable& a, double t) {
    if (t < 0.0) throw Error("scale: factor must be nonnegative");
    MomentTable out(a.d, a.depth);
    if (t == 0.0) return out;
    for (const auto& [w, v] : a.moments) out.moments[w] = t * v;
    return out;
}

MomentTable subtract(const MomentTable& a, const MomentTable& b) {
    if (a.d != b.d) throw Error("subtract: generator counts differ");
    MomentTable out(a.d, std::min(a.depth, b.depth));
    for (const auto& [w, v] : a.moments)
        if (w.length() <= out.depth) out.moments[w] = v;
    for (const auto& [w, v] : b.moments) {
        if (w.length() > out.depth) continue;
        auto it = out.moments.find(w);
        if (it == out.moments.end())
            out.moments.emplace(w, -v);
        else
            it->second -= v;
    }
    return out;
}

PositivityReport positivity_check(const MomentTable& mu, int N, double tol) {
    Eigen::MatrixXcd g = gram_matrix(mu, N);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
    double min_eig = es.eigenvalues().minCoeff();
    return {min_eig >= -tol, min_eig};
}

}  // namespace ncld
