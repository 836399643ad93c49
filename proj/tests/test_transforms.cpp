#include <doctest.h>

#include <random>

#include "ncld/errors.hpp"
#include "ncld/transforms.hpp"

using namespace ncld;

namespace {

MomentTable dirac10(int depth) {
    return from_scalar_point({Complex{1, 0}, Complex{0, 0}}, depth);
}

std::vector<Complex> random_strict_point(std::mt19937& rng, int d) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> z(d);
    double norm2 = 0.0;
    for (auto& c : z) {
        c = Complex{u(rng), u(rng)};
        norm2 += std::norm(c);
    }
    double s = 0.8 / std::sqrt(std::max(norm2, 1e-12));
    std::uniform_real_distribution<double> radius(0.05, 1.0);
    s *= radius(rng);
    for (auto& c : z) c *= s;
    return z;
}

}  // namespace

TEST_CASE("matrix points") {
    MatrixPoint p = MatrixPoint::scalar({Complex{0.3, 0}, Complex{0, 0.4}});
    CHECK(p.row_norm() == doctest::Approx(0.5));
    CHECK(word_eval(p, Word{})(0, 0) == Complex{1.0, 0.0});
    CHECK(word_eval(p, Word{1, 2})(0, 0) == Complex{0.3, 0.0} * Complex{0.0, 0.4});
}

TEST_CASE("herglotz evaluation") {
    MomentTable m = nc_lebesgue(2, 10);
    MatrixPoint z = MatrixPoint::scalar({Complex{0.2, 0.1}, Complex{-0.3, 0}});
    auto h = herglotz_eval(m, z, 10);
    CHECK(std::abs(h.value(0, 0) - Complex{1.0, 0.0}) <= 1e-15);

    MomentTable d = dirac10(40);
    auto h1 = herglotz_eval(d, MatrixPoint::scalar({Complex{0.5, 0}, Complex{0, 0}}), 40);
    CHECK(std::abs(h1.value(0, 0) - Complex{3.0, 0.0}) <= h1.tail_bound + 1e-12);

    auto h2 = herglotz_eval(d, MatrixPoint::scalar({Complex{0, 0}, Complex{0.5, 0}}), 40);
    CHECK(std::abs(h2.value(0, 0) - Complex{1.0, 0.0}) <= 1e-15);

    CHECK_THROWS_AS(
        herglotz_eval(d, MatrixPoint::scalar({Complex{1.0, 0}, Complex{0, 0}}), 10),
        NotStrictContraction);
    CHECK_THROWS_AS(
        herglotz_eval(d, MatrixPoint::scalar({Complex{0.5, 0}, Complex{0, 0}}), 100),
        DepthExceeded);
}

TEST_CASE("cauchy transform") {
    // for m the transform is the identity on polynomials
    MomentTable m = nc_lebesgue(2, 10);
    FreePolynomial p;
    p.d = 2;
    p.coeffs[Word{}] = Complex{1.0, 0.0};
    p.coeffs[Word{1, 2}] = Complex{0.5, -0.25};
    MatrixPoint z = MatrixPoint::scalar({Complex{0.2, 0.1}, Complex{-0.3, 0}});
    auto c = cauchy_eval(m, p, z, 8);
    Complex expect = p.coeffs[Word{}] + p.coeffs[Word{1, 2}] * word_eval(z, Word{1, 2})(0, 0);
    CHECK(std::abs(c.value(0, 0) - expect) <= 1e-14);

    // Dirac at (1,0), p = 1: geometric series 1/(1-x)
    MomentTable d = dirac10(60);
    FreePolynomial one;
    one.d = 2;
    one.coeffs[Word{}] = Complex{1.0, 0.0};
    for (double x : {-0.9, -0.5, 0.3, 0.9}) {
        MatrixPoint zx = MatrixPoint::scalar({Complex{x, 0}, Complex{0, 0}});
        auto cv = cauchy_eval(d, one, zx, 55);
        CHECK(std::abs(cv.value(0, 0) - 1.0 / (1.0 - x)) <= cv.tail_bound + 1e-12);
        // H = 2C - mu(I) consistency
        auto h = herglotz_eval(d, zx, 55);
        CHECK(std::abs(h.value(0, 0) - (2.0 * cv.value(0, 0) - 1.0)) <=
              h.tail_bound + 2.0 * cv.tail_bound + 1e-12);
    }

    FreePolynomial zero;
    zero.d = 2;
    CHECK(cauchy_eval(d, zero, z, 8).value.norm() == 0.0);
}

TEST_CASE("szego kernel") {
    auto z1 = MatrixPoint::scalar({Complex{0.5, 0}});
    Eigen::MatrixXcd one = Eigen::MatrixXcd::Identity(1, 1);
    auto k = szego_kernel_eval(z1, z1, one, 200);
    CHECK(k.value(0, 0).real() == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

    auto z0 = MatrixPoint::scalar({Complex{0, 0}, Complex{0, 0}});
    auto zp = MatrixPoint::scalar({Complex{0.3, 0}, Complex{0.4, 0}});
    CHECK(szego_kernel_eval(z0, zp, one, 10).value(0, 0) == Complex{1.0, 0.0});

    // d=2 diagonal point: series collapses to sum_k (z.w*)^k
    auto kk = szego_kernel_eval(zp, zp, one, 200);
    CHECK(kk.value(0, 0).real() == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("herglotz kernel reduces to szego for m and is additive") {
    MomentTable m = nc_lebesgue(2, 30);
    MomentTable d = dirac10(30);
    Eigen::MatrixXcd one = Eigen::MatrixXcd::Identity(1, 1);
    std::mt19937 rng(0);
    for (int trial = 0; trial < 25; ++trial) {
        MatrixPoint z = MatrixPoint::scalar(random_strict_point(rng, 2));
        MatrixPoint w = MatrixPoint::scalar(random_strict_point(rng, 2));

        auto km = herglotz_kernel_eval(m, z, w, one, 30);
        auto ks = szego_kernel_eval(z, w, one, 30);
        CHECK(std::abs(km.value(0, 0) - ks.value(0, 0)) <= 1e-12);

        auto sum = herglotz_kernel_eval(add(m, d), z, w, one, 30);
        auto a = herglotz_kernel_eval(m, z, w, one, 30);
        auto b = herglotz_kernel_eval(d, z, w, one, 30);
        CHECK(std::abs(sum.value(0, 0) - a.value(0, 0) - b.value(0, 0)) <= 1e-10);

        // diagonal values are nonnegative up to rounding
        auto diag = herglotz_kernel_eval(d, z, z, one, 30);
        CHECK(diag.value(0, 0).real() >= -1e-12);
        CHECK(std::abs(diag.value(0, 0).imag()) <= 1e-12);
    }
}

TEST_CASE("tail bounds are honest under doubling") {
    MomentTable d = dirac10(60);
    for (double x : {0.3, 0.6, 0.85}) {
        MatrixPoint z = MatrixPoint::scalar({Complex{x, 0}, Complex{0, 0}});
        auto coarse = herglotz_eval(d, z, 25);
        auto fine = herglotz_eval(d, z, 50);
        CHECK(std::abs(fine.value(0, 0) - coarse.value(0, 0)) <=
              coarse.tail_bound * (1 + 1e-9) + 1e-12);
    }
}

TEST_CASE("cayley transform") {
    MomentTable d = dirac10(60);
    auto z = MatrixPoint::scalar({Complex{0.5, 0}, Complex{0, 0}});
    CHECK(std::abs(cayley_to_schur(d, z, 60)(0, 0) - Complex{0.5, 0.0}) <= 1e-8);

    MomentTable m = nc_lebesgue(2, 10);
    CHECK(cayley_to_schur(m, z, 10).norm() <= 1e-15);

    // Schur-class contractivity at random strict points
    std::mt19937 rng(0);
    for (int trial = 0; trial < 100; ++trial) {
        MatrixPoint zr = MatrixPoint::scalar(random_strict_point(rng, 2));
        Eigen::MatrixXcd b = cayley_to_schur(d, zr, 60);
        CHECK(b.jacobiSvd().singularValues()(0) <= 1.0 + 1e-10);
    }
}

TEST_CASE("domination") {
    MomentTable m = nc_lebesgue(2, 4);
    MomentTable d = dirac10(4);

    auto r = domination_check(m, m, 1.0, 3);
    CHECK(r.holds);
    CHECK(r.min_eigenvalue == doctest::Approx(0.0));

    CHECK(domination_check(d, add(d, m), 1.0, 3).holds);

    for (double t : {1.0, 3.0, 10.0})
        CHECK_FALSE(domination_check(m, d, t, 3).holds);
}
