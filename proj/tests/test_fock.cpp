#include <doctest.h>

#include <Eigen/Dense>
#include <sstream>

#include "ncld/errors.hpp"
#include "ncld/fock.hpp"

using namespace ncld;

namespace {
Eigen::VectorXcd basis_vec(const FockTruncation& T, const Word& w) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(T.dim());
    v[T.index_of(w)] = 1.0;
    return v;
}
}  // namespace

TEST_CASE("truncation dimensions") {
    FockTruncation T(2, 2);
    CHECK(T.dim() == 7);
    CHECK(FockTruncation(1, 5).dim() == 6);
    CHECK(FockTruncation(2, 10).dim() == 2047);
}

TEST_CASE("left shift columns") {
    FockTruncation T(2, 2);
    Eigen::MatrixXcd L1 = Eigen::MatrixXcd(left_shift_matrix(1, T));
    Eigen::MatrixXcd L2 = Eigen::MatrixXcd(left_shift_matrix(2, T));

    CHECK((L1 * basis_vec(T, Word{}) - basis_vec(T, Word{1})).norm() == 0.0);
    CHECK((L2 * basis_vec(T, Word{1}) - basis_vec(T, Word{2, 1})).norm() == 0.0);
    // length-N columns are annihilated
    CHECK((L1 * basis_vec(T, Word{2, 2})).norm() == 0.0);
    // dim(N-1) entries, all ones
    CHECK(left_shift_matrix(1, T).nonZeros() == 3);
    CHECK_THROWS(left_shift_matrix(3, T));
}

TEST_CASE("right shift columns") {
    FockTruncation T(2, 2);
    Eigen::MatrixXcd R1 = Eigen::MatrixXcd(right_shift_matrix(1, T));
    Eigen::MatrixXcd R2 = Eigen::MatrixXcd(right_shift_matrix(2, T));

    CHECK((R2 * basis_vec(T, Word{1}) - basis_vec(T, Word{1, 2})).norm() == 0.0);
    CHECK((R1 * basis_vec(T, Word{}) - basis_vec(T, Word{1})).norm() == 0.0);
    CHECK((R1 * basis_vec(T, Word{1, 1})).norm() == 0.0);
}

TEST_CASE("transpose unitary") {
    FockTruncation T(2, 2);
    Eigen::MatrixXcd U = Eigen::MatrixXcd(transpose_unitary(T));

    CHECK((U * basis_vec(T, Word{1, 2}) - basis_vec(T, Word{2, 1})).norm() == 0.0);
    CHECK((U * basis_vec(T, Word{1}) - basis_vec(T, Word{1})).norm() == 0.0);
    CHECK((U * basis_vec(T, Word{1, 1}) - basis_vec(T, Word{1, 1})).norm() == 0.0);
    CHECK((U * U - Eigen::MatrixXcd::Identity(T.dim(), T.dim())).norm() == 0.0);
}

TEST_CASE("row isometry relations on the interior") {
    FockTruncation T(2, 4);
    int m = static_cast<int>(word_count(2, 3));
    std::vector<Eigen::MatrixXcd> L, R;
    for (int k = 1; k <= 2; ++k) {
        L.push_back(Eigen::MatrixXcd(left_shift_matrix(k, T)));
        R.push_back(Eigen::MatrixXcd(right_shift_matrix(k, T)));
    }
    for (int k = 0; k < 2; ++k) {
        for (int j = 0; j < 2; ++j) {
            Eigen::MatrixXcd x = (L[k].adjoint() * L[j]).topLeftCorner(m, m);
            if (k == j) x -= Eigen::MatrixXcd::Identity(m, m);
            CHECK(x.norm() == doctest::Approx(0.0).epsilon(1e-14));
        }
    }
    // sum_k L_k L_k* = I - P_vacuum on the whole truncation
    Eigen::MatrixXcd s = L[0] * L[0].adjoint() + L[1] * L[1].adjoint();
    Eigen::MatrixXcd expect = Eigen::MatrixXcd::Identity(T.dim(), T.dim());
    expect(0, 0) = 0.0;
    CHECK((s - expect).norm() == doctest::Approx(0.0).epsilon(1e-14));

    // U L_k U = R_k on the interior
    Eigen::MatrixXcd U = Eigen::MatrixXcd(transpose_unitary(T));
    for (int k = 0; k < 2; ++k) {
        Eigen::MatrixXcd diff = (U * L[k] * U - R[k]).leftCols(m);
        CHECK(diff.norm() == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("apply_word") {
    FockTruncation T(2, 3);
    auto v = basis_vec(T, Word{});
    auto r = apply_word(T, ShiftSide::Left, Word{1, 2}, v);
    CHECK((r - basis_vec(T, Word{1, 2})).norm() == 0.0);

    CHECK((apply_word(T, ShiftSide::Left, Word{}, r) - r).norm() == 0.0);
    CHECK((apply_word(T, ShiftSide::Left, Word{1}, basis_vec(T, Word{2})) -
           basis_vec(T, Word{1, 2}))
              .norm() == 0.0);

    auto top = basis_vec(T, Word{1, 1, 1});
    CHECK_THROWS_AS(apply_word(T, ShiftSide::Left, Word{1}, top), TruncationOverflow);
    CHECK(apply_word(T, ShiftSide::Left, Word{1}, top, false).norm() == 0.0);
}

TEST_CASE("coordinate csv export") {
    FockTruncation T(2, 1);
    std::ostringstream os;
    write_coordinate_csv(os, left_shift_matrix(1, T));
    CHECK(os.str() == "row,col,re,im\n1,0,1,0\n");
}
