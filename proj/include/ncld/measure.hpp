#pragma once

#include <Eigen/Dense>
#include <complex>
#include <unordered_map>
#include <vector>

#include "ncld/fock.hpp"
#include "ncld/word.hpp"

namespace ncld {

/// An NC measure given by its moments mu(L^a) for |a| <= depth.
/// Only nonzero moments are stored; absent words within depth are zero.
/// Adjoint moments mu((L^a)*) = conj(mu(L^a)) are implicit.
struct MomentTable {
    int d = 1;
    int depth = 0;
    std::unordered_map<Word, Complex, WordHash> moments;

    MomentTable() = default;
    MomentTable(int d_, int depth_) : d(d_), depth(depth_) {}

    /// mu(L^w); zero for unstored words, throws DepthExceeded past depth.
    Complex value(const Word& w) const;
    void set(const Word& w, Complex v);
    /// mu(I), as a real number.
    double mass() const;
};

/// d=1 circle measure: AC density w(z) = a_0 + sum_j a_j (z^j + z^-j)
/// (a trig polynomial, so moments are exact) plus point atoms on the circle.
struct ClassicalMeasureSpec {
    std::vector<double> density;             // a_0, a_1, ..., empty = no AC part
    std::vector<std::pair<Complex, double>> atoms;  // (unimodular point, weight > 0)

    /// Throws NegativeDensity / Error on an invalid spec.
    void validate(double tol = 1e-9) const;
    double density_at(double theta) const;
};

MomentTable nc_lebesgue(int d, int depth);

/// Moments <x, L^a y>; x = y gives a positive NC measure.
MomentTable from_vector_state(const FockTruncation& T, const Eigen::VectorXcd& x,
                              const Eigen::VectorXcd& y, int depth);

/// mu(L^a) = z^a for a row contraction z (boundary points allowed).
MomentTable from_scalar_point(const std::vector<Complex>& z, int depth);

/// Exact moments of a d=1 classical measure (trig-poly density + atoms).
MomentTable from_classical(const ClassicalMeasureSpec& spec, int depth);

MomentTable add(const MomentTable& a, const MomentTable& b);
MomentTable scale(const MomentTable& a, double t);
/// a - b entrywise; internal helper for domination and decomposition work.
MomentTable subtract(const MomentTable& a, const MomentTable& b);

struct PositivityReport {
    bool is_positive = false;
    double min_eigenvalue = 0.0;
};

/// PSD test of the level-N Gram matrix; this is the positivity test for
/// an NC measure at finite truncation.
PositivityReport positivity_check(const MomentTable& mu, int N, double tol = 1e-10);

}  // namespace ncld
