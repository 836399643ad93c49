#pragma once

#include <utility>
#include <vector>

#include "ncld/measure.hpp"

namespace ncld {

/// d=1 oracle split: the spec is already given in decomposed form, so the
/// classical Lebesgue decomposition is density vs atoms.
struct OracleDecomposition {
    ClassicalMeasureSpec ac_spec;    // density only
    ClassicalMeasureSpec sing_spec;  // atoms only
};

OracleDecomposition oracle_decompose(const ClassicalMeasureSpec& spec);

struct PencilComparison {
    double max_moment_error = 0.0;                 // at the largest N tested
    std::vector<std::pair<int, double>> error_by_N;
};

/// Runs the d=1 measure through the pencil decomposition at each level in the
/// schedule and reports the max moment error of the computed AC part against
/// the oracle. threshold <= 0 selects the default schedule; N_out <= 0 uses
/// N-1 at each level.
PencilComparison compare_to_pencil(const ClassicalMeasureSpec& spec,
                                   const std::vector<int>& schedule, double threshold = 0.0,
                                   int N_out = 0);

/// Moments of Lebesgue measure restricted to the upper (or lower) semicircle.
MomentTable semicircle_moments(bool upper, int depth);

}  // namespace ncld
