#include "ncld/classical.hpp"

#include <cmath>
#include <numbers>

#include "ncld/errors.hpp"
#include "ncld/lebesgue.hpp"

namespace ncld {

OracleDecomposition oracle_decompose(const ClassicalMeasureSpec& spec) {
    spec.validate();
    OracleDecomposition out;
    out.ac_spec.density = spec.density;
    out.sing_spec.atoms = spec.atoms;
    return out;
}

PencilComparison compare_to_pencil(const ClassicalMeasureSpec& spec,
                                   const std::vector<int>& schedule, double threshold,
                                   int N_out) {
    OracleDecomposition oracle = oracle_decompose(spec);
    PencilComparison out;
    for (int N : schedule) {
        int k_out = N_out > 0 ? std::min(N_out, N - 1) : N - 1;
        MomentTable mu = from_classical(spec, N);
        MomentTable oracle_ac = from_classical(oracle.ac_spec, k_out);
        DecompositionResult dec = decompose(mu, N, threshold, k_out);
        double err = 0.0;
        for (int k = 0; k <= k_out; ++k) {
            Word w(std::vector<int>(static_cast<std::size_t>(k), 1));
            err = std::max(err, std::abs(dec.mu_ac.value(w) - oracle_ac.value(w)));
        }
        out.error_by_N.emplace_back(N, err);
        out.max_moment_error = err;
    }
    return out;
}

MomentTable semicircle_moments(bool upper, int depth) {
    MomentTable mu(1, depth);
    mu.moments[Word{}] = Complex{0.5, 0.0};
    for (int k = 1; k <= depth; ++k) {
        // int_0^pi e^{ik t} dt/(2 pi) = ((-1)^k - 1)/(2 pi i k); conjugate for
        // the lower semicircle
        if (k % 2 == 0) continue;
        Complex v = Complex{0.0, 1.0} / (std::numbers::pi * k);
        if (!upper) v = std::conj(v);
        mu.moments[Word(std::vector<int>(static_cast<std::size_t>(k), 1))] = v;
    }
    return mu;
}

}  // namespace ncld
