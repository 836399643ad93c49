#pragma once

#include <json.hpp>
#include <optional>
#include <ostream>
#include <string>

#include "ncld/measure.hpp"

namespace ncld {

/// A parsed measure spec file. For kind "classical" the analytic spec is kept
/// alongside the moment table so the d=1 oracle can use it.
struct MeasureSpec {
    std::string kind;
    MomentTable table;
    std::optional<ClassicalMeasureSpec> classical;
};

/// Measure spec format:
///   {"d": int, "depth": int, "kind": "vacuum" | "vector_state" |
///    "scalar_point" | "classical" | "sum" | "moments", ...payload}
/// payloads:
///   vector_state: "fock_N": int, "x": [[word, re, im], ...], optional "y"
///   scalar_point: "z": [[re, im], ...]
///   classical:    "density": [a0, a1, ...], "atoms": [[re, im, weight], ...]
///   sum:          "terms": [spec, ...], optional "weights": [t, ...]
///   moments:      "entries": [[word, re, im], ...]  (raw, positivity not implied)
MeasureSpec parse_measure_spec(const nlohmann::json& j);
MeasureSpec load_measure_spec(const std::string& path);

void write_moments_csv(std::ostream& os, const MomentTable& mu);
MomentTable read_moments_csv(std::istream& is, int d, int depth);

nlohmann::json moment_table_to_json(const MomentTable& mu);

}  // namespace ncld
