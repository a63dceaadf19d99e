#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rotsurf/curvature.hpp"
#include "rotsurf/semi_metric.hpp"

namespace rotsurf {

struct CurvatureReport {
    Family family = Family::Custom;
    double target_K = 0.0;
    std::vector<CurvatureSample> samples;
    double max_abs_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::vector<ParamPoint> degenerate_points;
};

/// Samples K on the interior nu x nv grid. Degenerate points are skipped and
/// listed; passed iff max |K - target_K| <= tolerance over the rest.
/// Throws AllDegenerate when no point survives.
CurvatureReport verify_constant_curvature(const SurfacePatch& patch, double target_K, std::size_t nu,
                                          std::size_t nv, double tolerance,
                                          const CurvatureOptions& options = {});

/// JSON object with family, target_K, tolerance, max_abs_deviation, passed,
/// n_samples, degenerate_points and the per-sample [u, v, K] list.
std::string serialize_report(const CurvatureReport& report);
CurvatureReport parse_report(const std::string& text);

Family family_from_string(const std::string& name);

}  // namespace rotsurf
