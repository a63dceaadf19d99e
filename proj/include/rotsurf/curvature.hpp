#pragma once

#include <cstddef>
#include <vector>

#include "rotsurf/semi_metric.hpp"

namespace rotsurf {

/// First fundamental form at a point; eps1/eps2 are the signs of E and G.
struct FundamentalForm {
    double E = 0.0;
    double F = 0.0;
    double G = 0.0;
    int eps1 = 1;
    int eps2 = 1;
};

struct CurvatureOptions {
    double step = kDefaultStep;
    double tol_degenerate = 1e-9;
    double tol_orthogonal = 1e-6;
    // Use analytic tangents when the patch carries them.
    bool prefer_analytic = true;
};

FundamentalForm fundamental_form(const SurfacePatch& patch, ParamPoint point,
                                 const CurvatureOptions& options = {});
FundamentalForm fundamental_form(const SurfacePatch& patch, ParamPoint point, double step);

/// Gaussian curvature in orthogonal coordinates,
///   K = -1/(e g) [eps1 (g_u / e)_u + eps2 (e_v / g)_v],  e = |E|^1/2, g = |G|^1/2,
/// with the outer derivatives taken by central differences of the nested
/// quotients. The stencil reaches 3 steps from the point (2 with analytic
/// tangents). Throws NotOrthogonal if |F| exceeds the tolerance and
/// DegeneratePoint if E or G nearly vanishes anywhere on the stencil.
double gaussian_curvature(const SurfacePatch& patch, ParamPoint point,
                          const CurvatureOptions& options = {});
double gaussian_curvature(const SurfacePatch& patch, ParamPoint point, double step);

struct CurvatureSample {
    double u = 0.0;
    double v = 0.0;
    double K = 0.0;
};

/// Distance kept from the domain boundary so every stencil stays inside.
inline double stencil_margin(double step) { return 3.0 * step; }

/// Uniform nu x nv grid over the domain shrunk by the stencil margin,
/// row-major in u then v.
std::vector<ParamPoint> interior_grid(const SurfacePatch& patch, std::size_t nu, std::size_t nv,
                                      double step);

/// K on the interior grid. Point errors are rethrown with the point attached.
std::vector<CurvatureSample> curvature_grid(const SurfacePatch& patch, std::size_t nu,
                                            std::size_t nv, const CurvatureOptions& options = {});
std::vector<CurvatureSample> curvature_grid(const SurfacePatch& patch, std::size_t nu,
                                            std::size_t nv, double step);

}  // namespace rotsurf
