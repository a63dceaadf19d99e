#pragma once

#include <functional>

#include "rotsurf/profile.hpp"
#include "rotsurf/semi_metric.hpp"

namespace rotsurf {

struct MeridianSolution;

/// Generating curve of a rotational surface together with its derivatives.
/// `rho` is empty for SR2-style meridians. `eps` is the expected sign of the
/// squared speed.
struct MeridianCurve {
    using Fn = std::function<double(double)>;

    Fn f;
    Fn g;
    Fn rho;
    Fn df;
    Fn dg;
    Fn drho;
    Interval domain;
    MetricSignature signature = MetricSignature::Euclidean4;
    int eps = 1;
};

/// Squared speed minus its target value, from the analytic derivatives:
///   SR1: f'^2 + g'^2 + rho'^2 - 1
///   SR2: f'^2 + g'^2 - 1
///   SR3: f'^2 + g'^2 - rho'^2 - eps
///   SR4: rho'^2 + f'^2 - g'^2 - eps      (x4 = g is the timelike coordinate)
double arc_length_defect(Family family, const MeridianCurve& meridian, double u);

/// Unit-speed meridian with profile rho from `spec`, with f(domain.lo) = 0.
///   SR1:          g = 0, f = int sqrt(1 - rho'^2)
///   SR3:          g = 0, f = int sqrt(eps + rho'^2)
///   SR4, eps=+1:  g = 0, f = int sqrt(1 - rho'^2)
///   SR4, eps=-1:  f = 0, g = int sqrt(1 + rho'^2)
/// Throws InfeasibleDomain when the integrand goes negative on the domain.
MeridianCurve complete_meridian(const ProfileSpec& spec, Family family, Interval domain);

/// SR1 (f, g, rho cos v, rho sin v) in R^4, SR3 (f, g, rho sinh v, rho cosh v)
/// and SR4 (rho cos v, rho sin v, f, g) in R^4_1. Patches carry analytic
/// tangents. Throws InvalidArgument when the meridian is not unit speed.
SurfacePatch build_surface(Family family, const MeridianCurve& meridian, Interval v_range);

/// Meridian (f, g) of a general rotational surface, with phi interpolated by
/// cubic Hermite through the solution samples and
/// f = sqrt(G) cos(phi) / alpha, g = sqrt(G) sin(phi) / beta.
MeridianCurve sr2_meridian(const MeridianSolution& solution);

/// (f cos(alpha v), f sin(alpha v), g cos(beta v), g sin(beta v)) in R^4.
SurfacePatch build_sr2(const MeridianSolution& solution, Interval v_range);

}  // namespace rotsurf
