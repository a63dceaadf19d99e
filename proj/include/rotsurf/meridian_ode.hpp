#pragma once

#include <vector>

#include "rotsurf/profile.hpp"
#include "rotsurf/semi_metric.hpp"

namespace rotsurf {

enum class SolveMethod { GeneralODE, ClosedFormQuadrature };

/// Sampled meridian of a constant-curvature general rotational surface:
/// f = sqrt(G) cos(phi) / alpha, g = sqrt(G) sin(phi) / beta at every sample.
struct MeridianSolution {
    double alpha = 1.0;
    double beta = 1.0;
    ProfileSpec spec;
    std::vector<double> u_samples;
    std::vector<double> phi;
    std::vector<double> phi_prime;
    std::vector<double> f;
    std::vector<double> g;
    int root_branch = 1;
    SolveMethod method = SolveMethod::GeneralODE;
    double step = 0.0;
};

/// Coefficients of the quadratic A phi'^2 + B phi' + Cc = 0 obtained by
/// substituting f, g into f'^2 + g'^2 = 1:
///   A  = G (sin^2 phi / alpha^2 + cos^2 phi / beta^2)
///   B  = G' sin phi cos phi (1/beta^2 - 1/alpha^2)
///   Cc = G'^2 / (4G) (cos^2 phi / alpha^2 + sin^2 phi / beta^2) - 1
struct OdeCoefficients {
    double A = 0.0;
    double B = 0.0;
    double Cc = 0.0;
};

OdeCoefficients ode_coefficients(const ProfileSpec& spec, double alpha, double beta, double u,
                                 double phi);

/// Root (-B + branch sqrt(B^2 - 4 A Cc)) / 2A. A discriminant that is negative
/// only at roundoff level is treated as zero.
double solve_phi_prime(double A, double B, double Cc, int branch);
double solve_phi_prime(const OdeCoefficients& c, int branch);

/// A phi'^2 + B phi' + Cc.
double meridian_residual(const ProfileSpec& spec, double alpha, double beta, double u, double phi,
                         double phi_prime);

inline constexpr double kDefaultOdeStep = 1e-3;

/// Fixed-step RK4 on phi' = solve_phi_prime(ode_coefficients(u, phi), branch).
/// The step is shrunk so the samples land exactly on u_range.hi. On a
/// negative discriminant the first failing u is located by bisection (1e-8)
/// and reported in the NegativeDiscriminant error.
MeridianSolution integrate_phi(const ProfileSpec& spec, double alpha, double beta, Interval u_range,
                               double phi0, int branch, double step = kDefaultOdeStep);

/// Equal-rate closed form phi(u) = phi0 + int sqrt(alpha^2 - (sqrt G)'^2) / sqrt(G),
/// evaluated by adaptive quadrature between consecutive samples.
MeridianSolution quadrature_phi(const ProfileSpec& spec, double alpha, Interval u_range,
                                double phi0, double step = kDefaultOdeStep);

}  // namespace rotsurf
