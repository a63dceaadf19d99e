#pragma once

#include "rotsurf/semi_metric.hpp"

namespace rotsurf {

/// Sign of the target Gaussian curvature.
enum class CurvatureClass { NegativeK, PositiveK, ZeroK };

/// Closed-form shape of a radius profile.
enum class ProfileShape { Exponential, Trigonometric, Affine };

/// Constant-curvature radius profile. For the Lorentzian families `eps` is
/// the sign of E of the meridian; the Euclidean families use eps = +1.
///
/// Target curvature is -C^2, +C^2 or 0 by class. The profile solves
/// rho'' = -eps K rho, so it is exponential when eps K < 0, trigonometric
/// when eps K > 0 and affine when K = 0:
///   C1 e^{Cu} + C2 e^{-Cu},  C1 sin(Cu) + C2 cos(Cu),  C1 u + C2.
struct ProfileSpec {
    CurvatureClass curvature_class = CurvatureClass::ZeroK;
    double C = 1.0;
    double C1 = 0.0;
    double C2 = 1.0;
    int eps = 1;
};

/// Throws InvalidArgument for C <= 0 on a curved class or eps not +/-1.
void validate(const ProfileSpec& spec);

double target_curvature(const ProfileSpec& spec);
ProfileShape profile_shape(const ProfileSpec& spec);

/// Signed closed form (or its first/second derivative) without positivity checks.
double profile_base(const ProfileSpec& spec, double u, int order = 0);

/// rho(u); throws OutOfDomain when rho(u) <= 0.
double rho(const ProfileSpec& spec, double u);
double rho_derivative(const ProfileSpec& spec, double u, int order);

/// Squared-norm profile of the general rotational surface. Always uses the
/// Euclidean (eps = +1) shape. Throws OutOfDomain where the base vanishes.
double G_profile(const ProfileSpec& spec, double u);
/// dG/du from the closed form.
double G_derivative(const ProfileSpec& spec, double u);
/// sqrt(G) and its derivative, sqrt(G) = |base|.
double sqrt_G(const ProfileSpec& spec, double u);
double sqrt_G_derivative(const ProfileSpec& spec, double u);

enum class MeridianRole { SR1Meridian, SR3Meridian, SR4Meridian };

/// Quantity that must be non-negative for the unit-speed meridian to be
/// completable at u (1 - rho'^2 for SR1, eps + rho'^2 for SR3, ...).
double completion_radicand(const ProfileSpec& spec, MeridianRole role, double u);

bool is_admissible(const ProfileSpec& spec, MeridianRole role, double u);

/// Largest subinterval of `requested` on which rho > 0 and the meridian is
/// completable. Boundaries found by dense sampling plus bisection. Throws
/// EmptyDomain when nothing qualifies.
Interval admissible_domain(const ProfileSpec& spec, MeridianRole role, Interval requested);

}  // namespace rotsurf
