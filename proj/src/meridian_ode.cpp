#include "rotsurf/meridian_ode.hpp"

#include <cmath>
#include <sstream>

#include "quadrature.hpp"
#include "rotsurf/error.hpp"

namespace rotsurf {

namespace {

constexpr double kRoundoffSlack = 1e-12;
constexpr double kBisectionTolerance = 1e-8;

void check_rates(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "rates of rotation must be positive");
    }
}

void check_range(Interval range, double step) {
    if (!(range.hi > range.lo)) throw Error(ErrorCode::InvalidArgument, "u-range is empty");
    if (!(step > 0.0)) throw Error(ErrorCode::InvalidArgument, "step must be positive");
}

// G = base^2 is only a valid metric coefficient where the base keeps one sign.
void check_profile_sign(const ProfileSpec& spec, Interval range, double step) {
    const std::size_t n = 4 * static_cast<std::size_t>(std::max(1.0, std::ceil(range.length() / step)));
    const double first = profile_base(spec, range.lo, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        const double u = (i == n) ? range.hi : range.lo + range.length() * static_cast<double>(i) / static_cast<double>(n);
        const double b = profile_base(spec, u, 0);
        if (b == 0.0 || (b > 0.0) != (first > 0.0)) {
            std::ostringstream msg;
            msg << "G vanishes inside the u-range near u = " << u;
            throw Error(ErrorCode::OutOfDomain, msg.str(), u);
        }
    }
}

std::size_t step_count(Interval range, double step) {
    return static_cast<std::size_t>(std::max(1.0, std::ceil(range.length() / step - 1e-9)));
}

void fill_components(MeridianSolution& s) {
    const std::size_t n = s.u_samples.size();
    s.f.resize(n);
    s.g.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double root = sqrt_G(s.spec, s.u_samples[i]);
        s.f[i] = root * std::cos(s.phi[i]) / s.alpha;
        s.g[i] = root * std::sin(s.phi[i]) / s.beta;
    }
}

struct Rk4Step {
    double phi;
    bool ok;
};

}  // namespace

OdeCoefficients ode_coefficients(const ProfileSpec& spec, double alpha, double beta, double u,
                                 double phi) {
    check_rates(alpha, beta);
    const double G = G_profile(spec, u);
    const double dG = G_derivative(spec, u);
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    const double ia2 = 1.0 / (alpha * alpha);
    const double ib2 = 1.0 / (beta * beta);
    OdeCoefficients out;
    out.A = G * (s * s * ia2 + c * c * ib2);
    out.B = dG * s * c * (ib2 - ia2);
    out.Cc = dG * dG / (4.0 * G) * (c * c * ia2 + s * s * ib2) - 1.0;
    return out;
}

double solve_phi_prime(double A, double B, double Cc, int branch) {
    if (!(A > 0.0)) throw Error(ErrorCode::InvalidArgument, "leading coefficient A must be positive");
    if (branch != 1 && branch != -1) throw Error(ErrorCode::InvalidArgument, "branch must be +1 or -1");
    double disc = B * B - 4.0 * A * Cc;
    if (disc < 0.0) {
        // Cc is a difference of O(1) terms, so its roundoff scales with A, not Cc.
        const double scale = B * B + 4.0 * A * (2.0 + std::abs(Cc));
        if (disc < -kRoundoffSlack * scale) {
            std::ostringstream msg;
            msg << "B^2 - 4 A Cc = " << disc << " < 0";
            throw Error(ErrorCode::NegativeDiscriminant, msg.str());
        }
        disc = 0.0;
    }
    return (-B + branch * std::sqrt(disc)) / (2.0 * A);
}

double solve_phi_prime(const OdeCoefficients& c, int branch) {
    return solve_phi_prime(c.A, c.B, c.Cc, branch);
}

double meridian_residual(const ProfileSpec& spec, double alpha, double beta, double u, double phi,
                         double phi_prime) {
    const OdeCoefficients c = ode_coefficients(spec, alpha, beta, u, phi);
    return (c.A * phi_prime + c.B) * phi_prime + c.Cc;
}

MeridianSolution integrate_phi(const ProfileSpec& spec, double alpha, double beta, Interval u_range,
                               double phi0, int branch, double step) {
    validate(spec);
    check_rates(alpha, beta);
    check_range(u_range, step);
    check_profile_sign(spec, u_range, step);
    if (branch != 1 && branch != -1) throw Error(ErrorCode::InvalidArgument, "branch must be +1 or -1");

    auto rhs = [&](double u, double phi) {
        return solve_phi_prime(ode_coefficients(spec, alpha, beta, u, phi), branch);
    };
    auto attempt = [&](double u, double phi, double h) -> Rk4Step {
        try {
            const double k1 = rhs(u, phi);
            const double k2 = rhs(u + 0.5 * h, phi + 0.5 * h * k1);
            const double k3 = rhs(u + 0.5 * h, phi + 0.5 * h * k2);
            const double k4 = rhs(u + h, phi + h * k3);
            const double next = phi + h * (k1 + 2.0 * (k2 + k3) + k4) / 6.0;
            rhs(u + h, next);
            return {next, true};
        } catch (const Error& err) {
            if (err.code() != ErrorCode::NegativeDiscriminant) throw;
            return {phi, false};
        }
    };

    const std::size_t n = step_count(u_range, step);
    const double h = u_range.length() / static_cast<double>(n);

    MeridianSolution out;
    out.alpha = alpha;
    out.beta = beta;
    out.spec = spec;
    out.root_branch = branch;
    out.method = SolveMethod::GeneralODE;
    out.step = h;
    out.u_samples.reserve(n + 1);
    out.phi.reserve(n + 1);

    double u = u_range.lo;
    double phi = phi0;
    try {
        rhs(u, phi);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::NegativeDiscriminant) throw;
        throw Error(ErrorCode::NegativeDiscriminant, "no real phi' at the initial point", u);
    }
    out.u_samples.push_back(u);
    out.phi.push_back(phi);
    for (std::size_t i = 0; i < n; ++i) {
        const double u_next = (i + 1 == n) ? u_range.hi : u_range.lo + h * static_cast<double>(i + 1);
        const Rk4Step next = attempt(u, phi, u_next - u);
        if (!next.ok) {
            double good = 0.0;
            double bad = u_next - u;
            while (bad - good > kBisectionTolerance) {
                const double mid = 0.5 * (good + bad);
                (attempt(u, phi, mid).ok ? good : bad) = mid;
            }
            std::ostringstream msg;
            msg << "discriminant turns negative near u = " << u + bad;
            throw Error(ErrorCode::NegativeDiscriminant, msg.str(), u + bad);
        }
        u = u_next;
        phi = next.phi;
        out.u_samples.push_back(u);
        out.phi.push_back(phi);
    }

    out.phi_prime.resize(out.u_samples.size());
    for (std::size_t i = 0; i < out.u_samples.size(); ++i) {
        out.phi_prime[i] = rhs(out.u_samples[i], out.phi[i]);
    }
    fill_components(out);
    return out;
}

MeridianSolution quadrature_phi(const ProfileSpec& spec, double alpha, Interval u_range,
                                double phi0, double step) {
    validate(spec);
    check_rates(alpha, alpha);
    check_range(u_range, step);
    check_profile_sign(spec, u_range, step);

    const double alpha_sq = alpha * alpha;
    auto integrand = [&](double t) {
        const double root = sqrt_G(spec, t);
        const double slope = sqrt_G_derivative(spec, t);
        const double radicand = alpha_sq - slope * slope;
        if (radicand < -kRoundoffSlack * alpha_sq) {
            std::ostringstream msg;
            msg << "alpha^2 - (sqrt G)'^2 = " << radicand << " at u = " << t;
            throw Error(ErrorCode::NegativeRadicand, msg.str(), t);
        }
        return std::sqrt(std::max(radicand, 0.0)) / root;
    };

    const std::size_t n = step_count(u_range, step);
    const double h = u_range.length() / static_cast<double>(n);

    MeridianSolution out;
    out.alpha = alpha;
    out.beta = alpha;
    out.spec = spec;
    out.root_branch = 1;
    out.method = SolveMethod::ClosedFormQuadrature;
    out.step = h;
    out.u_samples.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        out.u_samples[i] = (i == n) ? u_range.hi : u_range.lo + h * static_cast<double>(i);
    }
    // Radicand first, so a violation is reported at its sample rather than
    // from inside the integrator.
    out.phi_prime.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out.phi_prime[i] = integrand(out.u_samples[i]);

    out.phi.resize(n + 1);
    out.phi[0] = phi0;
    for (std::size_t i = 1; i <= n; ++i) {
        out.phi[i] = out.phi[i - 1] + detail::integrate(integrand, out.u_samples[i - 1], out.u_samples[i]);
    }
    fill_components(out);
    return out;
}

}  // namespace rotsurf
