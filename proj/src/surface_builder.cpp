#include "rotsurf/surface_builder.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include <boost/math/interpolators/cubic_hermite.hpp>

#include "quadrature.hpp"
#include "rotsurf/error.hpp"
#include "rotsurf/meridian_ode.hpp"

namespace rotsurf {

namespace {

constexpr int kFeasibilitySamples = 1000;
constexpr int kValidationSamples = 200;
constexpr double kRadicandSlack = 1e-12;
constexpr double kAxisSlack = 1e-12;
constexpr double kUnitSpeedTolerance = 1e-8;

MeridianRole role_for(Family family) {
    switch (family) {
        case Family::SR1: return MeridianRole::SR1Meridian;
        case Family::SR3: return MeridianRole::SR3Meridian;
        case Family::SR4: return MeridianRole::SR4Meridian;
        default: break;
    }
    throw Error(ErrorCode::InvalidArgument, "complete_meridian supports SR1, SR3 and SR4");
}

MetricSignature signature_for(Family family) {
    return (family == Family::SR3 || family == Family::SR4) ? MetricSignature::Lorentz4
                                                            : MetricSignature::Euclidean4;
}

void validate_meridian(Family family, const MeridianCurve& m) {
    const bool needs_rho = family != Family::SR2;
    if (!m.f || !m.g || !m.df || !m.dg || (needs_rho && (!m.rho || !m.drho))) {
        throw Error(ErrorCode::InvalidArgument, "meridian is missing a component or derivative");
    }
    if (!(m.domain.hi > m.domain.lo)) {
        throw Error(ErrorCode::InvalidArgument, "meridian domain is empty");
    }
    if (m.signature != signature_for(family)) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string("meridian signature does not match family ") + to_string(family));
    }
    for (int i = 0; i <= kValidationSamples; ++i) {
        const double u = m.domain.lo + m.domain.length() * i / kValidationSamples;
        const double defect = arc_length_defect(family, m, u);
        if (!(std::abs(defect) <= kUnitSpeedTolerance)) {
            std::ostringstream msg;
            msg << "meridian is not unit speed at u = " << u << " (defect " << defect << ")";
            throw Error(ErrorCode::InvalidArgument, msg.str(), u);
        }
    }
}

}  // namespace

double arc_length_defect(Family family, const MeridianCurve& m, double u) {
    const double fp = m.df(u);
    const double gp = m.dg(u);
    const double rp = m.drho ? m.drho(u) : 0.0;
    switch (family) {
        case Family::SR1: return fp * fp + gp * gp + rp * rp - 1.0;
        case Family::SR2: return fp * fp + gp * gp - 1.0;
        case Family::SR3: return fp * fp + gp * gp - rp * rp - m.eps;
        case Family::SR4: return rp * rp + fp * fp - gp * gp - m.eps;
        case Family::Custom: break;
    }
    throw Error(ErrorCode::InvalidArgument, "no arc-length identity for Custom patches");
}

MeridianCurve complete_meridian(const ProfileSpec& spec, Family family, Interval domain) {
    validate(spec);
    const MeridianRole role = role_for(family);
    if (family == Family::SR1 && spec.eps != 1) {
        throw Error(ErrorCode::InvalidArgument, "SR1 meridians require eps = +1");
    }
    if (!(domain.hi > domain.lo)) {
        throw Error(ErrorCode::InvalidArgument, "meridian domain is empty");
    }
    for (int i = 0; i <= kFeasibilitySamples; ++i) {
        const double u = domain.lo + domain.length() * i / kFeasibilitySamples;
        if (i == 0 || i == kFeasibilitySamples) {
            // The profile may touch the axis at an end of the domain.
            if (profile_base(spec, u, 0) < -kAxisSlack) rho(spec, u);
        } else {
            rho(spec, u);
        }
        if (completion_radicand(spec, role, u) < -kRadicandSlack) {
            std::ostringstream msg;
            msg << "unit-speed completion impossible at u = " << u;
            throw Error(ErrorCode::InfeasibleDomain, msg.str(), u);
        }
    }

    auto speed = [spec, role](double t) {
        const double r = completion_radicand(spec, role, t);
        if (r < -kRadicandSlack) {
            throw Error(ErrorCode::InfeasibleDomain, "completion integrand negative", t);
        }
        return std::sqrt(std::max(r, 0.0));
    };
    const detail::CumulativeIntegral arc(speed, domain);
    auto zero = [](double) { return 0.0; };

    MeridianCurve m;
    m.domain = domain;
    m.signature = signature_for(family);
    m.eps = spec.eps;
    m.rho = [spec, domain](double u) {
        const double r = profile_base(spec, u, 0);
        if ((u == domain.lo || u == domain.hi) && std::abs(r) <= kAxisSlack) return std::max(r, 0.0);
        return rho(spec, u);
    };
    m.drho = [spec](double u) { return rho_derivative(spec, u, 1); };
    const bool along_g = family == Family::SR4 && spec.eps < 0;
    if (along_g) {
        m.f = zero;
        m.df = zero;
        m.g = arc;
        m.dg = [arc](double u) { return arc.derivative(u); };
    } else {
        m.f = arc;
        m.df = [arc](double u) { return arc.derivative(u); };
        m.g = zero;
        m.dg = zero;
    }
    return m;
}

SurfacePatch build_surface(Family family, const MeridianCurve& meridian, Interval v_range) {
    if (family != Family::SR1 && family != Family::SR3 && family != Family::SR4) {
        throw Error(ErrorCode::InvalidArgument, "build_surface supports SR1, SR3 and SR4");
    }
    if (!(v_range.hi > v_range.lo)) {
        throw Error(ErrorCode::InvalidArgument, "v-range is empty");
    }
    validate_meridian(family, meridian);

    SurfacePatch patch;
    patch.family = family;
    patch.domain_u = meridian.domain;
    patch.domain_v = v_range;
    patch.signature = signature_for(family);
    const MeridianCurve m = meridian;
    switch (family) {
        case Family::SR1:
            patch.eval = [m](double u, double v) {
                const double r = m.rho(u);
                return Vec4{m.f(u), m.g(u), r * std::cos(v), r * std::sin(v)};
            };
            patch.d_du = [m](double u, double v) {
                const double rp = m.drho(u);
                return Vec4{m.df(u), m.dg(u), rp * std::cos(v), rp * std::sin(v)};
            };
            patch.d_dv = [m](double u, double v) {
                const double r = m.rho(u);
                return Vec4{0.0, 0.0, -r * std::sin(v), r * std::cos(v)};
            };
            break;
        case Family::SR3:
            patch.eval = [m](double u, double v) {
                const double r = m.rho(u);
                return Vec4{m.f(u), m.g(u), r * std::sinh(v), r * std::cosh(v)};
            };
            patch.d_du = [m](double u, double v) {
                const double rp = m.drho(u);
                return Vec4{m.df(u), m.dg(u), rp * std::sinh(v), rp * std::cosh(v)};
            };
            patch.d_dv = [m](double u, double v) {
                const double r = m.rho(u);
                return Vec4{0.0, 0.0, r * std::cosh(v), r * std::sinh(v)};
            };
            break;
        default:
            patch.eval = [m](double u, double v) {
                const double r = m.rho(u);
                return Vec4{r * std::cos(v), r * std::sin(v), m.f(u), m.g(u)};
            };
            patch.d_du = [m](double u, double v) {
                const double rp = m.drho(u);
                return Vec4{rp * std::cos(v), rp * std::sin(v), m.df(u), m.dg(u)};
            };
            patch.d_dv = [m](double u, double v) {
                const double r = m.rho(u);
                return Vec4{-r * std::sin(v), r * std::cos(v), 0.0, 0.0};
            };
            break;
    }
    return patch;
}

MeridianCurve sr2_meridian(const MeridianSolution& solution) {
    if (solution.u_samples.size() < 2 || solution.phi.size() != solution.u_samples.size() ||
        solution.phi_prime.size() != solution.u_samples.size()) {
        throw Error(ErrorCode::InvalidArgument, "meridian solution needs matching sample arrays");
    }
    if (!(solution.alpha > 0.0) || !(solution.beta > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "rates of rotation must be positive");
    }
    using boost::math::interpolators::cubic_hermite;
    std::vector<double> x = solution.u_samples;
    std::vector<double> y = solution.phi;
    std::vector<double> dy = solution.phi_prime;
    const cubic_hermite<std::vector<double>> phi(std::move(x), std::move(y), std::move(dy));

    const ProfileSpec spec = solution.spec;
    const double alpha = solution.alpha;
    const double beta = solution.beta;

    MeridianCurve m;
    m.domain = {solution.u_samples.front(), solution.u_samples.back()};
    m.signature = MetricSignature::Euclidean4;
    m.eps = 1;
    m.f = [=](double u) { return sqrt_G(spec, u) * std::cos(phi(u)) / alpha; };
    m.g = [=](double u) { return sqrt_G(spec, u) * std::sin(phi(u)) / beta; };
    m.df = [=](double u) {
        const double p = phi(u);
        return (sqrt_G_derivative(spec, u) * std::cos(p) - sqrt_G(spec, u) * std::sin(p) * phi.prime(u)) /
               alpha;
    };
    m.dg = [=](double u) {
        const double p = phi(u);
        return (sqrt_G_derivative(spec, u) * std::sin(p) + sqrt_G(spec, u) * std::cos(p) * phi.prime(u)) /
               beta;
    };
    return m;
}

SurfacePatch build_sr2(const MeridianSolution& solution, Interval v_range) {
    if (!(v_range.hi > v_range.lo)) {
        throw Error(ErrorCode::InvalidArgument, "v-range is empty");
    }
    const MeridianCurve m = sr2_meridian(solution);
    const double a = solution.alpha;
    const double b = solution.beta;

    SurfacePatch patch;
    patch.family = Family::SR2;
    patch.domain_u = m.domain;
    patch.domain_v = v_range;
    patch.signature = MetricSignature::Euclidean4;
    patch.eval = [m, a, b](double u, double v) {
        const double f = m.f(u);
        const double g = m.g(u);
        return Vec4{f * std::cos(a * v), f * std::sin(a * v), g * std::cos(b * v), g * std::sin(b * v)};
    };
    patch.d_du = [m, a, b](double u, double v) {
        const double fp = m.df(u);
        const double gp = m.dg(u);
        return Vec4{fp * std::cos(a * v), fp * std::sin(a * v), gp * std::cos(b * v), gp * std::sin(b * v)};
    };
    patch.d_dv = [m, a, b](double u, double v) {
        const double f = m.f(u);
        const double g = m.g(u);
        return Vec4{-a * f * std::sin(a * v), a * f * std::cos(a * v), -b * g * std::sin(b * v),
                    b * g * std::cos(b * v)};
    };
    return patch;
}

}  // namespace rotsurf
