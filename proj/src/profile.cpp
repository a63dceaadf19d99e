#include "rotsurf/profile.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "rotsurf/error.hpp"

namespace rotsurf {

namespace {

constexpr int kDomainSamples = 10000;

double shaped_value(ProfileShape shape, const ProfileSpec& spec, double u, int order) {
    const double C = spec.C;
    switch (shape) {
        case ProfileShape::Exponential: {
            const double scale = std::pow(C, order);
            const double tail = (order % 2 == 0) ? spec.C2 : -spec.C2;
            return scale * (spec.C1 * std::exp(C * u) + tail * std::exp(-C * u));
        }
        case ProfileShape::Trigonometric: {
            const double s = std::sin(C * u);
            const double c = std::cos(C * u);
            switch (order) {
                case 0: return spec.C1 * s + spec.C2 * c;
                case 1: return C * (spec.C1 * c - spec.C2 * s);
                case 2: return -C * C * (spec.C1 * s + spec.C2 * c);
                default: break;
            }
            break;
        }
        case ProfileShape::Affine:
            switch (order) {
                case 0: return spec.C1 * u + spec.C2;
                case 1: return spec.C1;
                default: return 0.0;
            }
    }
    throw Error(ErrorCode::InvalidArgument, "profile derivative order must be 0, 1 or 2");
}

ProfileShape euclidean_shape(const ProfileSpec& spec) {
    switch (spec.curvature_class) {
        case CurvatureClass::NegativeK: return ProfileShape::Exponential;
        case CurvatureClass::PositiveK: return ProfileShape::Trigonometric;
        case CurvatureClass::ZeroK: return ProfileShape::Affine;
    }
    return ProfileShape::Affine;
}

void check_order(int order) {
    if (order < 0 || order > 2) {
        throw Error(ErrorCode::InvalidArgument, "profile derivative order must be 0, 1 or 2");
    }
}

}  // namespace

void validate(const ProfileSpec& spec) {
    if (spec.eps != 1 && spec.eps != -1) {
        throw Error(ErrorCode::InvalidArgument, "eps must be +1 or -1");
    }
    if (spec.curvature_class != CurvatureClass::ZeroK && !(spec.C > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "C must be positive for a curved class");
    }
    if (!std::isfinite(spec.C1) || !std::isfinite(spec.C2)) {
        throw Error(ErrorCode::InvalidArgument, "C1 and C2 must be finite");
    }
}

double target_curvature(const ProfileSpec& spec) {
    switch (spec.curvature_class) {
        case CurvatureClass::NegativeK: return -spec.C * spec.C;
        case CurvatureClass::PositiveK: return spec.C * spec.C;
        case CurvatureClass::ZeroK: return 0.0;
    }
    return 0.0;
}

ProfileShape profile_shape(const ProfileSpec& spec) {
    if (spec.curvature_class == CurvatureClass::ZeroK) return ProfileShape::Affine;
    const int k_sign = spec.curvature_class == CurvatureClass::PositiveK ? 1 : -1;
    return spec.eps * k_sign > 0 ? ProfileShape::Trigonometric : ProfileShape::Exponential;
}

double profile_base(const ProfileSpec& spec, double u, int order) {
    check_order(order);
    return shaped_value(profile_shape(spec), spec, u, order);
}

double rho(const ProfileSpec& spec, double u) {
    const double value = profile_base(spec, u, 0);
    if (!(value > 0.0)) {
        std::ostringstream msg;
        msg << "rho(" << u << ") = " << value << " is not positive";
        throw Error(ErrorCode::OutOfDomain, msg.str(), u);
    }
    return value;
}

double rho_derivative(const ProfileSpec& spec, double u, int order) {
    return profile_base(spec, u, order);
}

double G_profile(const ProfileSpec& spec, double u) {
    const double base = shaped_value(euclidean_shape(spec), spec, u, 0);
    if (base == 0.0) {
        std::ostringstream msg;
        msg << "G vanishes at u = " << u;
        throw Error(ErrorCode::OutOfDomain, msg.str(), u);
    }
    return base * base;
}

double G_derivative(const ProfileSpec& spec, double u) {
    const ProfileShape shape = euclidean_shape(spec);
    return 2.0 * shaped_value(shape, spec, u, 0) * shaped_value(shape, spec, u, 1);
}

double sqrt_G(const ProfileSpec& spec, double u) {
    return std::sqrt(G_profile(spec, u));
}

double sqrt_G_derivative(const ProfileSpec& spec, double u) {
    const ProfileShape shape = euclidean_shape(spec);
    const double base = shaped_value(shape, spec, u, 0);
    const double slope = shaped_value(shape, spec, u, 1);
    return base < 0.0 ? -slope : slope;
}

double completion_radicand(const ProfileSpec& spec, MeridianRole role, double u) {
    const double slope = profile_base(spec, u, 1);
    const double slope_sq = slope * slope;
    switch (role) {
        case MeridianRole::SR1Meridian: return 1.0 - slope_sq;
        case MeridianRole::SR3Meridian: return spec.eps + slope_sq;
        // eps = +1 completes in the spacelike (x1, x3) plane, eps = -1 along x4.
        case MeridianRole::SR4Meridian: return spec.eps > 0 ? 1.0 - slope_sq : 1.0 + slope_sq;
    }
    return 0.0;
}

bool is_admissible(const ProfileSpec& spec, MeridianRole role, double u) {
    return profile_base(spec, u, 0) > 0.0 && completion_radicand(spec, role, u) >= 0.0;
}

Interval admissible_domain(const ProfileSpec& spec, MeridianRole role, Interval requested) {
    validate(spec);
    if (!(requested.hi > requested.lo)) {
        throw Error(ErrorCode::InvalidArgument, "requested interval is empty");
    }
    if (role == MeridianRole::SR1Meridian && spec.eps != 1) {
        throw Error(ErrorCode::InvalidArgument, "SR1 meridians require eps = +1");
    }
    auto ok = [&](double u) { return is_admissible(spec, role, u); };

    // Shrinks [good, bad] onto the predicate boundary, returning the good side.
    auto refine = [&](double good, double bad) {
        for (int it = 0; it < 200 && std::abs(bad - good) > 1e-14 * (1.0 + std::abs(good)); ++it) {
            const double mid = 0.5 * (good + bad);
            (ok(mid) ? good : bad) = mid;
        }
        return good;
    };

    const int n = kDomainSamples;
    std::vector<double> grid(n + 1);
    for (int i = 0; i <= n; ++i) {
        grid[i] = requested.lo + requested.length() * static_cast<double>(i) / n;
    }
    grid[n] = requested.hi;

    Interval best{0.0, 0.0};
    bool found = false;
    int i = 0;
    while (i <= n) {
        if (!ok(grid[i])) {
            ++i;
            continue;
        }
        const int start = i;
        while (i + 1 <= n && ok(grid[i + 1])) ++i;
        const int stop = i;
        const double lo = start == 0 ? grid[0] : refine(grid[start], grid[start - 1]);
        const double hi = stop == n ? grid[n] : refine(grid[stop], grid[stop + 1]);
        if (hi > lo && (!found || hi - lo > best.length())) {
            best = {lo, hi};
            found = true;
        }
        ++i;
    }
    if (!found) {
        std::ostringstream msg;
        msg << "no admissible subinterval of [" << requested.lo << ", " << requested.hi << "]";
        throw Error(ErrorCode::EmptyDomain, msg.str());
    }
    return best;
}

}  // namespace rotsurf
