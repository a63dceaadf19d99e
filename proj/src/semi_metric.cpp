#include "rotsurf/semi_metric.hpp"

#include <cmath>
#include <sstream>

#include "rotsurf/error.hpp"

namespace rotsurf {

const char* to_string(Family family) {
    switch (family) {
        case Family::SR1: return "SR1";
        case Family::SR2: return "SR2";
        case Family::SR3: return "SR3";
        case Family::SR4: return "SR4";
        case Family::Custom: return "Custom";
    }
    return "Custom";
}

double inner_product(MetricSignature sig, const Vec4& x, const Vec4& y) {
    const double spatial = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    const double last = x[3] * y[3];
    return sig == MetricSignature::Lorentz4 ? spatial - last : spatial + last;
}

Vec4 operator+(const Vec4& a, const Vec4& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Vec4 operator-(const Vec4& a, const Vec4& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Vec4 operator*(double s, const Vec4& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3]};
}

namespace {

// Grid points built as lo + margin can land an ulp outside after rounding.
bool within(const Interval& domain, double x) {
    const double slack = 1e-12 * (1.0 + std::abs(domain.lo) + std::abs(domain.hi));
    return x >= domain.lo - slack && x <= domain.hi + slack;
}

}  // namespace

Vec4 partial_derivative(const SurfacePatch& patch, Direction which, ParamPoint point, double step) {
    if (!(step > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "finite-difference step must be positive");
    }
    const bool along_u = which == Direction::U;
    const Interval& domain = along_u ? patch.domain_u : patch.domain_v;
    const double coord = along_u ? point.u : point.v;
    if (!within(domain, coord - step) || !within(domain, coord + step)) {
        std::ostringstream msg;
        msg << "stencil [" << coord - step << ", " << coord + step << "] leaves "
            << (along_u ? "u" : "v") << "-domain [" << domain.lo << ", " << domain.hi << "]";
        throw Error(ErrorCode::DomainMargin, msg.str(), std::array{point.u, point.v});
    }
    // Divide by the spacing actually sampled, which differs from 2 * step by rounding.
    const double hi = coord + step;
    const double lo = coord - step;
    const Vec4 plus = along_u ? patch(hi, point.v) : patch(point.u, hi);
    const Vec4 minus = along_u ? patch(lo, point.v) : patch(point.u, lo);
    return (1.0 / (hi - lo)) * (plus - minus);
}

Vec4 tangent(const SurfacePatch& patch, Direction which, ParamPoint point, double step,
             bool prefer_analytic) {
    if (prefer_analytic && patch.has_analytic_tangents()) {
        return which == Direction::U ? patch.d_du(point.u, point.v) : patch.d_dv(point.u, point.v);
    }
    return partial_derivative(patch, which, point, step);
}

}  // namespace rotsurf
