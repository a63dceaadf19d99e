#pragma once

#include <array>
#include <functional>
#include <optional>

namespace rotsurf {

using Vec4 = std::array<double, 4>;

/// Ambient inner product on four-space. Lorentz4 is x1y1 + x2y2 + x3y3 - x4y4.
enum class MetricSignature { Euclidean4, Lorentz4 };

enum class Family { SR1, SR2, SR3, SR4, Custom };

const char* to_string(Family family);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
};

struct ParamPoint {
    double u = 0.0;
    double v = 0.0;
};

enum class Direction { U, V };

double inner_product(MetricSignature sig, const Vec4& x, const Vec4& y);

Vec4 operator+(const Vec4& a, const Vec4& b);
Vec4 operator-(const Vec4& a, const Vec4& b);
Vec4 operator*(double s, const Vec4& a);

using PatchMap = std::function<Vec4(double, double)>;

/// A map (u, v) -> four-space over a closed rectangle. Named families may
/// carry analytic tangent maps; the curvature engine uses them when present.
struct SurfacePatch {
    Family family = Family::Custom;
    PatchMap eval;
    Interval domain_u;
    Interval domain_v;
    MetricSignature signature = MetricSignature::Euclidean4;
    PatchMap d_du;
    PatchMap d_dv;

    Vec4 operator()(double u, double v) const { return eval(u, v); }
    bool has_analytic_tangents() const { return static_cast<bool>(d_du) && static_cast<bool>(d_dv); }
};

inline constexpr double kDefaultStep = 1e-4;

/// Central difference (X(p + h e) - X(p - h e)) / 2h. Throws DomainMargin when
/// p +/- h leaves the patch domain.
Vec4 partial_derivative(const SurfacePatch& patch, Direction which, ParamPoint point,
                        double step = kDefaultStep);

/// Analytic tangent when the patch provides one, central difference otherwise.
Vec4 tangent(const SurfacePatch& patch, Direction which, ParamPoint point, double step,
             bool prefer_analytic);

}  // namespace rotsurf
