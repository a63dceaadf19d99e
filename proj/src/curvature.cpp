#include "rotsurf/curvature.hpp"

#include <cmath>
#include <sstream>

#include "rotsurf/error.hpp"

namespace rotsurf {

namespace {

int sign_of(double x) { return x < 0.0 ? -1 : 1; }

FundamentalForm raw_form(const SurfacePatch& patch, ParamPoint point, double step,
                         bool prefer_analytic) {
    const Vec4 xu = tangent(patch, Direction::U, point, step, prefer_analytic);
    const Vec4 xv = tangent(patch, Direction::V, point, step, prefer_analytic);
    FundamentalForm form;
    form.E = inner_product(patch.signature, xu, xu);
    form.F = inner_product(patch.signature, xu, xv);
    form.G = inner_product(patch.signature, xv, xv);
    form.eps1 = sign_of(form.E);
    form.eps2 = sign_of(form.G);
    return form;
}

void check_nondegenerate(const FundamentalForm& form, ParamPoint at, double tol) {
    if (std::abs(form.E) < tol || std::abs(form.G) < tol) {
        std::ostringstream msg;
        msg << "E = " << form.E << ", G = " << form.G << " at (" << at.u << ", " << at.v << ")";
        throw Error(ErrorCode::DegeneratePoint, msg.str(), std::array{at.u, at.v});
    }
}

struct Scales {
    double e;
    double g;
};

void check_margin(const SurfacePatch& patch, ParamPoint point, double reach) {
    const double slack = 1e-12;
    auto inside = [&](const Interval& d, double x) {
        return x - reach >= d.lo - slack * (1.0 + std::abs(d.lo)) &&
               x + reach <= d.hi + slack * (1.0 + std::abs(d.hi));
    };
    if (!inside(patch.domain_u, point.u) || !inside(patch.domain_v, point.v)) {
        std::ostringstream msg;
        msg << "curvature stencil of half-width " << reach << " at (" << point.u << ", " << point.v
            << ") leaves the domain";
        throw Error(ErrorCode::DomainMargin, msg.str(), std::array{point.u, point.v});
    }
}

}  // namespace

FundamentalForm fundamental_form(const SurfacePatch& patch, ParamPoint point,
                                 const CurvatureOptions& options) {
    FundamentalForm form = raw_form(patch, point, options.step, options.prefer_analytic);
    check_nondegenerate(form, point, options.tol_degenerate);
    return form;
}

FundamentalForm fundamental_form(const SurfacePatch& patch, ParamPoint point, double step) {
    CurvatureOptions options;
    options.step = step;
    return fundamental_form(patch, point, options);
}

double gaussian_curvature(const SurfacePatch& patch, ParamPoint point,
                          const CurvatureOptions& options) {
    const double h = options.step;
    if (!(h > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "finite-difference step must be positive");
    }
    const bool analytic = options.prefer_analytic && patch.has_analytic_tangents();
    check_margin(patch, point, (analytic ? 2.0 : 3.0) * h);

    const FundamentalForm center = fundamental_form(patch, point, options);
    if (std::abs(center.F) > options.tol_orthogonal) {
        std::ostringstream msg;
        msg << "|F| = " << std::abs(center.F) << " at (" << point.u << ", " << point.v << ")";
        throw Error(ErrorCode::NotOrthogonal, msg.str(), std::array{point.u, point.v});
    }

    auto scales = [&](double u, double v) {
        const FundamentalForm form = fundamental_form(patch, {u, v}, options);
        return Scales{std::sqrt(std::abs(form.E)), std::sqrt(std::abs(form.G))};
    };

    const double u = point.u;
    const double v = point.v;
    const Scales s0{std::sqrt(std::abs(center.E)), std::sqrt(std::abs(center.G))};

    // (g_u / e)_u
    const Scales um2 = scales(u - 2.0 * h, v);
    const Scales um1 = scales(u - h, v);
    const Scales up1 = scales(u + h, v);
    const Scales up2 = scales(u + 2.0 * h, v);
    const double q_plus = (up2.g - s0.g) / (2.0 * h) / up1.e;
    const double q_minus = (s0.g - um2.g) / (2.0 * h) / um1.e;
    const double term_u = (q_plus - q_minus) / (2.0 * h);

    // (e_v / g)_v
    const Scales vm2 = scales(u, v - 2.0 * h);
    const Scales vm1 = scales(u, v - h);
    const Scales vp1 = scales(u, v + h);
    const Scales vp2 = scales(u, v + 2.0 * h);
    const double r_plus = (vp2.e - s0.e) / (2.0 * h) / vp1.g;
    const double r_minus = (s0.e - vm2.e) / (2.0 * h) / vm1.g;
    const double term_v = (r_plus - r_minus) / (2.0 * h);

    return -(center.eps1 * term_u + center.eps2 * term_v) / (s0.e * s0.g);
}

double gaussian_curvature(const SurfacePatch& patch, ParamPoint point, double step) {
    CurvatureOptions options;
    options.step = step;
    return gaussian_curvature(patch, point, options);
}

std::vector<ParamPoint> interior_grid(const SurfacePatch& patch, std::size_t nu, std::size_t nv,
                                      double step) {
    if (nu < 2 || nv < 2) {
        throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 points per direction");
    }
    const double margin = stencil_margin(step);
    const double u0 = patch.domain_u.lo + margin;
    const double u1 = patch.domain_u.hi - margin;
    const double v0 = patch.domain_v.lo + margin;
    const double v1 = patch.domain_v.hi - margin;
    if (!(u1 > u0) || !(v1 > v0)) {
        throw Error(ErrorCode::InvalidArgument, "domain too small for the stencil margin");
    }
    std::vector<ParamPoint> points;
    points.reserve(nu * nv);
    for (std::size_t i = 0; i < nu; ++i) {
        const double u = u0 + (u1 - u0) * static_cast<double>(i) / static_cast<double>(nu - 1);
        for (std::size_t j = 0; j < nv; ++j) {
            const double v = v0 + (v1 - v0) * static_cast<double>(j) / static_cast<double>(nv - 1);
            points.push_back({u, v});
        }
    }
    return points;
}

std::vector<CurvatureSample> curvature_grid(const SurfacePatch& patch, std::size_t nu,
                                            std::size_t nv, const CurvatureOptions& options) {
    std::vector<CurvatureSample> samples;
    samples.reserve(nu * nv);
    for (const ParamPoint& p : interior_grid(patch, nu, nv, options.step)) {
        try {
            samples.push_back({p.u, p.v, gaussian_curvature(patch, p, options)});
        } catch (const Error& err) {
            if (err.point()) throw;
            throw Error(err.code(), err.detail(), std::array{p.u, p.v});
        }
    }
    return samples;
}

std::vector<CurvatureSample> curvature_grid(const SurfacePatch& patch, std::size_t nu,
                                            std::size_t nv, double step) {
    CurvatureOptions options;
    options.step = step;
    return curvature_grid(patch, nu, nv, options);
}

}  // namespace rotsurf
