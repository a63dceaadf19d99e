#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "rotsurf/error.hpp"
#include "rotsurf/export.hpp"
#include "rotsurf/profile.hpp"
#include "rotsurf/surface_builder.hpp"
#include "rotsurf/verify.hpp"

using namespace rotsurf;

namespace {

constexpr double kPi = std::numbers::pi;

SurfacePatch sphere() {
    const ProfileSpec spec{CurvatureClass::PositiveK, 1.0, 1.0, 0.0, 1};
    return build_surface(Family::SR1, complete_meridian(spec, Family::SR1, {0.05, kPi - 0.05}), {0, 2 * kPi});
}

SurfacePatch plane() {
    SurfacePatch p;
    p.eval = [](double u, double v) { return Vec4{u, v, 0.0, 0.0}; };
    p.domain_u = {0, 1};
    p.domain_v = {0, 1};
    return p;
}

CurvatureOptions fd() {
    CurvatureOptions o;
    o.prefer_analytic = false;
    return o;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("verification reports") {
    const CurvatureReport ok = verify_constant_curvature(sphere(), 1.0, 20, 20, 1e-3, fd());
    CHECK(ok.passed);
    CHECK(ok.family == Family::SR1);
    CHECK(ok.samples.size() == 400);
    CHECK(ok.degenerate_points.empty());
    CHECK(ok.max_abs_deviation < 1e-3);

    const ProfileSpec cosh{CurvatureClass::NegativeK, 1.0, 0.5, 0.5, 1};
    const Interval d = admissible_domain(cosh, MeridianRole::SR1Meridian, {-2, 2});
    const SurfacePatch hyp = build_surface(Family::SR1, complete_meridian(cosh, Family::SR1, d), {0, 2 * kPi});
    CHECK(verify_constant_curvature(hyp, -1.0, 20, 20, 1e-3).passed);
    // f' has a square-root zero at the ends, which finite-difference tangents
    // resolve poorly, so the tangent-free pipeline runs on a trimmed domain.
    const Interval trimmed{d.lo + 0.05 * d.length(), d.hi - 0.05 * d.length()};
    const SurfacePatch inner = build_surface(Family::SR1, complete_meridian(cosh, Family::SR1, trimmed), {0, 2 * kPi});
    CHECK(verify_constant_curvature(inner, -1.0, 20, 20, 1e-3, fd()).passed);

    const CurvatureReport wrong = verify_constant_curvature(sphere(), 0.0, 20, 20, 1e-3, fd());
    CHECK_FALSE(wrong.passed);
    CHECK(wrong.max_abs_deviation == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("report invariants") {
    const CurvatureReport r = verify_constant_curvature(sphere(), 0.999, 6, 7, 5e-4);
    double worst = 0;
    for (const auto& s : r.samples) worst = std::max(worst, std::abs(s.K - r.target_K));
    CHECK(worst == r.max_abs_deviation);
    CHECK(r.passed == (r.max_abs_deviation <= r.tolerance));
    CHECK(r.tolerance == 5e-4);
}

TEST_CASE("degenerate points are skipped and listed") {
    // The cone rho = u reaches the axis only at u = 0, which the 5 x 4 grid hits.
    SurfacePatch cone;
    cone.family = Family::SR1;
    cone.eval = [](double u, double v) { return Vec4{u, 0.0, u * std::cos(v), u * std::sin(v)}; };
    cone.domain_u = {-1, 1};
    cone.domain_v = {0, 2 * kPi};
    const CurvatureReport r = verify_constant_curvature(cone, 0.0, 5, 4, 1e-3, fd());
    CHECK(r.degenerate_points.size() == 4);
    CHECK(r.samples.size() == 16);
    for (const auto& p : r.degenerate_points) CHECK(std::abs(p.u) < 1e-12);
    CHECK(r.passed);

    SurfacePatch collapsed;
    collapsed.eval = [](double u, double) { return Vec4{u, 0.0, 0.0, 0.0}; };
    collapsed.domain_u = {0, 1};
    collapsed.domain_v = {0, 1};
    try {
        verify_constant_curvature(collapsed, 0.0, 4, 4, 1e-3);
        FAIL("expected AllDegenerate");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AllDegenerate);
    }
    CHECK_THROWS_AS(verify_constant_curvature(plane(), 0.0, 3, 4, 1e-3), Error);
}

TEST_CASE("report serialization round-trips") {
    auto gen = oracle::rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        CurvatureReport r;
        r.family = static_cast<Family>(trial % 5);
        r.target_K = oracle::uniform(gen, -3, 3);
        r.tolerance = oracle::uniform(gen, 1e-6, 1e-2);
        for (int i = 0; i < trial; ++i) {
            r.samples.push_back({oracle::uniform(gen, -1, 1), oracle::uniform(gen, 0, 6), oracle::uniform(gen, -3, 3)});
        }
        if (trial % 3 == 0) r.degenerate_points.push_back({oracle::uniform(gen, -1, 1), 0.5});
        r.max_abs_deviation = trial == 7 ? std::numeric_limits<double>::infinity() : oracle::uniform(gen, 0, 1);
        r.passed = trial % 2 == 0;

        const CurvatureReport back = parse_report(serialize_report(r));
        CHECK(back.family == r.family);
        CHECK(back.target_K == r.target_K);
        CHECK(back.tolerance == r.tolerance);
        CHECK(back.max_abs_deviation == r.max_abs_deviation);
        CHECK(back.passed == r.passed);
        REQUIRE(back.samples.size() == r.samples.size());
        for (std::size_t i = 0; i < r.samples.size(); ++i) {
            CHECK(back.samples[i].u == r.samples[i].u);
            CHECK(back.samples[i].v == r.samples[i].v);
            CHECK(back.samples[i].K == r.samples[i].K);
        }
        REQUIRE(back.degenerate_points.size() == r.degenerate_points.size());
        for (std::size_t i = 0; i < r.degenerate_points.size(); ++i) {
            CHECK(back.degenerate_points[i].u == r.degenerate_points[i].u);
            CHECK(back.degenerate_points[i].v == r.degenerate_points[i].v);
        }
    }
}

TEST_CASE("report json keys") {
    const std::string text = serialize_report(verify_constant_curvature(plane(), 0.0, 4, 4, 1e-6));
    for (const char* key : {"\"family\"", "\"target_K\"", "\"tolerance\"", "\"max_abs_deviation\"", "\"passed\"",
                            "\"n_samples\"", "\"degenerate_points\""}) {
        CHECK(text.find(key) != std::string::npos);
    }
    CHECK_THROWS_AS(parse_report("{not json"), Error);
    CHECK_THROWS_AS(parse_report("{\"family\": \"SR9\"}"), Error);
}

TEST_CASE("CSV export") {
    const std::string csv = export_grid(plane(), 2, 2, ExportFormat::CSV4D);
    const auto rows = lines(csv);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "u,v,x1,x2,x3,x4");
    CHECK(rows[1] == "0,0,0,0,0,0");
    CHECK(rows[2] == "0,1,0,1,0,0");
    CHECK(rows[4] == "1,1,1,1,0,0");

    SurfacePatch third = plane();
    third.eval = [](double u, double v) { return Vec4{u / 3, v, 0.0, 0.0}; };
    const auto digits = lines(export_grid(third, 2, 2, ExportFormat::CSV4D));
    CHECK(digits[3].find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("OBJ and PLY export") {
    const auto obj = lines(export_grid(plane(), 3, 3, ExportFormat::OBJ, Projection::DropX4));
    int vertices = 0, faces = 0;
    for (const auto& l : obj) {
        if (l.rfind("v ", 0) == 0) ++vertices;
        if (l.rfind("f ", 0) == 0) ++faces;
    }
    CHECK(vertices == 9);
    CHECK(faces == 4);
    CHECK(std::find(obj.begin(), obj.end(), "f 1 4 5 2") != obj.end());

    const std::string ply = export_grid(plane(), 3, 3, ExportFormat::PLY, Projection::DropX4);
    CHECK(ply.rfind("ply\nformat ascii 1.0\n", 0) == 0);
    CHECK(ply.find("element vertex 9") != std::string::npos);
    CHECK(ply.find("element face 4") != std::string::npos);
    CHECK(ply.find("4 0 3 4 1") != std::string::npos);

    CHECK_THROWS_AS(export_grid(plane(), 3, 3, ExportFormat::OBJ), Error);
    CHECK_THROWS_AS(export_grid(plane(), 1, 3, ExportFormat::CSV4D), Error);
}

TEST_CASE("projections") {
    const SurfacePatch s = sphere();
    const auto obj = lines(export_grid(s, 7, 9, ExportFormat::OBJ, Projection::DropX2));
    std::size_t k = 0;
    for (const auto& l : obj) {
        if (l.rfind("v ", 0) != 0) continue;
        std::istringstream in(l.substr(2));
        double x1, x3, x4;
        in >> x1 >> x3 >> x4;
        const double u = 0.05 + (kPi - 0.1) * static_cast<double>(k / 9) / 6.0;
        CHECK(std::abs(x3 * x3 + x4 * x4 - std::sin(u) * std::sin(u)) < 1e-9);
        CHECK(std::abs(x1 - (std::cos(0.05) - std::cos(u))) < 1e-9);
        ++k;
    }
    CHECK(k == 63);

    const auto p = stereographic({1, 2, 3, 0.5}, 2.0);
    CHECK(p[0] == doctest::Approx(1 * 2.0 / 1.5));
    CHECK(p[2] == doctest::Approx(3 * 2.0 / 1.5));
    const auto dropped = drop_coordinate({1, 2, 3, 4}, 0);
    CHECK(dropped == std::array<double, 3>{2, 3, 4});

    const std::string stereo = export_grid(s, 5, 5, ExportFormat::OBJ, Projection::Stereographic);
    CHECK(stereo.find("R = ") != std::string::npos);
}

TEST_CASE("exports are deterministic") {
    const SurfacePatch s = sphere();
    for (ExportFormat f : {ExportFormat::CSV4D, ExportFormat::OBJ, ExportFormat::PLY}) {
        const auto proj = f == ExportFormat::CSV4D ? std::nullopt : std::optional{Projection::Stereographic};
        CHECK(export_grid(s, 8, 6, f, proj) == export_grid(s, 8, 6, f, proj));
    }
}
