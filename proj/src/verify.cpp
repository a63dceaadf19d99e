#include "rotsurf/verify.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "rotsurf/error.hpp"

namespace rotsurf {

CurvatureReport verify_constant_curvature(const SurfacePatch& patch, double target_K, std::size_t nu,
                                          std::size_t nv, double tolerance,
                                          const CurvatureOptions& options) {
    if (nu < 4 || nv < 4) {
        throw Error(ErrorCode::InvalidArgument, "verification grid needs at least 4 x 4 points");
    }
    CurvatureReport report;
    report.family = patch.family;
    report.target_K = target_K;
    report.tolerance = tolerance;

    double worst = 0.0;
    for (const ParamPoint& p : interior_grid(patch, nu, nv, options.step)) {
        double K;
        try {
            K = gaussian_curvature(patch, p, options);
        } catch (const Error& err) {
            if (err.code() != ErrorCode::DegeneratePoint) throw;
            report.degenerate_points.push_back(p);
            continue;
        }
        report.samples.push_back({p.u, p.v, K});
        const double dev = std::abs(K - target_K);
        worst = std::isfinite(dev) ? std::max(worst, dev) : std::numeric_limits<double>::infinity();
    }
    if (report.samples.empty()) {
        throw Error(ErrorCode::AllDegenerate, "every grid point is degenerate");
    }
    report.max_abs_deviation = worst;
    report.passed = worst <= tolerance;
    return report;
}

Family family_from_string(const std::string& name) {
    for (Family f : {Family::SR1, Family::SR2, Family::SR3, Family::SR4, Family::Custom}) {
        if (name == to_string(f)) return f;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + name + "'");
}

std::string serialize_report(const CurvatureReport& report) {
    nlohmann::json j;
    j["family"] = to_string(report.family);
    j["target_K"] = report.target_K;
    j["tolerance"] = report.tolerance;
    j["max_abs_deviation"] = report.max_abs_deviation;
    j["passed"] = report.passed;
    j["n_samples"] = report.samples.size();
    auto& degenerate = j["degenerate_points"] = nlohmann::json::array();
    for (const ParamPoint& p : report.degenerate_points) degenerate.push_back({p.u, p.v});
    auto& samples = j["samples"] = nlohmann::json::array();
    for (const CurvatureSample& s : report.samples) samples.push_back({s.u, s.v, s.K});
    return j.dump(2);
}

CurvatureReport parse_report(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed report: ") + e.what());
    }
    CurvatureReport report;
    try {
        report.family = family_from_string(j.at("family").get<std::string>());
        report.target_K = j.at("target_K").get<double>();
        report.tolerance = j.at("tolerance").get<double>();
        // inf does not survive JSON; it is written as null.
        const auto& dev = j.at("max_abs_deviation");
        report.max_abs_deviation =
            dev.is_null() ? std::numeric_limits<double>::infinity() : dev.get<double>();
        report.passed = j.at("passed").get<bool>();
        for (const auto& p : j.at("degenerate_points")) {
            report.degenerate_points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        }
        if (j.contains("samples")) {
            for (const auto& s : j.at("samples")) {
                report.samples.push_back(
                    {s.at(0).get<double>(), s.at(1).get<double>(), s.at(2).get<double>()});
            }
        }
        if (j.at("n_samples").get<std::size_t>() != report.samples.size() && j.contains("samples")) {
            throw Error(ErrorCode::InvalidArgument, "n_samples does not match the sample list");
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed report: ") + e.what());
    }
    return report;
}

}  // namespace rotsurf
