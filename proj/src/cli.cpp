#include "rotsurf/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotsurf/error.hpp"
#include "rotsurf/export.hpp"
#include "rotsurf/meridian_ode.hpp"
#include "rotsurf/profile.hpp"
#include "rotsurf/surface_builder.hpp"
#include "rotsurf/verify.hpp"

namespace rotsurf {

namespace {

using nlohmann::json;

struct Settings {
    std::string family;
    std::string klass;
    double C = 1.0;
    double C1 = 0.0;
    double C2 = 1.0;
    int eps = 1;
    double alpha = 1.0;
    double beta = 1.0;
    double phi0 = 0.0;
    std::string branch = "+";
    std::string method = "ode";
    double u_min = 0.0;
    double u_max = 0.0;
    double v_min = 0.0;
    double v_max = 0.0;
    std::size_t nu = 20;
    std::size_t nv = 20;
    std::string format;
    std::string projection;
    std::string out;
    double step = kDefaultOdeStep;
    double fd_step = kDefaultStep;
    bool finite_difference = false;
    double target_K = 0.0;
    double tol = 1e-3;
    std::string report;
    std::string config;
};

/// Binds flags to settings and lets a JSON config fill whatever the command
/// line left unset.
class Binder {
public:
    explicit Binder(CLI::App* app) : app_(app) {}

    template <class T>
    void add(const std::string& name, T& target, const std::string& help) {
        options_[name] = app_->add_option("--" + name, target, help);
        setters_[name] = [&target](const json& value) { target = value.get<T>(); };
    }

    void flag(const std::string& name, bool& target, const std::string& help) {
        options_[name] = app_->add_flag("--" + name, target, help);
        setters_[name] = [&target](const json& value) { target = value.get<bool>(); };
    }

    /// Keys known only to other subcommands are ignored, so one config file
    /// can drive every command.
    void apply_config(const std::string& path, const std::set<std::string>& all_keys) {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open config '" + path + "'");
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::InvalidArgument, "config '" + path + "': " + e.what());
        }
        if (!doc.is_object()) throw Error(ErrorCode::InvalidArgument, "config must be a JSON object");
        for (const auto& [key, value] : doc.items()) {
            auto setter = setters_.find(key);
            if (setter == setters_.end()) {
                if (all_keys.count(key) > 0) continue;
                throw Error(ErrorCode::InvalidArgument, "config key '" + key + "' is not a flag of any command");
            }
            if (options_.at(key)->count() > 0) continue;
            try {
                setter->second(value);
            } catch (const json::exception& e) {
                throw Error(ErrorCode::InvalidArgument, "config key '" + key + "': " + e.what());
            }
            from_config_.insert(key);
        }
    }

    void collect_keys(std::set<std::string>& keys) const {
        for (const auto& entry : setters_) keys.insert(entry.first);
    }

    bool provided(const std::string& name) const {
        return options_.at(name)->count() > 0 || from_config_.count(name) > 0;
    }

    void require(std::initializer_list<const char*> names) const {
        for (const char* name : names) {
            if (!provided(name)) {
                throw Error(ErrorCode::InvalidArgument, std::string("--") + name + " is required");
            }
        }
    }

private:
    CLI::App* app_;
    std::map<std::string, CLI::Option*> options_;
    std::map<std::string, std::function<void(const json&)>> setters_;
    std::set<std::string> from_config_;
};

void add_profile_flags(Binder& b, Settings& s) {
    b.add("class", s.klass, "curvature class: neg, pos or zero");
    b.add("C", s.C, "curvature scale C (K = -C^2, C^2 or 0)");
    b.add("C1", s.C1, "profile constant C1");
    b.add("C2", s.C2, "profile constant C2");
    b.add("alpha", s.alpha, "SR2 rate of rotation alpha");
    b.add("beta", s.beta, "SR2 rate of rotation beta");
    b.add("phi0", s.phi0, "SR2 initial angle phi(u-min)");
    b.add("branch", s.branch, "root of the phi' quadratic: + or -");
    b.add("u-min", s.u_min, "start of the meridian parameter range");
    b.add("u-max", s.u_max, "end of the meridian parameter range");
    b.add("step", s.step, "SR2 sample spacing / RK4 step");
    b.add("config", s.config, "JSON file with flag values; flags override it");
}

void add_surface_flags(Binder& b, Settings& s) {
    add_profile_flags(b, s);
    b.add("family", s.family, "sr1, sr2, sr3 or sr4");
    b.add("eps", s.eps, "sign of E of the meridian (sr3/sr4): 1 or -1");
    b.add("method", s.method, "SR2 meridian solver: ode or quadrature");
    b.add("v-min", s.v_min, "start of the rotation parameter range");
    b.add("v-max", s.v_max, "end of the rotation parameter range");
    b.add("nu", s.nu, "grid points along u");
    b.add("nv", s.nv, "grid points along v");
}

CurvatureClass parse_class(const std::string& name) {
    if (name == "neg") return CurvatureClass::NegativeK;
    if (name == "pos") return CurvatureClass::PositiveK;
    if (name == "zero") return CurvatureClass::ZeroK;
    throw Error(ErrorCode::InvalidArgument, "--class must be neg, pos or zero");
}

Family parse_family(const std::string& name) {
    if (name == "sr1") return Family::SR1;
    if (name == "sr2") return Family::SR2;
    if (name == "sr3") return Family::SR3;
    if (name == "sr4") return Family::SR4;
    throw Error(ErrorCode::InvalidArgument, "--family must be sr1, sr2, sr3 or sr4");
}

int parse_branch(const std::string& sign) {
    if (sign == "+" || sign == "1" || sign == "+1") return 1;
    if (sign == "-" || sign == "-1") return -1;
    throw Error(ErrorCode::InvalidArgument, "--branch must be + or -");
}

ExportFormat parse_format(const std::string& name) {
    if (name == "csv") return ExportFormat::CSV4D;
    if (name == "obj") return ExportFormat::OBJ;
    if (name == "ply") return ExportFormat::PLY;
    throw Error(ErrorCode::InvalidArgument, "--format must be csv, obj or ply");
}

Projection parse_projection(const std::string& name) {
    if (name == "x1") return Projection::DropX1;
    if (name == "x2") return Projection::DropX2;
    if (name == "x3") return Projection::DropX3;
    if (name == "x4") return Projection::DropX4;
    if (name == "stereo") return Projection::Stereographic;
    throw Error(ErrorCode::InvalidArgument, "--projection must be x1, x2, x3, x4 or stereo");
}

ProfileSpec profile_from(const Settings& s) {
    ProfileSpec spec;
    spec.curvature_class = parse_class(s.klass);
    spec.C = s.C;
    spec.C1 = s.C1;
    spec.C2 = s.C2;
    spec.eps = s.eps;
    validate(spec);
    return spec;
}

MeridianSolution solve_from(const Settings& s, const ProfileSpec& spec) {
    const Interval range{s.u_min, s.u_max};
    if (s.method == "ode") {
        return integrate_phi(spec, s.alpha, s.beta, range, s.phi0, parse_branch(s.branch), s.step);
    }
    if (s.method == "quadrature") {
        if (s.alpha != s.beta) {
            throw Error(ErrorCode::InvalidArgument, "--method quadrature needs alpha = beta");
        }
        if (parse_branch(s.branch) < 0) {
            throw Error(ErrorCode::InvalidArgument, "--method quadrature yields the + branch only");
        }
        return quadrature_phi(spec, s.alpha, range, s.phi0, s.step);
    }
    throw Error(ErrorCode::InvalidArgument, "--method must be ode or quadrature");
}

struct BuiltSurface {
    SurfacePatch patch;
    double target_K;
};

BuiltSurface surface_from(const Binder& b, const Settings& s, std::ostream& err) {
    b.require({"family"});
    const Family family = parse_family(s.family);
    b.require({"class", "u-min", "u-max"});
    ProfileSpec spec = profile_from(s);
    if (family == Family::SR1 || family == Family::SR2) {
        if (b.provided("eps") && s.eps != 1) {
            throw Error(ErrorCode::InvalidArgument, "--eps applies to sr3/sr4 only");
        }
        spec.eps = 1;
    }
    Interval v_range = family == Family::SR3 ? Interval{-1.0, 1.0} : Interval{0.0, 2.0 * std::numbers::pi};
    if (b.provided("v-min")) v_range.lo = s.v_min;
    if (b.provided("v-max")) v_range.hi = s.v_max;

    if (family == Family::SR2) {
        return {build_sr2(solve_from(s, spec), v_range), target_curvature(spec)};
    }
    const MeridianRole role = family == Family::SR1   ? MeridianRole::SR1Meridian
                              : family == Family::SR3 ? MeridianRole::SR3Meridian
                                                      : MeridianRole::SR4Meridian;
    const Interval requested{s.u_min, s.u_max};
    const Interval domain = admissible_domain(spec, role, requested);
    if (domain.lo != requested.lo || domain.hi != requested.hi) {
        err << "note: u-range narrowed to admissible [" << domain.lo << ", " << domain.hi << "]\n";
    }
    return {build_surface(family, complete_meridian(spec, family, domain), v_range),
            target_curvature(spec)};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    file << content;
}

int generate(const Binder& b, const Settings& s, std::ostream& out, std::ostream& err) {
    b.require({"format", "out"});
    const BuiltSurface built = surface_from(b, s, err);
    const ExportFormat format = parse_format(s.format);
    std::optional<Projection> projection;
    if (b.provided("projection")) projection = parse_projection(s.projection);
    write_file(s.out, export_grid(built.patch, s.nu, s.nv, format, projection));
    out << "wrote " << s.nu << "x" << s.nv << " " << to_string(built.patch.family) << " grid to " << s.out << "\n";
    return 0;
}

int verify(const Binder& b, const Settings& s, std::ostream& out, std::ostream& err) {
    const BuiltSurface built = surface_from(b, s, err);
    const double target = b.provided("target-K") ? s.target_K : built.target_K;
    CurvatureOptions options;
    options.step = s.fd_step;
    options.prefer_analytic = !s.finite_difference;
    const CurvatureReport report = verify_constant_curvature(built.patch, target, s.nu, s.nv, s.tol, options);
    if (b.provided("report")) write_file(s.report, serialize_report(report) + "\n");
    out << (report.passed ? "PASS" : "FAIL") << " " << to_string(report.family) << " target_K=" << target
        << " max_abs_deviation=" << report.max_abs_deviation << " tol=" << s.tol
        << " samples=" << report.samples.size() << " degenerate=" << report.degenerate_points.size() << "\n";
    return report.passed ? 0 : 1;
}

int solve_meridian(const Binder& b, const Settings& s, std::ostream& out) {
    b.require({"class", "u-min", "u-max", "out"});
    ProfileSpec spec = profile_from(s);
    spec.eps = 1;
    const MeridianSolution sol = solve_from(s, spec);
    std::ostringstream csv;
    csv.precision(17);
    csv << "u,phi,f,g\n";
    for (std::size_t i = 0; i < sol.u_samples.size(); ++i) {
        csv << sol.u_samples[i] << ',' << sol.phi[i] << ',' << sol.f[i] << ',' << sol.g[i] << '\n';
    }
    write_file(s.out, csv.str());
    out << "wrote " << sol.u_samples.size() << " samples to " << s.out << "\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Constant Gaussian curvature rotational surfaces in R^4 and R^4_1", "rotsurf"};
    app.require_subcommand(1);

    Settings gen_s, ver_s, sol_s;
    CLI::App* gen = app.add_subcommand("generate", "export a constant-curvature surface grid");
    CLI::App* ver = app.add_subcommand("verify", "check that a generated surface has constant K");
    CLI::App* sol = app.add_subcommand("solve-meridian", "solve the SR2 meridian angle phi(u)");

    Binder gen_b(gen);
    add_surface_flags(gen_b, gen_s);
    gen_b.add("format", gen_s.format, "csv, obj or ply");
    gen_b.add("projection", gen_s.projection, "x1, x2, x3, x4 or stereo (obj/ply)");
    gen_b.add("out", gen_s.out, "output path");

    Binder ver_b(ver);
    add_surface_flags(ver_b, ver_s);
    ver_b.add("target-K", ver_s.target_K, "expected curvature (defaults to the class value)");
    ver_b.add("tol", ver_s.tol, "maximum allowed |K - target|");
    ver_b.add("report", ver_s.report, "JSON report path");
    ver_b.add("fd-step", ver_s.fd_step, "finite-difference step");
    ver_b.flag("finite-difference", ver_s.finite_difference, "ignore analytic tangents");

    Binder sol_b(sol);
    add_profile_flags(sol_b, sol_s);
    sol_b.add("method", sol_s.method, "ode or quadrature");
    sol_b.add("out", sol_s.out, "CSV output path (u,phi,f,g)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    std::set<std::string> all_keys;
    for (const Binder* b : {&gen_b, &ver_b, &sol_b}) b->collect_keys(all_keys);

    try {
        if (gen->parsed()) {
            if (!gen_s.config.empty()) gen_b.apply_config(gen_s.config, all_keys);
            return generate(gen_b, gen_s, out, err);
        }
        if (ver->parsed()) {
            if (!ver_s.config.empty()) ver_b.apply_config(ver_s.config, all_keys);
            return verify(ver_b, ver_s, out, err);
        }
        if (!sol_s.config.empty()) sol_b.apply_config(sol_s.config, all_keys);
        return solve_meridian(sol_b, sol_s, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace rotsurf
