#include "rotsurf/export.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "rotsurf/error.hpp"

namespace rotsurf {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct GridPoint {
    double u;
    double v;
    Vec4 x;
};

std::vector<GridPoint> sample(const SurfacePatch& patch, std::size_t nu, std::size_t nv) {
    std::vector<GridPoint> points;
    points.reserve(nu * nv);
    const Interval du = patch.domain_u;
    const Interval dv = patch.domain_v;
    for (std::size_t i = 0; i < nu; ++i) {
        const double u = i + 1 == nu ? du.hi : du.lo + du.length() * static_cast<double>(i) / (nu - 1);
        for (std::size_t j = 0; j < nv; ++j) {
            const double v = j + 1 == nv ? dv.hi : dv.lo + dv.length() * static_cast<double>(j) / (nv - 1);
            points.push_back({u, v, patch(u, v)});
        }
    }
    return points;
}

const char* projection_name(Projection p) {
    switch (p) {
        case Projection::DropX1: return "drop x1";
        case Projection::DropX2: return "drop x2";
        case Projection::DropX3: return "drop x3";
        case Projection::DropX4: return "drop x4";
        case Projection::Stereographic: return "stereographic";
    }
    return "";
}

}  // namespace

std::array<double, 3> stereographic(const Vec4& x, double pole) {
    const double scale = pole / (pole - x[3]);
    return {scale * x[0], scale * x[1], scale * x[2]};
}

std::array<double, 3> drop_coordinate(const Vec4& x, int index) {
    std::array<double, 3> out{};
    for (int k = 0, o = 0; k < 4; ++k) {
        if (k != index) out[o++] = x[k];
    }
    return out;
}

std::string export_grid(const SurfacePatch& patch, std::size_t nu, std::size_t nv, ExportFormat format,
                        std::optional<Projection> projection) {
    if (nu < 2 || nv < 2) {
        throw Error(ErrorCode::InvalidArgument, "export grid needs at least 2 points per direction");
    }
    const std::vector<GridPoint> points = sample(patch, nu, nv);
    std::string out;

    if (format == ExportFormat::CSV4D) {
        out += "u,v,x1,x2,x3,x4\n";
        for (const GridPoint& p : points) {
            out += num(p.u) + ',' + num(p.v);
            for (double c : p.x) out += ',' + num(c);
            out += '\n';
        }
        return out;
    }

    if (!projection) {
        throw Error(ErrorCode::InvalidArgument, "OBJ and PLY export need a projection");
    }
    std::string note = std::string("projection: ") + projection_name(*projection);
    double pole = 0.0;
    if (*projection == Projection::Stereographic) {
        double reach = 0.0;
        for (const GridPoint& p : points) reach = std::max(reach, std::abs(p.x[3]));
        pole = reach > 0.0 ? 1.1 * reach : 1.0;
        note += " from (0,0,0,R), R = " + num(pole);
    }
    std::vector<std::array<double, 3>> vertices;
    vertices.reserve(points.size());
    for (const GridPoint& p : points) {
        vertices.push_back(*projection == Projection::Stereographic
                               ? stereographic(p.x, pole)
                               : drop_coordinate(p.x, static_cast<int>(*projection)));
    }
    auto quad = [nv](std::size_t i, std::size_t j) {
        return std::array<std::size_t, 4>{i * nv + j, (i + 1) * nv + j, (i + 1) * nv + j + 1, i * nv + j + 1};
    };
    const std::size_t faces = (nu - 1) * (nv - 1);

    if (format == ExportFormat::OBJ) {
        out += "# " + std::string(to_string(patch.family)) + " grid " + std::to_string(nu) + "x" +
               std::to_string(nv) + ", " + note + "\n";
        for (const auto& v : vertices) out += "v " + num(v[0]) + ' ' + num(v[1]) + ' ' + num(v[2]) + '\n';
        for (std::size_t i = 0; i + 1 < nu; ++i) {
            for (std::size_t j = 0; j + 1 < nv; ++j) {
                out += 'f';
                for (std::size_t idx : quad(i, j)) out += ' ' + std::to_string(idx + 1);
                out += '\n';
            }
        }
        return out;
    }

    out += "ply\nformat ascii 1.0\n";
    out += "comment " + std::string(to_string(patch.family)) + " grid " + std::to_string(nu) + "x" +
           std::to_string(nv) + ", " + note + "\n";
    out += "element vertex " + std::to_string(vertices.size()) + "\n";
    out += "property double x\nproperty double y\nproperty double z\n";
    out += "element face " + std::to_string(faces) + "\n";
    out += "property list uchar int vertex_indices\nend_header\n";
    for (const auto& v : vertices) out += num(v[0]) + ' ' + num(v[1]) + ' ' + num(v[2]) + '\n';
    for (std::size_t i = 0; i + 1 < nu; ++i) {
        for (std::size_t j = 0; j + 1 < nv; ++j) {
            out += '4';
            for (std::size_t idx : quad(i, j)) out += ' ' + std::to_string(idx);
            out += '\n';
        }
    }
    return out;
}

}  // namespace rotsurf
