#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "rotsurf/semi_metric.hpp"

namespace rotsurf {

enum class ExportFormat { CSV4D, OBJ, PLY };

enum class Projection { DropX1, DropX2, DropX3, DropX4, Stereographic };

/// Stereographic projection from (0, 0, 0, R) onto x4 = 0:
/// (x1, x2, x3) * R / (R - x4).
std::array<double, 3> stereographic(const Vec4& x, double pole);
std::array<double, 3> drop_coordinate(const Vec4& x, int index);

/// Samples the patch on a uniform nu x nv grid covering its full domain
/// (row-major in u then v).
///   CSV4D: header "u,v,x1,x2,x3,x4", 17 significant digits.
///   OBJ/PLY: projected vertices plus (nu-1)(nv-1) quads; need a projection.
std::string export_grid(const SurfacePatch& patch, std::size_t nu, std::size_t nv, ExportFormat format,
                        std::optional<Projection> projection = std::nullopt);

}  // namespace rotsurf
