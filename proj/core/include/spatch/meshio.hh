#pragma once

#include <array>
#include <filesystem>
#include <vector>

#include "spatch/bezier.hh"
#include "spatch/domain.hh"
#include "spatch/spatch.hh"

namespace spatch {

struct DomainTriangulation {
  std::vector<Point2> points;
  std::vector<std::array<int, 3>> triangles;  // counter-clockwise
};

/// Concentric-ring sampling of the n-gon: ring r in 0..R holds n*r vertices
/// of the polygon scaled by r/R (one vertex at r = 0). 1 + n*R*(R+1)/2
/// vertices, n*R^2 triangles.
DomainTriangulation tessellate_domain(int n, int resolution);

struct SurfaceMesh {
  std::vector<Point3> vertices;
  std::vector<Point3> normals;  // empty, or unit per vertex (zero if degenerate)
  std::vector<std::array<int, 3>> triangles;
  int degenerate_normals = 0;
};

/// Evaluates the net over the tessellation. Boundary vertices get their
/// normal from a point offset inward by 1e-4 of the domain scale.
SurfaceMesh mesh_patch(const SPatchNet&, int resolution,
                       CoordScheme scheme = CoordScheme::Wachspress, bool with_normals = true);

// File formats (UTF-8 JSON, numbers at full precision):
//   ribbon: {"n":5,"d":5,"sides":[{"outer":[[x,y,z],...],"inner":[...]},...]}
//   net:    {"n":5,"depth":8,"points":[{"label":"0,0,8,0,0","p":[x,y,z]},...]}
// Net points appear in canonical label order. Ribbon inner rows may omit the
// two endpoints shared through twist compatibility; the reader reconstructs
// them from the neighboring outer rows.

Ribbon read_ribbon(const std::filesystem::path&);
void write_ribbon(const Ribbon&, const std::filesystem::path&);

SPatchNet read_net(const std::filesystem::path&);
void write_net(const SPatchNet&, const std::filesystem::path&);

/// Wavefront OBJ with 17 significant digits; vn and v//vn faces when
/// normals are present.
void write_obj(const SurfaceMesh&, const std::filesystem::path&);

}  // namespace spatch
