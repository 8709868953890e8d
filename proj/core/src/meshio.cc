#include "spatch/meshio.hh"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

#include "json.hpp"
#include "spatch/errors.hh"
#include "spatch/parallel.hh"

namespace spatch {

namespace {

using json = nlohmann::ordered_json;

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
}

void store_json(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IOError("cannot open '" + path.string() + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IOError("failed writing '" + path.string() + "'");
}

Point3 parse_point(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw ParseError(where + ": points must be arrays of 3 numbers");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json point_json(const Point3& p) { return json::array({p.x(), p.y(), p.z()}); }

std::vector<Point3> parse_row(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": row must be an array");
  std::vector<Point3> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(parse_point(e, where));
  return out;
}

}  // namespace

DomainTriangulation tessellate_domain(int n, int resolution) {
  if (resolution < 1)
    throw std::invalid_argument("tessellation resolution must be at least 1, got " +
                                std::to_string(resolution));
  DomainPolygon poly(n);
  const int rings = resolution;

  DomainTriangulation out;
  out.points.reserve(1 + n * rings * (rings + 1) / 2);
  out.points.emplace_back(0.0, 0.0);
  for (int r = 1; r <= rings; ++r) {
    double scale = static_cast<double>(r) / rings;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < r; ++k) {
        double t = static_cast<double>(k) / r;
        out.points.push_back(scale * ((1.0 - t) * poly.vertex(i) + t * poly.vertex(i + 1)));
      }
  }

  auto ring_index = [&](int r, int m) {
    if (r == 0) return 0;
    int count = n * r;
    return 1 + n * r * (r - 1) / 2 + ((m % count) + count) % count;
  };

  out.triangles.reserve(static_cast<std::size_t>(n) * rings * rings);
  for (int r = 1; r <= rings; ++r)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < r; ++k) {
        int p0 = ring_index(r, i * r + k);
        int p1 = ring_index(r, i * r + k + 1);
        int q0 = ring_index(r - 1, i * (r - 1) + k);
        out.triangles.push_back({q0, p0, p1});
        if (k + 1 <= r - 1) {
          int q1 = ring_index(r - 1, i * (r - 1) + k + 1);
          out.triangles.push_back({q0, p1, q1});
        }
      }
  return out;
}

SurfaceMesh mesh_patch(const SPatchNet& net, int resolution, CoordScheme scheme,
                       bool with_normals) {
  DomainTriangulation tess = tessellate_domain(net.n(), resolution);
  DomainPolygon poly(net.n());

  SurfaceMesh mesh;
  mesh.triangles = tess.triangles;
  int count = static_cast<int>(tess.points.size());
  mesh.vertices.resize(count);
  if (with_normals) mesh.normals.assign(count, Point3::Zero());

  std::atomic<int> degenerate{0};
  parallel_for(count, [&](int v) {
    const Point2& x = tess.points[v];
    mesh.vertices[v] = eval_at_domain_point(net, poly, x, scheme);
    if (!with_normals) return;
    Point2 probe = x;
    double dist = poly.min_edge_distance(probe);
    if (dist <= 1e-9) {
      // boundary vertex: central differences need room, sample just inside
      probe = x * (1.0 - 1e-4);
      dist = poly.min_edge_distance(probe);
    }
    double h = std::min(1e-5, dist / 4.0);
    try {
      mesh.normals[v] = sampled_normal(net, poly, probe, h, scheme);
    } catch (const NumericalError&) {
      mesh.normals[v] = Point3::Zero();
      ++degenerate;
    }
  });
  mesh.degenerate_normals = degenerate.load();
  return mesh;
}

Ribbon read_ribbon(const std::filesystem::path& path) {
  json j = load_json(path);
  int n = 0, d = 0;
  std::vector<std::vector<Point3>> outers, inners;
  try {
    n = j.at("n").get<int>();
    d = j.at("d").get<int>();
    const json& sides = j.at("sides");
    if (!sides.is_array())
      throw ParseError("'" + path.string() + "': \"sides\" must be an array");
    if (static_cast<int>(sides.size()) != n)
      throw ValidationError("'" + path.string() + "': expected " + std::to_string(n) +
                            " sides, found " + std::to_string(sides.size()));
    for (int i = 0; i < n; ++i) {
      std::string where = "'" + path.string() + "' side " + std::to_string(i);
      outers.push_back(parse_row(sides[i].at("outer"), where));
      inners.push_back(parse_row(sides[i].at("inner"), where));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
  if (n < 3 || d < 1)
    throw ValidationError("'" + path.string() + "': invalid header n = " + std::to_string(n) +
                          ", d = " + std::to_string(d));

  Ribbon r;
  r.sides.resize(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(outers[i].size()) != d + 1)
      throw ValidationError("'" + path.string() + "': side " + std::to_string(i) +
                            " outer row must hold " + std::to_string(d + 1) + " points, found " +
                            std::to_string(outers[i].size()));
    r.sides[i].outer = outers[i];
  }
  for (int i = 0; i < n; ++i) {
    const auto& inner = inners[i];
    if (static_cast<int>(inner.size()) == d + 1) {
      r.sides[i].inner = inner;
    } else if (static_cast<int>(inner.size()) == d - 1) {
      // endpoints shared through twist compatibility were omitted
      std::vector<Point3> full(d + 1);
      full[0] = outers[(i + n - 1) % n][d - 1];
      full[d] = outers[(i + 1) % n][1];
      for (int k = 1; k < d; ++k) full[k] = inner[k - 1];
      r.sides[i].inner = std::move(full);
    } else {
      throw ValidationError("'" + path.string() + "': side " + std::to_string(i) +
                            " inner row must hold " + std::to_string(d + 1) + " (or " +
                            std::to_string(d - 1) + ") points, found " +
                            std::to_string(inner.size()));
    }
  }
  return r;
}

void write_ribbon(const Ribbon& r, const std::filesystem::path& path) {
  json j;
  j["n"] = r.n();
  j["d"] = r.degree();
  json sides = json::array();
  for (const RibbonSide& s : r.sides) {
    json outer = json::array(), inner = json::array();
    for (const Point3& p : s.outer) outer.push_back(point_json(p));
    for (const Point3& p : s.inner) inner.push_back(point_json(p));
    sides.push_back(json{{"outer", std::move(outer)}, {"inner", std::move(inner)}});
  }
  j["sides"] = std::move(sides);
  store_json(j, path);
}

SPatchNet read_net(const std::filesystem::path& path) {
  json j = load_json(path);
  int n = 0, depth = 0;
  try {
    n = j.at("n").get<int>();
    depth = j.at("depth").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }

  LabelIndex index(n, depth);
  std::vector<Point3> points(index.size(), Point3::Zero());
  std::vector<char> seen(index.size(), 0);
  try {
    const json& entries = j.at("points");
    if (!entries.is_array())
      throw ParseError("'" + path.string() + "': \"points\" must be an array");
    for (const auto& e : entries) {
      Label lab = Label::parse(e.at("label").get<std::string>());
      int o = index.find(lab);
      if (o < 0)
        throw ValidationError("'" + path.string() + "': label " + lab.str() +
                              " does not belong to L_{" + std::to_string(n) + "," +
                              std::to_string(depth) + "}");
      if (seen[o])
        throw ValidationError("'" + path.string() + "': duplicate label " + lab.str());
      seen[o] = 1;
      points[o] = parse_point(e.at("p"), "'" + path.string() + "' label " + lab.str());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
  for (int o = 0; o < index.size(); ++o)
    if (!seen[o])
      throw ValidationError("'" + path.string() + "': missing label " + index.label(o).str());
  return SPatchNet(std::move(index), std::move(points));
}

void write_net(const SPatchNet& net, const std::filesystem::path& path) {
  json j;
  j["n"] = net.n();
  j["depth"] = net.depth();
  json entries = json::array();
  for (int o = 0; o < net.size(); ++o)
    entries.push_back(json{{"label", net.labels().label(o).str()}, {"p", point_json(net.point(o))}});
  j["points"] = std::move(entries);
  store_json(j, path);
}

void write_obj(const SurfaceMesh& mesh, const std::filesystem::path& path) {
  std::unique_ptr<std::FILE, int (*)(std::FILE*)> file(std::fopen(path.string().c_str(), "wb"),
                                                       &std::fclose);
  if (!file) throw IOError("cannot open '" + path.string() + "' for writing");
  std::FILE* f = file.get();

  bool with_normals = !mesh.normals.empty();
  for (const Point3& v : mesh.vertices)
    std::fprintf(f, "v %.17g %.17g %.17g\n", v.x(), v.y(), v.z());
  if (with_normals)
    for (const Point3& vn : mesh.normals)
      std::fprintf(f, "vn %.17g %.17g %.17g\n", vn.x(), vn.y(), vn.z());
  for (const auto& t : mesh.triangles) {
    if (with_normals)
      std::fprintf(f, "f %d//%d %d//%d %d//%d\n", t[0] + 1, t[0] + 1, t[1] + 1, t[1] + 1,
                   t[2] + 1, t[2] + 1);
    else
      std::fprintf(f, "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
  }
  if (std::ferror(f)) throw IOError("failed writing '" + path.string() + "'");
}

}  // namespace spatch
