#include "cwidth/lowdim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "cwidth/body.hpp"

namespace cwidth {

namespace {

using std::numbers::pi;
using std::numbers::sqrt2;

struct ArcDef {
  Eigen::Vector2d center;
  double radius;
  double phi_begin;
  double phi_end;
  Eigen::Vector2d start;  // analytic corner shared with the previous arc's end
  ArcTag tag;
};

// Counterclockwise starting at (sqrt2, 0). The mixed-quadrant arcs are the
// radius-2 membership circles |v - sqrt2*e_i| = 2 rewritten from
// a^2 + (b + sqrt2)^2 = 4 with (a, b) = (|v_plus|, |v_minus|).
const std::array<ArcDef, 4>& boundary_arcs() {
  static const std::array<ArcDef, 4> arcs = {{
      {{0.0, 0.0}, sqrt2, 0.0, pi / 2, {sqrt2, 0.0}, ArcTag::outer_sqrt2},
      {{sqrt2, 0.0}, 2.0, 3 * pi / 4, pi, {0.0, sqrt2}, ArcTag::mixed_center_e1},
      {{0.0, 0.0}, 2.0 - sqrt2, pi, 3 * pi / 2, {sqrt2 - 2.0, 0.0}, ArcTag::inner},
      {{0.0, sqrt2}, 2.0, -pi / 2, -pi / 4, {0.0, sqrt2 - 2.0}, ArcTag::mixed_center_e2},
  }};
  return arcs;
}

}  // namespace

const char* arc_tag_name(ArcTag tag) {
  switch (tag) {
    case ArcTag::outer_sqrt2: return "outer_sqrt2";
    case ArcTag::mixed_center_e1: return "mixed_center_e1";
    case ArcTag::inner: return "inner";
    case ArcTag::mixed_center_e2: return "mixed_center_e2";
  }
  return "unknown";
}

BoundaryPolyline2D boundary_polyline_2d(int points_per_arc) {
  if (points_per_arc < 2) {
    throw std::invalid_argument("boundary_polyline_2d: points_per_arc must be >= 2");
  }
  BoundaryPolyline2D poly;
  poly.vertices.reserve(4 * static_cast<std::size_t>(points_per_arc));
  poly.arc_tags.reserve(poly.vertices.capacity());
  for (const ArcDef& arc : boundary_arcs()) {
    // First vertex of each arc is the exact corner; the closing corner is the
    // next arc's start.
    poly.vertices.push_back(arc.start);
    poly.arc_tags.push_back(arc.tag);
    for (int i = 1; i < points_per_arc; ++i) {
      const double phi =
          arc.phi_begin + (arc.phi_end - arc.phi_begin) * i / points_per_arc;
      poly.vertices.emplace_back(arc.center.x() + arc.radius * std::cos(phi),
                                 arc.center.y() + arc.radius * std::sin(phi));
      poly.arc_tags.push_back(arc.tag);
    }
  }
  return poly;
}

double polyline_length(const BoundaryPolyline2D& poly) {
  double len = 0.0;
  const std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    len += (poly.vertices[(i + 1) % n] - poly.vertices[i]).norm();
  }
  return len;
}

TriangleMesh3D mesh_3d(int subdivision_level) {
  if (subdivision_level < 1) {
    throw std::invalid_argument("mesh_3d: subdivision_level must be >= 1");
  }
  TriangleMesh3D mesh;
  mesh.vertices = {Eigen::Vector3d(1, 0, 0),  Eigen::Vector3d(-1, 0, 0),
                   Eigen::Vector3d(0, 1, 0),  Eigen::Vector3d(0, -1, 0),
                   Eigen::Vector3d(0, 0, 1),  Eigen::Vector3d(0, 0, -1)};
  // One face per octant, oriented outward.
  for (int sx : {0, 1}) {
    for (int sy : {2, 3}) {
      for (int sz : {4, 5}) {
        std::array<int, 3> f = {sx, sy, sz};
        const Eigen::Vector3d& a = mesh.vertices[f[0]];
        const Eigen::Vector3d& b = mesh.vertices[f[1]];
        const Eigen::Vector3d& c = mesh.vertices[f[2]];
        if ((b - a).cross(c - a).dot(a + b + c) < 0.0) std::swap(f[1], f[2]);
        mesh.faces.push_back(f);
      }
    }
  }

  // Subdivide on the unit sphere; midpoints shared through an edge cache so
  // the mesh stays watertight.
  for (int level = 1; level < subdivision_level; ++level) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid_index = [&](int i, int j) {
      const std::pair<int, int> key = std::minmax(i, j);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const Eigen::Vector3d m = (mesh.vertices[i] + mesh.vertices[j]).normalized();
      mesh.vertices.push_back(m);
      const int idx = static_cast<int>(mesh.vertices.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(mesh.faces.size() * 4);
    for (const auto& f : mesh.faces) {
      const int ab = mid_index(f[0], f[1]);
      const int bc = mid_index(f[1], f[2]);
      const int ca = mid_index(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    mesh.faces = std::move(next);
  }

  const BodySpec spec(3);
  for (Eigen::Vector3d& v : mesh.vertices) {
    v *= radial_extent(spec, v);
  }
  return mesh;
}

double mesh_signed_volume(const TriangleMesh3D& mesh) {
  double six_v = 0.0;
  for (const auto& f : mesh.faces) {
    six_v += mesh.vertices[f[0]].cross(mesh.vertices[f[1]]).dot(mesh.vertices[f[2]]);
  }
  return six_v / 6.0;
}

void export_obj(const TriangleMesh3D& mesh, std::ostream& out, bool colorize_by_octant) {
  char buf[128];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", v.x(), v.y(), v.z());
    out << buf;
  }
  if (!colorize_by_octant) {
    for (const auto& f : mesh.faces) {
      out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
    }
  } else {
    // Bucket faces by the sign pattern of the centroid, zero counting as +.
    std::array<std::vector<const std::array<int, 3>*>, 8> octants;
    for (const auto& f : mesh.faces) {
      const Eigen::Vector3d c =
          mesh.vertices[f[0]] + mesh.vertices[f[1]] + mesh.vertices[f[2]];
      const int key = (c.x() < 0.0 ? 4 : 0) | (c.y() < 0.0 ? 2 : 0) | (c.z() < 0.0 ? 1 : 0);
      octants[key].push_back(&f);
    }
    for (int key = 0; key < 8; ++key) {
      std::string name = "octant_";
      name += (key & 4) ? 'm' : 'p';
      name += (key & 2) ? 'm' : 'p';
      name += (key & 1) ? 'm' : 'p';
      out << "g " << name << '\n' << "usemtl " << name << '\n';
      for (const auto* f : octants[key]) {
        out << "f " << (*f)[0] + 1 << ' ' << (*f)[1] + 1 << ' ' << (*f)[2] + 1 << '\n';
      }
    }
  }
  if (!out) {
    throw std::runtime_error("export_obj: stream write failed");
  }
}

std::vector<Eigen::Vector2d> region_a_outline(int arc_points) {
  if (arc_points < 2) throw std::invalid_argument("region_a_outline: need >= 2 arc points");
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(static_cast<std::size_t>(arc_points) + 3);
  pts.emplace_back(0.0, 0.0);
  // Arc of a^2 + (b + sqrt2)^2 = 4 from (sqrt2, 0) to (0, 2 - sqrt2).
  for (int i = 0; i < arc_points; ++i) {
    const double phi = pi / 4 + (pi / 4) * i / (arc_points - 1);
    pts.emplace_back(2.0 * std::cos(phi), 2.0 * std::sin(phi) - sqrt2);
  }
  pts.emplace_back(0.0, 0.0);
  return pts;
}

std::vector<Eigen::Vector2d> triangle_outline(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::invalid_argument("triangle_outline: alpha and beta must be positive");
  }
  return {{0.0, 0.0}, {alpha, 0.0}, {0.0, beta}, {0.0, 0.0}};
}

}  // namespace cwidth
