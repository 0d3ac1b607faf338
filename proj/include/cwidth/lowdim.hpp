#pragma once

#include <Eigen/Dense>

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace cwidth {

/// Source arc of a 2D boundary segment. The planar body is bounded by four
/// circle arcs, one per quadrant.
enum class ArcTag {
  outer_sqrt2,      // quadrant (+,+): |v| = sqrt2
  mixed_center_e1,  // quadrant (-,+): radius 2 centered at sqrt2 * e1
  inner,            // quadrant (-,-): |v| = 2 - sqrt2
  mixed_center_e2,  // quadrant (+,-): radius 2 centered at sqrt2 * e2
};

const char* arc_tag_name(ArcTag tag);

/// Closed positively oriented loop; segment i runs vertices[i] ->
/// vertices[(i+1) % size] and carries arc_tags[i].
struct BoundaryPolyline2D {
  std::vector<Eigen::Vector2d> vertices;
  std::vector<ArcTag> arc_tags;
};

/// Four-arc boundary with points_per_arc vertices per arc; the arc corners
/// are placed analytically, not sampled.
BoundaryPolyline2D boundary_polyline_2d(int points_per_arc);

double polyline_length(const BoundaryPolyline2D& poly);

/// Triangle mesh of the n=3 boundary from an octahedral sphere subdivision
/// scaled by the radial function. Level 1 is the octahedron itself.
struct TriangleMesh3D {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> faces;
};

TriangleMesh3D mesh_3d(int subdivision_level);

/// Divergence-theorem volume of a closed, outward-oriented mesh.
double mesh_signed_volume(const TriangleMesh3D& mesh);

/// Wavefront OBJ text (v/f records, LF endings). With colorize_by_octant the
/// faces are grouped into 8 materials keyed by the centroid sign pattern.
void export_obj(const TriangleMesh3D& mesh, std::ostream& out, bool colorize_by_octant);

/// Closed outline of the disk segment A for plotting: both axis edges plus
/// the arc, arc sampled with the given point count.
std::vector<Eigen::Vector2d> region_a_outline(int arc_points);

/// Closed outline of the triangle T_{alpha,beta}.
std::vector<Eigen::Vector2d> triangle_outline(double alpha, double beta);

}  // namespace cwidth
