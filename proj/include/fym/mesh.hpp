#ifndef FYM_MESH_HPP
#define FYM_MESH_HPP

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fym {

/// Embedded 2-complex (triangulated sphere or periodic quad grid) with
/// diagonal Hodge weights, per-face orthonormal tangent frames, and
/// second-fundamental-form data when the mesh is a generated hypersurface.
///
/// Cochain conventions used throughout the gauge sector:
///   0-forms: pointwise value at a vertex,
///   1-forms: integral along the oriented edge (v0 -> v1),
///   2-forms: pointwise density in the face frame (component phi_12).
struct MeshComplex {
  struct Edge {
    int v0 = 0, v1 = 0;  // v0 < v1
    double length = 0.0;
    double star1 = 0.0;  // diagonal Hodge weight: (a,b)_1 = sum star1 <a_e, b_e>
    Eigen::Vector3d dir = Eigen::Vector3d::Zero();  // unit direction v0 -> v1
  };

  struct Face {
    int nv = 3;
    std::array<int, 4> v{};       // vertex loop, oriented with the outward normal
    std::array<int, 4> edge{};    // edge index per loop segment (v[s] -> v[s+1])
    std::array<double, 4> esign{};  // +1 if the loop traverses the edge v0 -> v1
    double area = 0.0;
    Eigen::Vector3d t1, t2, normal, centroid;  // orthonormal frame, t1 x t2 = normal
    // Least-squares reconstruction of a constant 1-form from the boundary
    // edge integrals: b_d = sum_s recon[d][s] * alpha_{edge[s]} (oriented v0->v1).
    std::array<std::array<double, 4>, 2> recon{};
    // Second fundamental form in the (t1,t2) frame; zero for flat meshes.
    double h11 = 0.0, h12 = 0.0, h22 = 0.0;
  };

  std::vector<Eigen::Vector3d> pos;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  std::vector<double> star0;  // vertex dual areas
  double total_area = 0.0;
  bool is_sphere = false;
  double radius = 0.0;

  int euler_characteristic() const {
    return (int)pos.size() - (int)edges.size() + (int)faces.size();
  }

  /// Rows A = 1..3 of the orthogonal matrix (E_A . t1, E_A . t2, E_A . normal);
  /// the first two columns are the tangential projections V_A in the face frame.
  Eigen::Matrix3d ambient_frame(int face) const;
};

/// Triangulated sphere of radius r from `level` 4-to-1 subdivisions of the
/// icosahedron, with exact sphere curvature data h_ij = (1/r) delta_ij.
MeshComplex build_icosphere(double r, int level);

/// Flat periodic quad grid with n1 x n2 cells on a torus of side lengths
/// L1 x L2; all curvature data zero.
MeshComplex build_torus_grid(int n1, int n2, double L1, double L2);

/// Parses "icosphere:<level>" or "torus:<n1>x<n2>".
MeshComplex build_mesh_from_spec(const std::string& spec, double radius = 1.0,
                                 double L1 = 1.0, double L2 = 1.0);

}  // namespace fym

#endif
