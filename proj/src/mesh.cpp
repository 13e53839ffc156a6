#include "fym/mesh.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace fym {

namespace {

// 2 x nv least-squares reconstruction coefficients for a constant 1-form
// from boundary edge integrals: minimize sum_s (alpha_s - len_s * b.dir_s)^2
// with dir_s the unit edge direction expressed in the face frame.
void fill_recon(MeshComplex::Face& f, const std::vector<MeshComplex::Edge>& edges) {
  Eigen::Matrix2d G = Eigen::Matrix2d::Zero();
  Eigen::Matrix<double, 2, 4> Bt = Eigen::Matrix<double, 2, 4>::Zero();
  for (int s = 0; s < f.nv; ++s) {
    const int e = f.edge[s];
    const Eigen::Vector3d& d = edges[e].dir;
    const Eigen::Vector2d row(edges[e].length * d.dot(f.t1), edges[e].length * d.dot(f.t2));
    G += row * row.transpose();
    Bt.col(s) = row;
  }
  const Eigen::Matrix<double, 2, 4> R = G.inverse() * Bt;
  for (int d = 0; d < 2; ++d)
    for (int s = 0; s < 4; ++s) f.recon[d][s] = (s < f.nv) ? R(d, s) : 0.0;
}

}  // namespace

Eigen::Matrix3d MeshComplex::ambient_frame(int face) const {
  const Face& f = faces[face];
  Eigen::Matrix3d m;
  for (int A = 0; A < 3; ++A) {
    m(A, 0) = f.t1[A];
    m(A, 1) = f.t2[A];
    m(A, 2) = f.normal[A];
  }
  return m;
}

MeshComplex build_icosphere(double r, int level) {
  if (level < 0) throw std::invalid_argument("subdivision level must be >= 0");
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");

  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Eigen::Vector3d> pos = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
      {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (auto& p : pos) p = p.normalized() * r;
  std::vector<std::array<int, 3>> tris = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  for (int l = 0; l < level; ++l) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      pos.push_back(((pos[a] + pos[b]) * 0.5).normalized() * r);
      const int idx = (int)pos.size() - 1;
      mid.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(tris.size() * 4);
    for (const auto& f : tris) {
      const int a = midpoint(f[0], f[1]);
      const int b = midpoint(f[1], f[2]);
      const int c = midpoint(f[2], f[0]);
      next.push_back({f[0], a, c});
      next.push_back({f[1], b, a});
      next.push_back({f[2], c, b});
      next.push_back({a, b, c});
    }
    tris = std::move(next);
  }

  MeshComplex m;
  m.pos = pos;
  m.is_sphere = true;
  m.radius = r;

  // Outward orientation for every face.
  for (auto& f : tris) {
    const Eigen::Vector3d c = (pos[f[0]] + pos[f[1]] + pos[f[2]]) / 3.0;
    const Eigen::Vector3d nrm = (pos[f[1]] - pos[f[0]]).cross(pos[f[2]] - pos[f[0]]);
    if (nrm.dot(c) < 0.0) std::swap(f[1], f[2]);
  }

  std::map<std::pair<int, int>, int> edge_of;
  for (const auto& tv : tris) {
    MeshComplex::Face f;
    f.nv = 3;
    for (int s = 0; s < 3; ++s) f.v[s] = tv[s];
    for (int s = 0; s < 3; ++s) {
      const int a = tv[s], b = tv[(s + 1) % 3];
      const auto key = std::minmax(a, b);
      auto it = edge_of.find(key);
      int e;
      if (it == edge_of.end()) {
        MeshComplex::Edge ed;
        ed.v0 = a;
        ed.v1 = b;
        ed.length = (pos[b] - pos[a]).norm();
        ed.dir = (pos[b] - pos[a]) / ed.length;
        m.edges.push_back(ed);
        e = (int)m.edges.size() - 1;
        edge_of.emplace(key, e);
      } else {
        e = it->second;
      }
      f.edge[s] = e;
      f.esign[s] = (m.edges[e].v0 == a) ? 1.0 : -1.0;
    }
    const Eigen::Vector3d p0 = pos[tv[0]], p1 = pos[tv[1]], p2 = pos[tv[2]];
    f.centroid = (p0 + p1 + p2) / 3.0;
    const Eigen::Vector3d nrm = (p1 - p0).cross(p2 - p0);
    f.area = 0.5 * nrm.norm();
    f.normal = nrm.normalized();
    f.t1 = (p1 - p0).normalized();
    f.t2 = f.normal.cross(f.t1);
    f.h11 = f.h22 = 1.0 / r;
    f.h12 = 0.0;
    m.faces.push_back(f);
  }
  for (auto& f : m.faces) fill_recon(f, m.edges);

  // Cotangent Hodge weight on primal edges, barycentric dual areas.
  for (const auto& f : m.faces) {
    for (int s = 0; s < 3; ++s) {
      const int opp = f.v[(s + 2) % 3];
      const int a = f.v[s], b = f.v[(s + 1) % 3];
      const Eigen::Vector3d u = pos[a] - pos[opp];
      const Eigen::Vector3d v = pos[b] - pos[opp];
      const double cot = u.dot(v) / u.cross(v).norm();
      m.edges[f.edge[s]].star1 += 0.5 * cot;
    }
  }
  m.star0.assign(pos.size(), 0.0);
  for (const auto& f : m.faces) {
    m.total_area += f.area;
    for (int s = 0; s < 3; ++s) m.star0[f.v[s]] += f.area / 3.0;
  }
  for (const auto& e : m.edges)
    if (!(e.star1 > 0.0)) throw std::logic_error("nonpositive Hodge weight on an edge");
  return m;
}

MeshComplex build_torus_grid(int n1, int n2, double L1, double L2) {
  if (n1 < 3 || n2 < 3) throw std::invalid_argument("torus grid needs n1, n2 >= 3");
  if (!(L1 > 0.0 && L2 > 0.0)) throw std::invalid_argument("side lengths must be positive");
  const double d1 = L1 / n1, d2 = L2 / n2;

  MeshComplex m;
  auto vid = [&](int i, int j) { return ((i % n1 + n1) % n1) * n2 + ((j % n2 + n2) % n2); };
  m.pos.resize((size_t)n1 * n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) m.pos[vid(i, j)] = Eigen::Vector3d(i * d1, j * d2, 0.0);

  // Edge ids: horizontal edges first (from (i,j) toward +x), then vertical.
  auto hid = [&](int i, int j) { return ((i % n1 + n1) % n1) * n2 + ((j % n2 + n2) % n2); };
  auto vvid = [&](int i, int j) { return n1 * n2 + hid(i, j); };
  m.edges.resize((size_t)2 * n1 * n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      auto& eh = m.edges[hid(i, j)];
      eh.v0 = vid(i, j);
      eh.v1 = vid(i + 1, j);
      eh.length = d1;
      eh.star1 = d2 / d1;
      eh.dir = Eigen::Vector3d::UnitX();
      auto& ev = m.edges[vvid(i, j)];
      ev.v0 = vid(i, j);
      ev.v1 = vid(i, j + 1);
      ev.length = d2;
      ev.star1 = d1 / d2;
      ev.dir = Eigen::Vector3d::UnitY();
    }

  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      MeshComplex::Face f;
      f.nv = 4;
      f.v = {vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)};
      f.edge = {hid(i, j), vvid(i + 1, j), hid(i, j + 1), vvid(i, j)};
      f.esign = {1.0, 1.0, -1.0, -1.0};
      f.area = d1 * d2;
      f.t1 = Eigen::Vector3d::UnitX();
      f.t2 = Eigen::Vector3d::UnitY();
      f.normal = Eigen::Vector3d::UnitZ();
      f.centroid = Eigen::Vector3d((i + 0.5) * d1, (j + 0.5) * d2, 0.0);
      fill_recon(f, m.edges);
      m.faces.push_back(f);
    }

  m.star0.assign(m.pos.size(), d1 * d2);
  m.total_area = L1 * L2;
  return m;
}

MeshComplex build_mesh_from_spec(const std::string& spec, double radius, double L1, double L2) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("mesh spec must be kind:params");
  const std::string kind = spec.substr(0, colon);
  const std::string params = spec.substr(colon + 1);
  if (kind == "icosphere") return build_icosphere(radius, std::stoi(params));
  if (kind == "torus") {
    const auto x = params.find('x');
    if (x == std::string::npos) throw std::invalid_argument("torus spec must be torus:N1xN2");
    return build_torus_grid(std::stoi(params.substr(0, x)), std::stoi(params.substr(x + 1)),
                            L1, L2);
  }
  throw std::invalid_argument("unknown mesh kind: " + kind);
}

}  // namespace fym
