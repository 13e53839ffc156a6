#include "fym/hypersurface.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace fym {

double ImmersionData::mean_curvature(int mu_off) const {
  double s = 0.0;
  for (int m = 0; m < n; ++m) s += hval(mu_off, m, m);
  return s;
}

void ImmersionData::validate(double tol) const {
  if (n < 2 || N <= n) throw std::invalid_argument("immersion needs 2 <= n < N");
  if (h.size() != (size_t)(N - n) * n * n)
    throw std::invalid_argument("second fundamental form table size mismatch");
  for (int mu = 0; mu < N - n; ++mu)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (std::abs(hval(mu, i, j) - hval(mu, j, i)) > tol)
          throw std::invalid_argument("second fundamental form is not symmetric");
}

ImmersionData ImmersionData::hypersurface(const std::vector<double>& lambdas) {
  ImmersionData imm;
  imm.n = (int)lambdas.size();
  imm.N = imm.n + 1;
  imm.h.assign((size_t)imm.n * imm.n, 0.0);
  for (int i = 0; i < imm.n; ++i) imm.at(0, i, i) = lambdas[i];
  imm.validate();
  return imm;
}

ImmersionData ImmersionData::sphere(int n, double r) {
  return hypersurface(std::vector<double>(n, 1.0 / r));
}

ImmersionData load_immersion(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open immersion file: " + path);
  nlohmann::json j;
  in >> j;
  if (j.contains("lambdas"))
    return ImmersionData::hypersurface(j.at("lambdas").get<std::vector<double>>());
  ImmersionData imm;
  imm.n = j.at("n").get<int>();
  imm.N = j.at("N").get<int>();
  for (const auto& plane : j.at("h"))
    for (const auto& row : plane)
      for (const auto& v : row) imm.h.push_back(v.get<double>());
  imm.validate();
  return imm;
}

CurvatureTensorData gauss_curvature(const ImmersionData& imm) {
  imm.validate();
  const int n = imm.n, nnorm = imm.N - imm.n;
  CurvatureTensorData C;
  C.n = n;
  C.riemann.assign((size_t)n * n * n * n, 0.0);
  C.ricci.assign((size_t)n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int mu = 0; mu < nnorm; ++mu)
            s += imm.hval(mu, i, k) * imm.hval(mu, j, l) - imm.hval(mu, j, k) * imm.hval(mu, i, l);
          C.riemann[((i * n + j) * n + k) * n + l] = s;
        }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int mu = 0; mu < nnorm; ++mu) {
        double tr = imm.mean_curvature(mu) * imm.hval(mu, i, k);
        for (int m = 0; m < n; ++m) tr -= imm.hval(mu, i, m) * imm.hval(mu, m, k);
        s += tr;
      }
      C.ricci[i * n + k] = s;
    }
  return C;
}

ScalarInvariants scalar_invariants(const ImmersionData& imm, const PointForm& phi,
                                   const LieAlgebraSpec& alg, const Degree& degree,
                                   bool want_B) {
  imm.validate();
  if (want_B && degree.infinite)
    throw std::invalid_argument("B requires a finite degree");
  if (phi.degree != 2 || phi.n != imm.n)
    throw std::invalid_argument("scalar_invariants needs a degree-2 form over the tangent frame");
  const int n = imm.n, nnorm = imm.N - imm.n;
  const CurvatureTensorData C = gauss_curvature(imm);

  // Full-index component table, antisymmetry spelled out once.
  std::vector<AlgElement> pv((size_t)n * n, AlgElement(alg.dim, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pv[i * n + j] = phi.get(i, j);
  // Pairwise inner products <phi_ij, phi_kl>.
  std::vector<double> ip((size_t)n * n * n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          ip[((i * n + j) * n + k) * n + l] = inner(pv[i * n + j], pv[k * n + l], alg);
  auto P = [&](int i, int j, int k, int l) { return ip[((i * n + j) * n + k) * n + l]; };

  ScalarInvariants out;
  out.h1.assign(nnorm, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double pijkj = P(i, j, k, j);  // delta_jl collapses l = j
        out.Ric_phi += C.Ric(i, k) * pijkj;
        for (int mu = 0; mu < nnorm; ++mu) out.h1[mu] += imm.hval(mu, i, k) * pijkj;
        for (int l = 0; l < n; ++l) {
          out.R_phi += C.R(i, j, k, l) * P(i, j, k, l);
          for (int mu = 0; mu < nnorm; ++mu)
            out.h2 += imm.hval(mu, i, k) * imm.hval(mu, l, j) * P(i, j, k, l);
        }
        for (int m = 0; m < n; ++m)
          for (int mu = 0; mu < nnorm; ++mu)
            out.h2p += imm.hval(mu, m, k) * imm.hval(mu, m, i) * pijkj;
      }
  for (int mu = 0; mu < nnorm; ++mu) {
    out.H_phi += imm.mean_curvature(mu) * out.h1[mu];
    out.h1_norm2 += out.h1[mu] * out.h1[mu];
  }

  if (want_B) {
    const double norm2 = inner_forms(phi, phi, alg);
    const double d = degree.value;
    out.B = d * out.h1_norm2 + 0.5 * norm2 * (out.H_phi - 2.0 * out.Ric_phi + out.R_phi);
    const double B_alt =
        d * out.h1_norm2 + 0.5 * norm2 * (-out.H_phi + 2.0 * (out.h2 + out.h2p));
    const double scale = std::max({std::abs(out.B), std::abs(B_alt), 1.0});
    if (std::abs(out.B - B_alt) > 1e-10 * scale)
      throw std::logic_error("the two algebraic forms of B disagree");
    out.has_B = true;
  }
  return out;
}

double B_sphere_reduction(int n, double lambda, double d) {
  if (n < 2) throw std::invalid_argument("B_sphere_reduction needs n >= 2");
  return d * lambda * lambda + (lambda * lambda / 4.0) * (4.0 - n);
}

}  // namespace fym
