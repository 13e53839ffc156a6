#include "fym/identities.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace fym {

namespace oracle {

namespace {

// Raw coefficient arithmetic from the tables, independent of the library's
// element helpers.
double raw_inner(const AlgElement& a, const AlgElement& b, const LieAlgebraSpec& alg) {
  double s = 0.0;
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j) s += a[i] * alg.g(i, j) * b[j];
  return s;
}

AlgElement raw_bracket(const AlgElement& a, const AlgElement& b, const LieAlgebraSpec& alg) {
  AlgElement out(alg.dim, 0.0);
  for (int k = 0; k < alg.dim; ++k)
    for (int i = 0; i < alg.dim; ++i)
      for (int j = 0; j < alg.dim; ++j) out[k] += alg.c(k, i, j) * a[i] * b[j];
  return out;
}

// Signed full-index component of a stored 2-form.
AlgElement comp2(const PointForm& phi, int i, int j, const LieAlgebraSpec& alg) {
  if (i == j) return AlgElement(alg.dim, 0.0);
  AlgElement v = phi.get(std::min(i, j), std::max(i, j));
  if (i > j)
    for (double& x : v) x = -x;
  return v;
}

}  // namespace

double inner_forms(const PointForm& phi, const PointForm& psi, const LieAlgebraSpec& alg) {
  double s = 0.0;
  if (phi.degree == 0) return raw_inner(phi.comp[0], psi.comp[0], alg);
  if (phi.degree == 1) {
    for (int i = 0; i < phi.n; ++i) s += raw_inner(phi.get(i), psi.get(i), alg);
    return s;
  }
  for (int i = 0; i < phi.n; ++i)
    for (int j = 0; j < phi.n; ++j)
      s += raw_inner(comp2(phi, i, j, alg), comp2(psi, i, j, alg), alg);
  return 0.5 * s;
}

double weitz1_quadratic(const PointForm& alpha, const PointForm& R, const LieAlgebraSpec& alg) {
  double s = 0.0;
  for (int i = 0; i < alpha.n; ++i)
    for (int j = 0; j < alpha.n; ++j)
      s += raw_inner(raw_bracket(comp2(R, j, i, alg), alpha.get(j), alg), alpha.get(i), alg);
  return s;
}

double bracket_wedge_vs_R(const PointForm& alpha, const PointForm& R, const LieAlgebraSpec& alg) {
  double s = 0.0;
  for (int i = 0; i < alpha.n; ++i)
    for (int j = 0; j < alpha.n; ++j) {
      AlgElement w = raw_bracket(alpha.get(i), alpha.get(j), alg);
      const AlgElement w2 = raw_bracket(alpha.get(j), alpha.get(i), alg);
      for (int a = 0; a < alg.dim; ++a) w[a] -= w2[a];
      s += raw_inner(w, comp2(R, i, j, alg), alg);
    }
  return 0.5 * s;
}

double weitz2_quadratic(const PointForm& phi, const PointForm& R, const LieAlgebraSpec& alg) {
  double s = 0.0;
  for (int x = 0; x < phi.n; ++x)
    for (int y = 0; y < phi.n; ++y) {
      AlgElement out(alg.dim, 0.0);
      for (int j = 0; j < phi.n; ++j) {
        const AlgElement t1 = raw_bracket(comp2(R, j, x, alg), comp2(phi, j, y, alg), alg);
        const AlgElement t2 = raw_bracket(comp2(R, j, y, alg), comp2(phi, j, x, alg), alg);
        for (int a = 0; a < alg.dim; ++a) out[a] += t1[a] - t2[a];
      }
      s += raw_inner(out, comp2(phi, x, y, alg), alg);
    }
  return 0.5 * s;
}

double R_phi(const ImmersionData& imm, const PointForm& phi, const LieAlgebraSpec& alg) {
  const int n = imm.n, nnorm = imm.N - imm.n;
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double r = 0.0;
          for (int mu = 0; mu < nnorm; ++mu)
            r += imm.hval(mu, i, k) * imm.hval(mu, j, l) - imm.hval(mu, j, k) * imm.hval(mu, i, l);
          s += r * raw_inner(comp2(phi, i, j, alg), comp2(phi, k, l, alg), alg);
        }
  return s;
}

double Ric_phi(const ImmersionData& imm, const PointForm& phi, const LieAlgebraSpec& alg) {
  const int n = imm.n, nnorm = imm.N - imm.n;
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double ric = 0.0;
      for (int mu = 0; mu < nnorm; ++mu) {
        double tr = 0.0;
        for (int m = 0; m < n; ++m)
          tr += imm.hval(mu, m, m) * imm.hval(mu, i, k) - imm.hval(mu, i, m) * imm.hval(mu, m, k);
        ric += tr;
      }
      for (int j = 0; j < n; ++j)
        s += ric * raw_inner(comp2(phi, i, j, alg), comp2(phi, k, j, alg), alg);
    }
  return s;
}

double H_phi(const ImmersionData& imm, const PointForm& phi, const LieAlgebraSpec& alg) {
  const int n = imm.n, nnorm = imm.N - imm.n;
  double s = 0.0;
  for (int mu = 0; mu < nnorm; ++mu) {
    double H = 0.0;
    for (int m = 0; m < n; ++m) H += imm.hval(mu, m, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          s += H * imm.hval(mu, i, k) *
               raw_inner(comp2(phi, i, j, alg), comp2(phi, k, j, alg), alg);
  }
  return s;
}

double h2(const ImmersionData& imm, const PointForm& phi, const LieAlgebraSpec& alg) {
  const int n = imm.n, nnorm = imm.N - imm.n;
  double s = 0.0;
  for (int mu = 0; mu < nnorm; ++mu)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            s += imm.hval(mu, i, k) * imm.hval(mu, l, j) *
                 raw_inner(comp2(phi, i, j, alg), comp2(phi, k, l, alg), alg);
  return s;
}

double h2p(const ImmersionData& imm, const PointForm& phi, const LieAlgebraSpec& alg) {
  const int n = imm.n, nnorm = imm.N - imm.n;
  double s = 0.0;
  for (int mu = 0; mu < nnorm; ++mu)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int m = 0; m < n; ++m)
            s += imm.hval(mu, m, k) * imm.hval(mu, m, i) *
                 raw_inner(comp2(phi, i, j, alg), comp2(phi, k, j, alg), alg);
  return s;
}

double Ric_phi_tensor(const CurvatureTensorData& C, const PointForm& phi,
                      const LieAlgebraSpec& alg) {
  double s = 0.0;
  for (int i = 0; i < C.n; ++i)
    for (int j = 0; j < C.n; ++j)
      for (int k = 0; k < C.n; ++k)
        s += C.Ric(i, k) * raw_inner(comp2(phi, i, j, alg), comp2(phi, k, j, alg), alg);
  return s;
}

double R_phi_tensor(const CurvatureTensorData& C, const PointForm& phi,
                    const LieAlgebraSpec& alg) {
  double s = 0.0;
  for (int i = 0; i < C.n; ++i)
    for (int j = 0; j < C.n; ++j)
      for (int k = 0; k < C.n; ++k)
        for (int l = 0; l < C.n; ++l)
          s += C.R(i, j, k, l) * raw_inner(comp2(phi, i, j, alg), comp2(phi, k, l, alg), alg);
  return s;
}

}  // namespace oracle

PointForm random_point_form(int degree, int n, const LieAlgebraSpec& alg,
                            std::mt19937_64& rng, double scale) {
  PointForm out = PointForm::zero(degree, n, alg);
  std::uniform_real_distribution<double> dist(-scale, scale);
  for (auto& c : out.comp)
    for (double& x : c) x = dist(rng);
  return out;
}

ImmersionData random_immersion(int n, int codim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ImmersionData imm;
  imm.n = n;
  imm.N = n + codim;
  imm.h.assign((size_t)codim * n * n, 0.0);
  for (int mu = 0; mu < codim; ++mu)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const double v = dist(rng);
        imm.at(mu, i, j) = v;
        imm.at(mu, j, i) = v;
      }
  return imm;
}

namespace {

Eigen::MatrixXd random_orthogonal(int N, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::MatrixXd G(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) G(i, j) = dist(rng);
  return Eigen::HouseholderQR<Eigen::MatrixXd>(G).householderQ();
}

void record(std::vector<IdentityResult>& results, const std::string& name, double residual) {
  for (auto& r : results)
    if (r.name == name) {
      r.trials += 1;
      r.max_residual = std::max(r.max_residual, residual);
      return;
    }
  results.push_back({name, 1, residual, 1e-9, false});
}

}  // namespace

std::vector<IdentityResult> run_identity_battery(const BatteryOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  LieAlgebraSpec su2 = make_su2();
  if (opts.corrupt_structure) su2.structure[0] += 0.1;  // breaks Ad-invariance
  const std::vector<std::pair<std::string, LieAlgebraSpec>> algebras = {
      {"u1", make_u1()}, {"su2", su2}};

  std::vector<IdentityResult> results;
  for (const auto& [alg_name, alg] : algebras) {
    (void)alg_name;
    for (int n = 2; n <= 6; ++n) {
      for (int trial = 0; trial < opts.trials; ++trial) {
        // Ad-invariance of the metric: <[x,y],z> + <y,[x,z]> = 0.
        {
          AlgElement x(alg.dim), y(alg.dim), z(alg.dim);
          for (int a = 0; a < alg.dim; ++a) {
            x[a] = dist(rng);
            y[a] = dist(rng);
            z[a] = dist(rng);
          }
          const double res = inner(bracket(x, y, alg), z, alg) + inner(y, bracket(x, z, alg), alg);
          record(results, "ad_invariance", std::abs(res));
        }

        // <r(alpha), alpha> = <[alpha ^ alpha], R>, optimized vs oracle.
        {
          const PointForm a = random_point_form(1, n, alg, rng);
          const PointForm R = random_point_form(2, n, alg, rng);
          const double lhs = inner_forms(weitzenbock_1(a, R, alg), a, alg);
          const double rhs = inner_forms(bracket_wedge(a, a, alg), R, alg);
          const double lhs_o = oracle::weitz1_quadratic(a, R, alg);
          const double rhs_o = oracle::bracket_wedge_vs_R(a, R, alg);
          const double res = std::max({std::abs(lhs - rhs), std::abs(lhs - lhs_o),
                                       std::abs(rhs - rhs_o)});
          record(results, "weitzenbock_vs_bracket_wedge", res);
        }

        // Curvature-term contraction: <phi o (Ric^I + 2R), phi> = Ric(phi,phi) - R(phi,phi)/2.
        {
          const ImmersionData imm = random_immersion(n, 2, rng);
          const CurvatureTensorData C = gauss_curvature(imm);
          const PointForm phi = random_point_form(2, n, alg, rng);
          const double lhs = inner_forms(compose_omega(phi, ric_wedge_I_plus_2R(C), alg), phi, alg);
          const double rhs = oracle::Ric_phi_tensor(C, phi, alg) -
                             0.5 * oracle::R_phi_tensor(C, phi, alg);
          record(results, "curvature_term_contraction", std::abs(lhs - rhs));
        }

        // Frame-sum identity: sum_A <r(i_{V_A} phi), i_{V_A} phi> = <r_2(phi), phi>.
        {
          const PointForm phi = random_point_form(2, n, alg, rng);
          const PointForm R = random_point_form(2, n, alg, rng);
          const Eigen::MatrixXd Q = random_orthogonal(n + 1, rng);
          double lhs = 0.0;
          for (int A = 0; A < n + 1; ++A) {
            std::vector<double> V(n);
            for (int i = 0; i < n; ++i) V[i] = Q(A, i);
            const PointForm ia = interior(V, phi, alg);
            lhs += inner_forms(weitzenbock_1(ia, R, alg), ia, alg);
          }
          const double rhs = inner_forms(weitzenbock_2(phi, R, alg), phi, alg);
          const double rhs_o = oracle::weitz2_quadratic(phi, R, alg);
          const double res = std::max(std::abs(lhs - rhs), std::abs(rhs - rhs_o));
          record(results, "frame_sum", res);
        }

        // Scalar-invariant identities h2 = R(phi,phi)/2 and h2' = H - Ric.
        {
          const ImmersionData imm = random_immersion(n, (trial % 2) + 1, rng);
          const PointForm phi = random_point_form(2, n, alg, rng);
          const ScalarInvariants inv = scalar_invariants(imm, phi, alg, Degree{}, false);
          const double Rp = oracle::R_phi(imm, phi, alg);
          const double Ricp = oracle::Ric_phi(imm, phi, alg);
          const double Hp = oracle::H_phi(imm, phi, alg);
          const double res_h2 = std::max({std::abs(inv.h2 - 0.5 * Rp),
                                          std::abs(inv.h2 - oracle::h2(imm, phi, alg)),
                                          std::abs(inv.R_phi - Rp)});
          const double res_h2p = std::max({std::abs(inv.h2p - (Hp - Ricp)),
                                           std::abs(inv.h2p - oracle::h2p(imm, phi, alg)),
                                           std::abs(inv.Ric_phi - Ricp),
                                           std::abs(inv.H_phi - Hp)});
          record(results, "h2_is_half_R", res_h2);
          record(results, "h2p_is_H_minus_Ric", res_h2p);
        }
      }
    }
  }

  for (auto& r : results) r.pass = r.max_residual < r.tol;
  return results;
}

}  // namespace fym
