#ifndef FYM_HYPERSURFACE_HPP
#define FYM_HYPERSURFACE_HPP

#include <string>
#include <vector>

#include "fym/f_family.hpp"
#include "fym/point_forms.hpp"

namespace fym {

/// Second fundamental form data of an isometric immersion M^n -> R^N,
/// h(e_i,e_j) = sum_mu h^mu_ij e_mu over orthonormal tangent and normal
/// frames. Intrinsic curvature is derived through the Gauss equation.
struct ImmersionData {
  int n = 0;  // tangent dim
  int N = 0;  // ambient dim, N > n
  std::vector<double> h;  // h[mu_off * n * n + i * n + j], mu_off in [0, N-n)

  double hval(int mu_off, int i, int j) const { return h[(size_t)mu_off * n * n + i * n + j]; }
  double& at(int mu_off, int i, int j) { return h[(size_t)mu_off * n * n + i * n + j]; }

  /// Mean curvature component H^mu = sum_m h^mu_mm.
  double mean_curvature(int mu_off) const;

  void validate(double tol = 1e-12) const;  // symmetry of each h^mu

  /// Hypersurface (N = n+1) with h_ij = lambda_i delta_ij.
  static ImmersionData hypersurface(const std::vector<double>& lambdas);
  /// Sphere of radius r in R^{n+1}: all principal curvatures 1/r.
  static ImmersionData sphere(int n, double r);
};

/// JSON file with either {"lambdas": [...]} or {"n":, "N":, "h": [[[...]]]}.
ImmersionData load_immersion(const std::string& path);

/// Gauss equation: R_ijkl = sum_mu (h_ik h_jl - h_jk h_il), Ric by trace.
CurvatureTensorData gauss_curvature(const ImmersionData& imm);

/// The scalar invariants of a degree-2 form against an immersion, all by
/// literal full-index summation.
struct ScalarInvariants {
  double R_phi = 0.0;    // sum R_ijkl <phi_ij, phi_kl>
  double Ric_phi = 0.0;  // sum Ric_ik delta_jl <phi_ij, phi_kl>
  double H_phi = 0.0;    // sum_mu H^mu h1^mu
  std::vector<double> h1;  // normal components h1^mu = sum h_ik delta_jl <phi_ij, phi_kl>
  double h1_norm2 = 0.0;
  double h2 = 0.0;
  double h2p = 0.0;
  double B = 0.0;      // d <h1,h1> + (|phi|^2/2)(H - 2Ric + R)
  bool has_B = false;
};

/// Computes all invariants. When B is requested it is evaluated through both
/// of its algebraic forms and their agreement is asserted to 1e-10; an
/// infinite degree with want_B set is an error.
ScalarInvariants scalar_invariants(const ImmersionData& imm, const PointForm& phi,
                                   const LieAlgebraSpec& alg, const Degree& degree,
                                   bool want_B = true);

/// Per-triple coefficient B_iji' of the convex-hypersurface expansion,
/// specialized to equal principal curvatures: d*lambda^2 + (lambda^2/4)(4-n).
double B_sphere_reduction(int n, double lambda, double d);

}  // namespace fym

#endif
