#ifndef FYM_POINT_FORMS_HPP
#define FYM_POINT_FORMS_HPP

#include <vector>

#include "fym/lie_algebra.hpp"

namespace fym {

/// Algebra-valued k-form (k <= 2) at a point, over an orthonormal frame of
/// dimension n. Components are stored on strictly increasing index tuples;
/// full antisymmetric access is derived by sign.
///
/// The inner product uses the 1/k! convention: for k=2,
/// |phi|^2 = sum_{i<j} <phi_ij, phi_ij>.
struct PointForm {
  int degree = 0;
  int n = 0;
  std::vector<AlgElement> comp;

  static PointForm zero(int degree, int n, const LieAlgebraSpec& alg);

  int upper_index(int i, int j) const;       // i < j
  AlgElement get(int i) const;               // degree 1
  AlgElement get(int i, int j) const;        // degree 2, signed access
  void set(int i, AlgElement v);             // degree 1
  void set(int i, int j, AlgElement v);      // degree 2, i != j
};

/// Riemann and Ricci components over an orthonormal frame, with the
/// conventions R(e_k,e_l)e_j = sum_i R_ijkl e_i and Ric_ik = sum_l R_lkli.
struct CurvatureTensorData {
  int n = 0;
  std::vector<double> riemann;  // R[((i*n+j)*n+k)*n+l]
  std::vector<double> ricci;    // Ric[i*n+k]

  double R(int i, int j, int k, int l) const { return riemann[((i * n + j) * n + k) * n + l]; }
  double Ric(int i, int k) const { return ricci[i * n + k]; }

  /// Curvature symmetries and the Ricci trace convention; throws on failure.
  void validate(double tol = 1e-12) const;
};

/// Element of Omega^2(M) (x) End(TM): for each ordered frame pair (i,j) an
/// n x n transformation, antisymmetric in (i,j).
struct TwoFormEndo {
  int n = 0;
  std::vector<double> mats;  // for i<j, row-major n x n at slot upper(i,j)

  static TwoFormEndo zero(int n);
  int upper_index(int i, int j) const;
  double entry(int i, int j, int a, int b) const;  // signed: omega_{ij}(e_b) component along e_a
  double& at(int i, int j, int a, int b);          // i < j only
};

double inner_forms(const PointForm& phi, const PointForm& psi, const LieAlgebraSpec& alg);

/// Interior product of a frame vector with a 2-form: (i_V phi)_i = sum_k V^k phi_ki.
PointForm interior(const std::vector<double>& V, const PointForm& phi, const LieAlgebraSpec& alg);

/// [alpha ^ beta]_{ij} = [alpha_i, beta_j] - [alpha_j, beta_i]; symmetric in its arguments.
PointForm bracket_wedge(const PointForm& alpha, const PointForm& beta, const LieAlgebraSpec& alg);

/// Weitzenboeck curvature on 1-forms: out_i = sum_j [R_ji, alpha_j].
PointForm weitzenbock_1(const PointForm& alpha, const PointForm& R, const LieAlgebraSpec& alg);

/// Weitzenboeck curvature on 2-forms:
/// out_{XY} = sum_j { [R_jX, phi_jY] - [R_jY, phi_jX] }.
PointForm weitzenbock_2(const PointForm& phi, const PointForm& R, const LieAlgebraSpec& alg);

/// (phi o omega)_{ij} = (1/2) sum_k phi_{k, omega_ij(e_k)}.
PointForm compose_omega(const PointForm& phi, const TwoFormEndo& omega, const LieAlgebraSpec& alg);

/// Ric ^ I + 2R as a two-form-valued endomorphism, the curvature term of the
/// Bochner-Weitzenboeck formula on 2-forms.
TwoFormEndo ric_wedge_I_plus_2R(const CurvatureTensorData& C);

}  // namespace fym

#endif
