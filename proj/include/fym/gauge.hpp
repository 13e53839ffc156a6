#ifndef FYM_GAUGE_HPP
#define FYM_GAUGE_HPP

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fym/f_family.hpp"
#include "fym/lie_algebra.hpp"
#include "fym/mesh.hpp"
#include "fym/point_forms.hpp"

namespace fym {

/// Algebra-valued k-cochain; one element per k-cell, orientation-signed.
/// Degree-1 values are edge integrals (v0 -> v1); degree-2 values are
/// pointwise densities in the face frame; degree-0 values are vertex values.
struct DiscreteForm {
  int degree = 0;
  std::vector<AlgElement> comp;

  static DiscreteForm zero(int degree, const MeshComplex& M, const LieAlgebraSpec& alg);
};

/// Connection nabla = nabla_0 + A: an edge cochain A over a fixed reference
/// connection whose curvature density (per face) is `background`; an empty
/// background is the trivial flat reference d.
struct DiscreteConnection {
  std::vector<AlgElement> edge;
  std::vector<AlgElement> background;

  static DiscreteConnection zero(const MeshComplex& M, const LieAlgebraSpec& alg);
};

/// Raised when an evaluation leaves the domain [0, c) of the profile F;
/// carries the offending face and the value of |R|^2/2 there.
struct DomainViolation : std::runtime_error {
  int face;
  double value;
  DomainViolation(int face_, double value_)
      : std::runtime_error("F-domain violation: |R|^2/2 = " + std::to_string(value_) +
                           " on face " + std::to_string(face_)),
        face(face_), value(value_) {}
};

/// Hodge inner products matching the cochain conventions.
double form_inner(const DiscreteForm& a, const DiscreteForm& b, const MeshComplex& M,
                  const LieAlgebraSpec& alg);

/// Curvature density per face: R = R_0 + dA + (1/2)[A ^ A], with dA the
/// oriented boundary sum divided by face area and the bracket term built
/// from the face least-squares reconstruction of A.
DiscreteForm curvature(const DiscreteConnection& A, const MeshComplex& M,
                       const LieAlgebraSpec& alg);

/// u(1) connection on an icosphere whose curvature density is uniform with
/// total flux 2*pi*k: the charge sits in the reference background, A = 0.
DiscreteConnection make_monopole(int k, const MeshComplex& M);

/// Covariant differential d^nabla = d + [A ^ .] on degree 0 and 1 cochains.
/// On 1-cochains this is exactly the linearization of `curvature` at A.
DiscreteForm cov_d(const DiscreteForm& alpha, const DiscreteConnection& A,
                   const MeshComplex& M, const LieAlgebraSpec& alg);

/// Formal adjoint of cov_d with respect to the Hodge inner products,
/// assembled as the transpose of the cov_d assembly (exact by construction).
DiscreteForm cov_delta(const DiscreteForm& phi, const DiscreteConnection& A,
                       const MeshComplex& M, const LieAlgebraSpec& alg);

/// Total functional: sum over faces of F(|R|^2/2) * area.
double functional(const DiscreteConnection& A, const MeshComplex& M, const FFunction& f,
                  const LieAlgebraSpec& alg);

/// (cov_delta(F'(|R|^2/2) R), alpha) under the edge Hodge product; the exact
/// directional derivative of `functional` at A along alpha.
double first_variation_analytic(const DiscreteConnection& A, const MeshComplex& M,
                                const FFunction& f, const DiscreteForm& alpha,
                                const LieAlgebraSpec& alg);

/// Central finite-difference oracle for the first variation.
double first_variation_fd(const DiscreteConnection& A, const MeshComplex& M,
                          const FFunction& f, const DiscreteForm& alpha, double h,
                          const LieAlgebraSpec& alg);

/// Second-variation quadratic form I_phi(alpha): face quadrature of
/// F'' <d^nabla alpha, phi>^2 + F' { <r(alpha), alpha> + |d^nabla alpha|^2 },
/// with the Weitzenboeck term taken against R = curvature(A).
double index_form(const DiscreteForm& phi, const DiscreteConnection& A,
                  const MeshComplex& M, const FFunction& f, const DiscreteForm& alpha,
                  const LieAlgebraSpec& alg);

/// The N test variations alpha_A = i_{V_A} phi, assembled per face and
/// transferred to edges by area-weighted averaging.
std::vector<DiscreteForm> simons_fields(const DiscreteForm& phi, const MeshComplex& M,
                                        const LieAlgebraSpec& alg);

struct IndexSumReport {
  double lhs = 0.0;      // sum_A I_phi(i_{V_A} phi)
  double rhs = 0.0;      // quadrature of F''<h1,h1> + F'(H - 2Ric + R)
  double rel_gap = 0.0;
};

/// Checks the index-sum identity for phi = curvature(A) on an embedded mesh.
IndexSumReport index_sum_check(const DiscreteConnection& A, const MeshComplex& M,
                               const FFunction& f, const LieAlgebraSpec& alg);

struct FlowOptions {
  int max_iters = 5000;
  double tol = 1e-8;          // gradient Hodge norm
  double initial_step = 1.0;  // Armijo backtracking from here
  double armijo_c = 1e-4;
  double shrink = 0.5;
};

struct FlowHistoryEntry {
  int iter;
  double functional;
  double grad_norm;
};

struct FlowResult {
  DiscreteConnection A;
  std::vector<FlowHistoryEntry> history;
  bool converged = false;
  bool aborted_domain = false;  // left the F-domain mid-flow; A is the last valid state
};

/// Gradient descent on the functional with backtracking line search;
/// the functional history is nonincreasing.
FlowResult gradient_flow(const DiscreteConnection& A0, const MeshComplex& M,
                         const FFunction& f, const FlowOptions& opts,
                         const LieAlgebraSpec& alg);

/// Random cochains for tests and randomized checks.
DiscreteForm random_form(int degree, const MeshComplex& M, const LieAlgebraSpec& alg,
                         std::mt19937_64& rng, double scale = 1.0);

/// Rescales an edge cochain so the maximal curvature density of the
/// connection it defines equals `target`. Keeps randomized variation checks
/// well conditioned independently of mesh resolution (raw random edge values
/// produce densities of order 1/h).
void rescale_to_density(std::vector<AlgElement>& edge, const MeshComplex& M,
                        const LieAlgebraSpec& alg, double target);

}  // namespace fym

#endif
