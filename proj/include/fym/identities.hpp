#ifndef FYM_IDENTITIES_HPP
#define FYM_IDENTITIES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fym/hypersurface.hpp"
#include "fym/lie_algebra.hpp"
#include "fym/point_forms.hpp"

namespace fym {

/// Brute-force re-implementations of the pointwise operations by literal
/// full-ordered-index summation. These deliberately share no code with the
/// optimized paths; tests compare the two.
namespace oracle {

double inner_forms(const PointForm& phi, const PointForm& psi, const LieAlgebraSpec& alg);

/// sum_{i,j} <[R_ji, alpha_j], alpha_i>
double weitz1_quadratic(const PointForm& alpha, const PointForm& R, const LieAlgebraSpec& alg);

/// <[alpha ^ alpha], R> by full expansion of the bracket-wedge components.
double bracket_wedge_vs_R(const PointForm& alpha, const PointForm& R, const LieAlgebraSpec& alg);

/// <r(phi), phi> on 2-forms: (1/2) sum_{i,j} of the defining component sums.
double weitz2_quadratic(const PointForm& phi, const PointForm& R, const LieAlgebraSpec& alg);

/// R(phi,phi), Ric(phi,phi), H(phi,phi), h2, h2p straight from the tables.
double R_phi(const ImmersionData& imm, const PointForm& phi, const LieAlgebraSpec& alg);
double Ric_phi(const ImmersionData& imm, const PointForm& phi, const LieAlgebraSpec& alg);
double H_phi(const ImmersionData& imm, const PointForm& phi, const LieAlgebraSpec& alg);
double h2(const ImmersionData& imm, const PointForm& phi, const LieAlgebraSpec& alg);
double h2p(const ImmersionData& imm, const PointForm& phi, const LieAlgebraSpec& alg);

/// Ric(phi,phi) and R(phi,phi) from raw curvature tables (no immersion).
double Ric_phi_tensor(const CurvatureTensorData& C, const PointForm& phi,
                      const LieAlgebraSpec& alg);
double R_phi_tensor(const CurvatureTensorData& C, const PointForm& phi,
                    const LieAlgebraSpec& alg);

}  // namespace oracle

struct IdentityResult {
  std::string name;
  int trials = 0;
  double max_residual = 0.0;
  double tol = 1e-9;
  bool pass = false;
};

struct BatteryOptions {
  std::uint64_t seed = 12345;
  int trials = 200;             // per (n, algebra) configuration
  bool corrupt_structure = false;  // negative control: perturb one su(2) constant
};

/// Randomized identity battery over n in {2..6} and algebras {u1, su2}:
/// Ad-invariance of the metric, <r(alpha),alpha> = <[alpha^alpha],R>, the
/// curvature-term contraction identity on 2-forms, the frame-sum identity,
/// and both scalar-invariant identities, each checked against the
/// brute-force oracles above.
std::vector<IdentityResult> run_identity_battery(const BatteryOptions& opts);

/// Random helpers shared by the battery and the test suites.
PointForm random_point_form(int degree, int n, const LieAlgebraSpec& alg,
                            std::mt19937_64& rng, double scale = 1.0);
ImmersionData random_immersion(int n, int codim, std::mt19937_64& rng);

}  // namespace fym

#endif
