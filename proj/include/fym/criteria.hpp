#ifndef FYM_CRITERIA_HPP
#define FYM_CRITERIA_HPP

#include <array>
#include <stdexcept>
#include <vector>

#include "fym/f_family.hpp"

namespace fym {

/// Outcome of an instability criterion. The criterion is satisfied exactly
/// when the minimum margin over all quantified index triples is positive;
/// the witness records the worst triple and both sides of the inequality.
struct CriterionReport {
  bool satisfied = false;
  double margin = 0.0;                // min over triples of (lhs - rhs)
  std::array<int, 3> witness{0, 0, 0};  // 1-based (i, j, k) of the worst triple
  double witness_lhs = 0.0;
  double witness_rhs = 0.0;
};

/// Thrown when a criterion is asked about a profile of infinite degree;
/// the convex-hypersurface inequality does not apply there.
struct InapplicableCriterion : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Convex-hypersurface instability test:
/// sum_{m != i,j} lambda_m > lambda_i + lambda_j + 4 d lambda_k,
/// quantified over ALL triples (i,j,k), repeats included.
CriterionReport check_convex_hypersurface(const std::vector<double>& lambdas,
                                          const Degree& degree);

/// Sphere specialization: satisfied iff n > 4d + 4.
CriterionReport check_sphere(int n, const Degree& degree);

/// Curvature-norm threshold sqrt((n-4)/(n-2)) for the Born-Infeld profile
/// with negative sign; requires n > 4.
double born_infeld_negative_bound(int n);
/// Pointwise integrand sign factor 2/(1-t) - (n-2) at t = |phi|^2.
double born_infeld_sign_factor(int n, double t);

/// Curvature-norm threshold sqrt((n-4)/2) for the exponential profile.
double exponential_bound(int n);
/// Pointwise integrand sign factor 2|phi|^2 - (n-4).
double exponential_sign_factor(int n, double phi_norm2);

}  // namespace fym

#endif
