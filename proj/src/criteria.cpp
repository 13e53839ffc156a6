#include "fym/criteria.hpp"

#include <cmath>
#include <limits>

namespace fym {

CriterionReport check_convex_hypersurface(const std::vector<double>& lambdas,
                                          const Degree& degree) {
  const int n = (int)lambdas.size();
  if (n < 2) throw std::invalid_argument("need at least two principal curvatures");
  for (double l : lambdas)
    if (!(l > 0.0)) throw std::invalid_argument("principal curvatures must be positive");
  if (degree.infinite)
    throw InapplicableCriterion("convex-hypersurface criterion needs a finite degree");

  double total = 0.0;
  for (double l : lambdas) total += l;

  CriterionReport rep;
  rep.margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double lhs = total - lambdas[i] - lambdas[j];
      if (i == j) lhs += lambdas[i];  // sum over m != i only
      for (int k = 0; k < n; ++k) {
        const double rhs = lambdas[i] + lambdas[j] + 4.0 * degree.value * lambdas[k];
        const double m = lhs - rhs;
        if (m < rep.margin) {
          rep.margin = m;
          rep.witness = {i + 1, j + 1, k + 1};
          rep.witness_lhs = lhs;
          rep.witness_rhs = rhs;
        }
      }
    }
  rep.satisfied = rep.margin > 0.0;
  return rep;
}

CriterionReport check_sphere(int n, const Degree& degree) {
  if (n < 2) throw std::invalid_argument("sphere criterion needs n >= 2");
  if (degree.infinite)
    throw InapplicableCriterion("sphere criterion needs a finite degree");
  CriterionReport rep;
  rep.margin = double(n) - (4.0 * degree.value + 4.0);
  rep.witness = {1, 2, 1};
  rep.witness_lhs = double(n - 2);
  rep.witness_rhs = 2.0 + 4.0 * degree.value;
  rep.satisfied = rep.margin > 0.0;
  return rep;
}

double born_infeld_negative_bound(int n) {
  if (n <= 4) throw std::invalid_argument("bound requires n > 4");
  return std::sqrt(double(n - 4) / double(n - 2));
}

double born_infeld_sign_factor(int n, double t) {
  return 2.0 / (1.0 - t) - double(n - 2);
}

double exponential_bound(int n) {
  if (n <= 4) throw std::invalid_argument("bound requires n > 4");
  return std::sqrt(double(n - 4) / 2.0);
}

double exponential_sign_factor(int n, double phi_norm2) {
  return 2.0 * phi_norm2 - double(n - 4);
}

}  // namespace fym
