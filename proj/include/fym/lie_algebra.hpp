#ifndef FYM_LIE_ALGEBRA_HPP
#define FYM_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

namespace fym {

/// Coefficients of a Lie algebra element in the fixed basis of its spec.
using AlgElement = std::vector<double>;

/// A compact Lie algebra given by structure constants and an Ad-invariant
/// inner product: [b_i, b_j] = sum_k c^k_{ij} b_k, <b_i, b_j> = g_{ij}.
struct LieAlgebraSpec {
  int dim = 0;
  std::vector<double> structure;  // c[k*dim*dim + i*dim + j]
  std::vector<double> metric;     // g[i*dim + j]

  double c(int k, int i, int j) const { return structure[(k * dim + i) * dim + j]; }
  double g(int i, int j) const { return metric[i * dim + j]; }

  /// Checks antisymmetry, the Jacobi identity and Ad-invariance of the
  /// metric on all basis triples; throws std::invalid_argument on failure.
  void validate(double tol = 1e-12) const;
};

LieAlgebraSpec make_u1();
LieAlgebraSpec make_su2();

/// Resolves "u1" or "su2"; anything else is treated as a file path to a
/// JSON spec {dim, structure, metric}.
LieAlgebraSpec algebra_by_name(const std::string& name);
LieAlgebraSpec load_algebra(const std::string& path);

AlgElement zero_element(const LieAlgebraSpec& alg);
AlgElement bracket(const AlgElement& a, const AlgElement& b, const LieAlgebraSpec& alg);
double inner(const AlgElement& a, const AlgElement& b, const LieAlgebraSpec& alg);

// In-place coefficient arithmetic.
void axpy(double s, const AlgElement& x, AlgElement& y);  // y += s*x
AlgElement scaled(const AlgElement& x, double s);

}  // namespace fym

#endif
