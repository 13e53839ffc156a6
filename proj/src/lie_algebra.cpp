#include "fym/lie_algebra.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace fym {

void LieAlgebraSpec::validate(double tol) const {
  if (dim <= 0) throw std::invalid_argument("algebra dimension must be positive");
  if ((int)structure.size() != dim * dim * dim || (int)metric.size() != dim * dim)
    throw std::invalid_argument("algebra table sizes do not match dim");

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (std::abs(g(i, j) - g(j, i)) > tol)
        throw std::invalid_argument("metric is not symmetric");
      for (int k = 0; k < dim; ++k)
        if (std::abs(c(k, i, j) + c(k, j, i)) > tol)
          throw std::invalid_argument("structure constants are not antisymmetric");
    }

  // Positive definiteness via Cholesky (dims are tiny).
  {
    std::vector<double> L(metric);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j <= i; ++j) {
        double s = L[i * dim + j];
        for (int k = 0; k < j; ++k) s -= L[i * dim + k] * L[j * dim + k];
        if (i == j) {
          if (s <= 0.0) throw std::invalid_argument("metric is not positive definite");
          L[i * dim + i] = std::sqrt(s);
        } else {
          L[i * dim + j] = s / L[j * dim + j];
        }
      }
    }
  }

  // Jacobi identity on basis triples: [[b_i,b_j],b_k] + cyclic = 0.
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int m = 0; m < dim; ++m) {
          double s = 0.0;
          for (int l = 0; l < dim; ++l)
            s += c(l, i, j) * c(m, l, k) + c(l, j, k) * c(m, l, i) + c(l, k, i) * c(m, l, j);
          if (std::abs(s) > tol) throw std::invalid_argument("Jacobi identity fails");
        }

  // Ad-invariance: <[b_i,b_j],b_k> + <b_j,[b_i,b_k]> = 0.
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        double s = 0.0;
        for (int l = 0; l < dim; ++l) s += c(l, i, j) * g(l, k) + c(l, i, k) * g(j, l);
        if (std::abs(s) > tol) throw std::invalid_argument("metric is not Ad-invariant");
      }
}

LieAlgebraSpec make_u1() {
  LieAlgebraSpec alg;
  alg.dim = 1;
  alg.structure.assign(1, 0.0);
  alg.metric.assign(1, 1.0);
  return alg;
}

LieAlgebraSpec make_su2() {
  // Orthonormal basis with cyclic brackets [b1,b2]=b3, [b2,b3]=b1, [b3,b1]=b2.
  LieAlgebraSpec alg;
  alg.dim = 3;
  alg.structure.assign(27, 0.0);
  auto set = [&](int k, int i, int j, double v) {
    alg.structure[(k * 3 + i) * 3 + j] = v;
    alg.structure[(k * 3 + j) * 3 + i] = -v;
  };
  set(2, 0, 1, 1.0);
  set(0, 1, 2, 1.0);
  set(1, 2, 0, 1.0);
  alg.metric.assign(9, 0.0);
  for (int i = 0; i < 3; ++i) alg.metric[i * 3 + i] = 1.0;
  return alg;
}

LieAlgebraSpec load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
  nlohmann::json j;
  in >> j;
  LieAlgebraSpec alg;
  alg.dim = j.at("dim").get<int>();
  for (const auto& plane : j.at("structure"))
    for (const auto& row : plane)
      for (const auto& v : row) alg.structure.push_back(v.get<double>());
  for (const auto& row : j.at("metric"))
    for (const auto& v : row) alg.metric.push_back(v.get<double>());
  alg.validate();
  return alg;
}

LieAlgebraSpec algebra_by_name(const std::string& name) {
  if (name == "u1") return make_u1();
  if (name == "su2") return make_su2();
  return load_algebra(name);
}

AlgElement zero_element(const LieAlgebraSpec& alg) { return AlgElement(alg.dim, 0.0); }

AlgElement bracket(const AlgElement& a, const AlgElement& b, const LieAlgebraSpec& alg) {
  if ((int)a.size() != alg.dim || (int)b.size() != alg.dim)
    throw std::invalid_argument("bracket: coefficient length does not match algebra dim");
  AlgElement out(alg.dim, 0.0);
  for (int i = 0; i < alg.dim; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < alg.dim; ++j) {
      if (b[j] == 0.0) continue;
      const double w = a[i] * b[j];
      for (int k = 0; k < alg.dim; ++k) out[k] += w * alg.c(k, i, j);
    }
  }
  return out;
}

double inner(const AlgElement& a, const AlgElement& b, const LieAlgebraSpec& alg) {
  if ((int)a.size() != alg.dim || (int)b.size() != alg.dim)
    throw std::invalid_argument("inner: coefficient length does not match algebra dim");
  double s = 0.0;
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j) s += a[i] * alg.g(i, j) * b[j];
  return s;
}

void axpy(double s, const AlgElement& x, AlgElement& y) {
  for (size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

AlgElement scaled(const AlgElement& x, double s) {
  AlgElement out(x);
  for (double& v : out) v *= s;
  return out;
}

}  // namespace fym
