#include "fym/point_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace fym {

namespace {
void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}
int ncomp(int degree, int n) {
  switch (degree) {
    case 0: return 1;
    case 1: return n;
    case 2: return n * (n - 1) / 2;
    default: throw std::invalid_argument("PointForm degree must be 0, 1 or 2");
  }
}
void require_same_shape(const PointForm& a, const PointForm& b) {
  require(a.degree == b.degree && a.n == b.n && a.comp.size() == b.comp.size(),
          "form shapes do not match");
}
}  // namespace

PointForm PointForm::zero(int degree, int n, const LieAlgebraSpec& alg) {
  PointForm f;
  f.degree = degree;
  f.n = n;
  f.comp.assign(ncomp(degree, n), AlgElement(alg.dim, 0.0));
  return f;
}

int PointForm::upper_index(int i, int j) const {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

AlgElement PointForm::get(int i) const {
  require(degree == 1, "component access by one index needs degree 1");
  return comp[i];
}

AlgElement PointForm::get(int i, int j) const {
  require(degree == 2, "component access by two indices needs degree 2");
  if (i == j) return AlgElement(comp[0].size(), 0.0);
  if (i < j) return comp[upper_index(i, j)];
  return scaled(comp[upper_index(j, i)], -1.0);
}

void PointForm::set(int i, AlgElement v) {
  require(degree == 1, "set by one index needs degree 1");
  comp[i] = std::move(v);
}

void PointForm::set(int i, int j, AlgElement v) {
  require(degree == 2 && i != j, "set by two indices needs degree 2 and i != j");
  if (i < j)
    comp[upper_index(i, j)] = std::move(v);
  else
    comp[upper_index(j, i)] = scaled(v, -1.0);
}

void CurvatureTensorData::validate(double tol) const {
  require((int)riemann.size() == n * n * n * n && (int)ricci.size() == n * n,
          "curvature table sizes do not match n");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (std::abs(R(i, j, k, l) + R(j, i, k, l)) > tol ||
              std::abs(R(i, j, k, l) + R(i, j, l, k)) > tol ||
              std::abs(R(i, j, k, l) - R(k, l, i, j)) > tol)
            throw std::invalid_argument("Riemann tensor symmetries fail");
        }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int l = 0; l < n; ++l) s += R(l, k, l, i);
      if (std::abs(s - Ric(i, k)) > tol)
        throw std::invalid_argument("Ricci trace convention fails");
    }
}

TwoFormEndo TwoFormEndo::zero(int n) {
  TwoFormEndo w;
  w.n = n;
  w.mats.assign((size_t)(n * (n - 1) / 2) * n * n, 0.0);
  return w;
}

int TwoFormEndo::upper_index(int i, int j) const {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

double TwoFormEndo::entry(int i, int j, int a, int b) const {
  if (i == j) return 0.0;
  if (i < j) return mats[(size_t)upper_index(i, j) * n * n + a * n + b];
  return -mats[(size_t)upper_index(j, i) * n * n + a * n + b];
}

double& TwoFormEndo::at(int i, int j, int a, int b) {
  return mats[(size_t)upper_index(i, j) * n * n + a * n + b];
}

double inner_forms(const PointForm& phi, const PointForm& psi, const LieAlgebraSpec& alg) {
  require_same_shape(phi, psi);
  double s = 0.0;
  for (size_t c = 0; c < phi.comp.size(); ++c) s += inner(phi.comp[c], psi.comp[c], alg);
  return s;
}

PointForm interior(const std::vector<double>& V, const PointForm& phi,
                   const LieAlgebraSpec& alg) {
  require(phi.degree == 2, "interior product needs a degree-2 form");
  require((int)V.size() == phi.n, "vector length does not match frame dim");
  PointForm out = PointForm::zero(1, phi.n, alg);
  for (int i = 0; i < phi.n; ++i) {
    AlgElement acc(alg.dim, 0.0);
    for (int k = 0; k < phi.n; ++k) {
      if (k == i || V[k] == 0.0) continue;
      axpy(V[k], phi.get(k, i), acc);
    }
    out.comp[i] = std::move(acc);
  }
  return out;
}

PointForm bracket_wedge(const PointForm& alpha, const PointForm& beta,
                        const LieAlgebraSpec& alg) {
  require(alpha.degree == 1 && beta.degree == 1, "bracket_wedge needs degree-1 forms");
  require(alpha.n == beta.n, "frame dims do not match");
  PointForm out = PointForm::zero(2, alpha.n, alg);
  for (int i = 0; i < alpha.n; ++i)
    for (int j = i + 1; j < alpha.n; ++j) {
      AlgElement v = bracket(alpha.comp[i], beta.comp[j], alg);
      axpy(-1.0, bracket(alpha.comp[j], beta.comp[i], alg), v);
      out.comp[out.upper_index(i, j)] = std::move(v);
    }
  return out;
}

PointForm weitzenbock_1(const PointForm& alpha, const PointForm& R,
                        const LieAlgebraSpec& alg) {
  require(alpha.degree == 1 && R.degree == 2, "weitzenbock_1 needs (1-form, 2-form)");
  require(alpha.n == R.n, "frame dims do not match");
  PointForm out = PointForm::zero(1, alpha.n, alg);
  for (int i = 0; i < alpha.n; ++i) {
    AlgElement acc(alg.dim, 0.0);
    for (int j = 0; j < alpha.n; ++j) {
      if (j == i) continue;
      axpy(1.0, bracket(R.get(j, i), alpha.comp[j], alg), acc);
    }
    out.comp[i] = std::move(acc);
  }
  return out;
}

PointForm weitzenbock_2(const PointForm& phi, const PointForm& R,
                        const LieAlgebraSpec& alg) {
  require(phi.degree == 2 && R.degree == 2, "weitzenbock_2 needs 2-forms");
  require(phi.n == R.n, "frame dims do not match");
  PointForm out = PointForm::zero(2, phi.n, alg);
  for (int x = 0; x < phi.n; ++x)
    for (int y = x + 1; y < phi.n; ++y) {
      AlgElement acc(alg.dim, 0.0);
      for (int j = 0; j < phi.n; ++j) {
        axpy(1.0, bracket(R.get(j, x), phi.get(j, y), alg), acc);
        axpy(-1.0, bracket(R.get(j, y), phi.get(j, x), alg), acc);
      }
      out.comp[out.upper_index(x, y)] = std::move(acc);
    }
  return out;
}

PointForm compose_omega(const PointForm& phi, const TwoFormEndo& omega,
                        const LieAlgebraSpec& alg) {
  require(phi.degree == 2, "compose_omega needs a degree-2 form");
  require(phi.n == omega.n, "frame dims do not match");
  const int n = phi.n;
  PointForm out = PointForm::zero(2, n, alg);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      AlgElement acc(alg.dim, 0.0);
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          if (m == k) continue;
          const double w = omega.entry(i, j, m, k);
          if (w == 0.0) continue;
          axpy(0.5 * w, phi.get(k, m), acc);
        }
      out.comp[out.upper_index(i, j)] = std::move(acc);
    }
  return out;
}

TwoFormEndo ric_wedge_I_plus_2R(const CurvatureTensorData& C) {
  C.validate();
  const int n = C.n;
  TwoFormEndo w = TwoFormEndo::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          double v = 0.0;
          // (Ric(e_i) ^ e_j)(e_b) = Ric_bi e_j - delta_jb Ric(e_i)
          if (a == j) v += C.Ric(b, i);
          if (b == j) v -= C.Ric(a, i);
          // (e_i ^ Ric(e_j))(e_b) = delta_ib Ric(e_j) - Ric_bj e_i
          if (b == i) v += C.Ric(a, j);
          if (a == i) v -= C.Ric(b, j);
          // 2 R_{e_i,e_j}(e_b) = 2 sum_a R_abij e_a
          v += 2.0 * C.R(a, b, i, j);
          w.at(i, j, a, b) = v;
        }
  return w;
}

}  // namespace fym
