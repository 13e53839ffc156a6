#include "fym/f_family.hpp"

#include <cmath>
#include <stdexcept>

namespace fym {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

FFunction make_identity() {
  FFunction f;
  f.name = "identity";
  f.F = [](double t) { return t; };
  f.F1 = [](double) { return 1.0; };
  f.F2 = [](double) { return 0.0; };
  f.domain_bound = kInf;
  f.builtin = true;
  return f;
}

FFunction make_p_power(double p) {
  if (p < 2.0) throw std::invalid_argument("p_power requires p >= 2");
  FFunction f;
  f.name = "p_power";
  f.p = p;
  f.F = [p](double t) { return std::pow(2.0 * t, p / 2.0) / p; };
  f.F1 = [p](double t) { return std::pow(2.0 * t, (p - 2.0) / 2.0); };
  f.F2 = [p](double t) { return (p - 2.0) * std::pow(2.0 * t, (p - 4.0) / 2.0); };
  f.domain_bound = kInf;
  f.builtin = true;
  return f;
}

FFunction make_born_infeld(int epsilon) {
  if (epsilon != 1 && epsilon != -1)
    throw std::invalid_argument("born_infeld requires epsilon in {+1,-1}");
  FFunction f;
  f.name = "born_infeld";
  f.epsilon = epsilon;
  const double e = epsilon;
  f.F = [e](double t) { return e * std::sqrt(1.0 + 2.0 * e * t) - e; };
  f.F1 = [e](double t) { return 1.0 / std::sqrt(1.0 + 2.0 * e * t); };
  f.F2 = [e](double t) { return -e * std::pow(1.0 + 2.0 * e * t, -1.5); };
  f.domain_bound = (epsilon == -1) ? 0.5 : kInf;
  f.builtin = true;
  return f;
}

FFunction make_exponential() {
  FFunction f;
  f.name = "exponential";
  f.F = [](double t) { return std::exp(t); };
  f.F1 = [](double t) { return std::exp(t); };
  f.F2 = [](double t) { return std::exp(t); };
  f.domain_bound = kInf;
  f.builtin = true;
  return f;
}

FFunction make_builtin(const std::string& family, double p, int epsilon) {
  if (family == "identity") return make_identity();
  if (family == "p_power") return make_p_power(p);
  if (family == "born_infeld") return make_born_infeld(epsilon);
  if (family == "exponential") return make_exponential();
  throw std::invalid_argument("unknown F family: " + family);
}

FFunction make_custom(std::string name, std::function<double(double)> F,
                      std::function<double(double)> F1, std::function<double(double)> F2,
                      double domain_bound) {
  FFunction f;
  f.name = std::move(name);
  f.F = std::move(F);
  f.F1 = std::move(F1);
  f.F2 = std::move(F2);
  f.domain_bound = domain_bound;
  f.builtin = false;
  spot_check_derivatives(f);
  return f;
}

Degree degree_analytic(const FFunction& f) {
  if (!f.builtin)
    throw std::invalid_argument("degree_analytic is only defined for built-in families");
  if (f.name == "identity") return {0.0, false};
  if (f.name == "p_power") return {(f.p - 2.0) / 2.0, false};
  if (f.name == "born_infeld") {
    if (f.epsilon == 1) return {0.0, false};
    return {0.0, true};
  }
  return {0.0, true};  // exponential
}

Degree degree_numeric(const FFunction& f, const DegreeGrid& grid) {
  const double c = f.domain_bound;
  double t_min = grid.t_min;
  double t_max = grid.t_max;
  if (t_max <= 0.0) t_max = std::isfinite(c) ? c * (1.0 - 1e-6) : 1e9;
  if (!(t_min > 0.0 && t_max > t_min && t_max < c))
    throw std::invalid_argument("degree grid must satisfy 0 < t_min < t_max < c");
  const int m = grid.points;
  const double lmin = std::log(t_min), lmax = std::log(t_max);
  const double decade_start = t_max / 10.0;

  double sup = -kInf;
  double sup_before_decade = -kInf;
  for (int i = 0; i < m; ++i) {
    const double t = std::exp(lmin + (lmax - lmin) * i / (m - 1));
    const double fp = f.F1(t);
    if (!(fp > 0.0)) throw std::invalid_argument("F'(t) <= 0 inside the domain: F is not strictly increasing");
    const double ratio = t * f.F2(t) / fp;
    sup = std::max(sup, ratio);
    // Narrow grids may lie entirely inside the last decade; always count the
    // first tenth of the samples toward the plateau baseline.
    if (t <= decade_start || i < m / 10) sup_before_decade = std::max(sup_before_decade, ratio);
    if (sup > grid.cap) return {0.0, true};
  }
  const double growth = (sup - sup_before_decade) / std::max(std::abs(sup), 1e-300);
  if (growth >= grid.plateau_rel) return {0.0, true};
  return {sup, false};
}

void spot_check_derivatives(const FFunction& f, int samples, double step, double tol) {
  // Sample away from t=0 (several families have singular F'' there) and
  // away from the upper domain bound.
  const double c = f.domain_bound;
  const double hi = std::isfinite(c) ? 0.9 * c : 1.0;
  const double lo = hi / 100.0;
  for (int i = 0; i < samples; ++i) {
    const double t = lo * std::pow(hi / lo, double(i) / (samples - 1));
    const double h = step;
    const double d1 = (f.F(t + h) - f.F(t - h)) / (2.0 * h);
    const double d2 = (f.F1(t + h) - f.F1(t - h)) / (2.0 * h);
    const double s1 = std::max(std::abs(f.F1(t)), 1e-12);
    const double s2 = std::max(std::abs(f.F2(t)), std::max(std::abs(f.F1(t)), 1e-12));
    if (std::abs(d1 - f.F1(t)) / s1 > tol)
      throw std::invalid_argument("profile F' disagrees with finite differences of F");
    if (std::abs(d2 - f.F2(t)) / s2 > tol)
      throw std::invalid_argument("profile F'' disagrees with finite differences of F'");
  }
}

}  // namespace fym
