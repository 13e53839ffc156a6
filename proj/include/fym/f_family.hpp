#ifndef FYM_F_FAMILY_HPP
#define FYM_F_FAMILY_HPP

#include <functional>
#include <limits>
#include <string>

namespace fym {

/// Strictly increasing C^2 profile F on [0, c) together with its first two
/// derivatives. Every functional in the library is parametrized by one of
/// these.
struct FFunction {
  std::string name;
  std::function<double(double)> F;
  std::function<double(double)> F1;
  std::function<double(double)> F2;
  double domain_bound = std::numeric_limits<double>::infinity();  // c
  double p = 0.0;    // p_power parameter
  int epsilon = 0;   // born_infeld sign, +1 or -1
  bool builtin = false;

  double operator()(double t) const { return F(t); }
};

/// sup over (0,c) of t F''(t)/F'(t), possibly infinite.
struct Degree {
  double value = 0.0;
  bool infinite = false;
};

FFunction make_identity();
FFunction make_p_power(double p);          // p >= 2
FFunction make_born_infeld(int epsilon);   // epsilon in {+1,-1}
FFunction make_exponential();

/// Resolves {identity, p_power, born_infeld, exponential}; throws on
/// unknown family or out-of-range parameters.
FFunction make_builtin(const std::string& family, double p = 2.0, int epsilon = 1);

/// Caller-supplied profile; derivative consistency is spot-checked by
/// centered finite differences before the triple is accepted.
FFunction make_custom(std::string name, std::function<double(double)> F,
                      std::function<double(double)> F1, std::function<double(double)> F2,
                      double domain_bound);

/// Closed-form degree for the built-in families only.
Degree degree_analytic(const FFunction& f);

struct DegreeGrid {
  double t_min = 1e-9;
  double t_max = 0.0;        // 0 = derive from the domain bound
  int points = 10000;
  double cap = 1e6;          // running sup above this is reported infinite
  double plateau_rel = 1e-3; // last-decade relative growth below this is a plateau
};

/// Estimates the degree on a log-spaced grid. Reports infinite when the
/// running supremum exceeds the cap or keeps growing into the last decade
/// of the grid without plateauing.
Degree degree_numeric(const FFunction& f, const DegreeGrid& grid = {});

/// Centered-difference consistency of F1/F2 against F at `samples` points;
/// throws when the relative error exceeds `tol`.
void spot_check_derivatives(const FFunction& f, int samples = 7, double step = 1e-5,
                            double tol = 1e-6);

}  // namespace fym

#endif
