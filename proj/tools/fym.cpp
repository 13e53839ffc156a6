#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fym/criteria.hpp"
#include "fym/f_family.hpp"
#include "fym/gauge.hpp"
#include "fym/identities.hpp"
#include "fym/mesh.hpp"
#include "fym/reports.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitConfig = 64;

struct FamilyFlags {
  std::string family = "identity";
  double p = 2.0;
  int epsilon = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "identity | p_power | born_infeld | exponential");
    cmd->add_option("--p", p, "exponent for p_power");
    cmd->add_option("--epsilon", epsilon, "sign for born_infeld (+1 or -1)");
  }
  fym::FFunction make() const { return fym::make_builtin(family, p, epsilon); }
};

struct MeshFlags {
  std::string mesh = "torus:4x4";
  double radius = 1.0;
  double L1 = 1.0, L2 = 1.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--mesh", mesh, "icosphere:<level> or torus:<n1>x<n2>");
    cmd->add_option("--radius", radius, "sphere radius");
    cmd->add_option("--L1", L1, "torus side length 1");
    cmd->add_option("--L2", L2, "torus side length 2");
  }
  fym::MeshComplex build() const { return fym::build_mesh_from_spec(mesh, radius, L1, L2); }
};

std::vector<double> parse_lambdas(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

int cmd_criterion(const FamilyFlags& fam, const std::string& lambdas_csv, int sphere_n) {
  const fym::FFunction f = fam.make();
  const fym::Degree d = fym::degree_analytic(f);
  const int n = sphere_n > 0 ? sphere_n : (int)parse_lambdas(lambdas_csv).size();

  if (d.infinite) {
    nlohmann::ordered_json j = {{"inapplicable", true},
                                {"family", f.name},
                                {"reason", "profile has infinite degree"}};
    // The curvature-norm smallness bounds take over where the finite-degree
    // criterion does not apply.
    if (n > 4) {
      if (fam.family == "born_infeld" && fam.epsilon == -1)
        j["norm_bound"] = fym::born_infeld_negative_bound(n);
      else if (fam.family == "exponential")
        j["norm_bound"] = fym::exponential_bound(n);
    }
    std::cout << j.dump(2) << "\n";
    return kExitInapplicable;
  }

  fym::CriterionReport rep;
  if (sphere_n > 0)
    rep = fym::check_sphere(sphere_n, d);
  else
    rep = fym::check_convex_hypersurface(parse_lambdas(lambdas_csv), d);
  nlohmann::ordered_json j = fym::to_report(rep);
  j["degree"] = d.value;
  std::cout << j.dump(2) << "\n";
  return rep.satisfied ? 0 : kExitFail;
}

int cmd_degree(const FamilyFlags& fam) {
  const fym::FFunction f = fam.make();
  const fym::Degree a = fym::degree_analytic(f);
  const fym::Degree num = fym::degree_numeric(f);
  auto as_json = [](const fym::Degree& d) -> nlohmann::ordered_json {
    if (d.infinite) return {{"infinite", true}};
    return {{"infinite", false}, {"value", d.value}};
  };
  nlohmann::ordered_json j = {{"family", f.name},
                              {"analytic", as_json(a)},
                              {"numeric", as_json(num)}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_identities(std::uint64_t seed, int trials, bool corrupt) {
  fym::BatteryOptions opts;
  opts.seed = seed;
  opts.trials = trials;
  opts.corrupt_structure = corrupt;
  const auto results = fym::run_identity_battery(opts);
  const nlohmann::ordered_json j = fym::to_report(results);
  std::cout << j.dump(2) << "\n";
  return j["all_pass"].get<bool>() ? 0 : kExitFail;
}

int cmd_index_sum(const MeshFlags& mesh_flags, const FamilyFlags& fam, int charge, double tol) {
  const fym::MeshComplex M = mesh_flags.build();
  const fym::LieAlgebraSpec alg = fym::make_u1();
  const fym::DiscreteConnection A = fym::make_monopole(charge, M);
  const fym::IndexSumReport rep = fym::index_sum_check(A, M, fam.make(), alg);
  std::cout << fym::to_report(rep, tol).dump(2) << "\n";
  return rep.rel_gap < tol ? 0 : kExitFail;
}

int cmd_flow(const MeshFlags& mesh_flags, const FamilyFlags& fam, const std::string& algebra,
             std::uint64_t seed, double tol, int max_iters, double init_scale,
             const std::string& csv_path) {
  const fym::MeshComplex M = mesh_flags.build();
  const fym::LieAlgebraSpec alg = fym::algebra_by_name(algebra);
  const fym::FFunction f = fam.make();

  std::mt19937_64 rng(seed);
  fym::DiscreteConnection A0 = fym::DiscreteConnection::zero(M, alg);
  const fym::DiscreteForm a0 = fym::random_form(1, M, alg, rng, init_scale);
  A0.edge = a0.comp;

  fym::FlowOptions opts;
  opts.tol = tol;
  opts.max_iters = max_iters;
  const fym::FlowResult res = fym::gradient_flow(A0, M, f, opts, alg);

  for (const auto& h : res.history) {
    const nlohmann::ordered_json line = {
        {"iter", h.iter}, {"functional", h.functional}, {"grad_norm", h.grad_norm}};
    std::cout << line.dump() << "\n";
  }
  std::cout << fym::to_report(res).dump(2) << "\n";

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    csv << "face,curvature_norm\n";
    const fym::DiscreteForm R = fym::curvature(res.A, M, alg);
    for (size_t fi = 0; fi < M.faces.size(); ++fi)
      csv << fi << "," << std::sqrt(fym::inner(R.comp[fi], R.comp[fi], alg)) << "\n";
  }
  return res.converged ? 0 : kExitFail;
}

int cmd_variation_check(const MeshFlags& mesh_flags, const FamilyFlags& fam,
                        const std::string& algebra, std::uint64_t seed, int trials, double tol,
                        double h) {
  const fym::MeshComplex M = mesh_flags.build();
  const fym::LieAlgebraSpec alg = fym::algebra_by_name(algebra);
  const fym::FFunction f = fam.make();

  std::mt19937_64 rng(seed);
  double max_rel = 0.0;
  for (int t = 0; t < trials; ++t) {
    fym::DiscreteConnection A = fym::DiscreteConnection::zero(M, alg);
    A.edge = fym::random_form(1, M, alg, rng, 0.1).comp;
    fym::rescale_to_density(A.edge, M, alg, 0.3);
    fym::DiscreteForm alpha = fym::random_form(1, M, alg, rng);
    fym::rescale_to_density(alpha.comp, M, alg, 1.0);
    const double an = fym::first_variation_analytic(A, M, f, alpha, alg);
    const double fd = fym::first_variation_fd(A, M, f, alpha, h, alg);
    const double rel = std::abs(an - fd) / std::max({std::abs(an), std::abs(fd), 1e-12});
    max_rel = std::max(max_rel, rel);
  }
  const nlohmann::ordered_json j = {
      {"trials", trials}, {"max_rel_error", max_rel}, {"tol", tol}, {"pass", max_rel <= tol}};
  std::cout << j.dump(2) << "\n";
  return max_rel <= tol ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for generalized Yang-Mills functionals on meshes"};
  app.require_subcommand(1);

  // criterion
  auto* crit = app.add_subcommand("criterion", "instability criterion for convex hypersurfaces");
  FamilyFlags crit_fam;
  crit_fam.attach(crit);
  std::string lambdas_csv;
  int sphere_n = 0;
  crit->add_option("--lambdas", lambdas_csv, "comma-separated principal curvatures");
  crit->add_option("--sphere-n", sphere_n, "round-sphere dimension");

  // degree
  auto* deg = app.add_subcommand("degree", "analytic and numeric degree of a profile");
  FamilyFlags deg_fam;
  deg_fam.attach(deg);

  // identities
  auto* ident = app.add_subcommand("identities", "randomized pointwise identity battery");
  std::uint64_t ident_seed = 12345;
  int ident_trials = 200;
  bool ident_corrupt = false;
  ident->add_option("--seed", ident_seed, "rng seed");
  ident->add_option("--trials", ident_trials, "trials per configuration");
  ident->add_flag("--self-test-corrupt", ident_corrupt,
                  "perturb a structure constant; the battery must fail");

  // index-sum
  auto* isum = app.add_subcommand("index-sum", "index-sum identity experiment on a sphere mesh");
  FamilyFlags isum_fam;
  MeshFlags isum_mesh;
  isum_mesh.mesh = "icosphere:4";
  isum_fam.attach(isum);
  isum_mesh.attach(isum);
  int charge = 1;
  double isum_tol = 0.05;
  isum->add_option("--charge", charge, "monopole charge");
  isum->add_option("--tol", isum_tol, "relative gap tolerance");

  // flow
  auto* flow = app.add_subcommand("flow", "gradient descent on the curvature functional");
  FamilyFlags flow_fam;
  MeshFlags flow_mesh;
  flow_mesh.mesh = "torus:8x8";
  flow_fam.attach(flow);
  flow_mesh.attach(flow);
  std::string flow_alg = "u1";
  std::uint64_t flow_seed = 0;
  double flow_tol = 1e-8, init_scale = 0.1;
  int max_iters = 5000;
  std::string csv_path;
  flow->add_option("--algebra", flow_alg, "u1 | su2 | path to a spec file");
  flow->add_option("--seed", flow_seed, "rng seed for the initial connection");
  flow->add_option("--tol", flow_tol, "gradient-norm stopping tolerance");
  flow->add_option("--max-iters", max_iters, "iteration cap");
  flow->add_option("--init-scale", init_scale, "scale of the random initial connection");
  flow->add_option("--csv", csv_path, "write per-face curvature norms to this path");

  // variation-check
  auto* var = app.add_subcommand("variation-check",
                                 "analytic first variation vs central differences");
  FamilyFlags var_fam;
  MeshFlags var_mesh;
  var_fam.attach(var);
  var_mesh.attach(var);
  std::string var_alg = "su2";
  std::uint64_t var_seed = 1;
  int var_trials = 20;
  double var_tol = 1e-5, var_h = 1e-4;
  var->add_option("--algebra", var_alg, "u1 | su2 | path to a spec file");
  var->add_option("--seed", var_seed, "rng seed");
  var->add_option("--trials", var_trials, "random trials");
  var->add_option("--tol", var_tol, "max relative error");
  var->add_option("--fd-step", var_h, "finite-difference step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitConfig;
  }

  try {
    if (crit->parsed()) {
      if (lambdas_csv.empty() == (sphere_n == 0)) {
        std::cerr << "criterion needs exactly one of --lambdas or --sphere-n\n";
        return kExitConfig;
      }
      return cmd_criterion(crit_fam, lambdas_csv, sphere_n);
    }
    if (deg->parsed()) return cmd_degree(deg_fam);
    if (ident->parsed()) return cmd_identities(ident_seed, ident_trials, ident_corrupt);
    if (isum->parsed()) return cmd_index_sum(isum_mesh, isum_fam, charge, isum_tol);
    if (flow->parsed())
      return cmd_flow(flow_mesh, flow_fam, flow_alg, flow_seed, flow_tol, max_iters, init_scale,
                      csv_path);
    if (var->parsed())
      return cmd_variation_check(var_mesh, var_fam, var_alg, var_seed, var_trials, var_tol, var_h);
  } catch (const fym::InapplicableCriterion& e) {
    std::cerr << e.what() << "\n";
    return kExitInapplicable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
