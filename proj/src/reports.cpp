#include "fym/reports.hpp"

namespace fym {

nlohmann::ordered_json to_report(const CriterionReport& rep) {
  return {{"satisfied", rep.satisfied},
          {"margin", rep.margin},
          {"witness", {rep.witness[0], rep.witness[1], rep.witness[2]}},
          {"witness_lhs", rep.witness_lhs},
          {"witness_rhs", rep.witness_rhs}};
}

nlohmann::ordered_json to_report(const std::vector<IdentityResult>& results) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    out.push_back({{"identity", r.name},
                   {"trials", r.trials},
                   {"max_residual", r.max_residual},
                   {"tol", r.tol},
                   {"pass", r.pass}});
    all = all && r.pass;
  }
  return {{"identities", out}, {"all_pass", all}};
}

nlohmann::ordered_json to_report(const IndexSumReport& rep, double tol) {
  return {{"lhs", rep.lhs},
          {"rhs", rep.rhs},
          {"rel_gap", rep.rel_gap},
          {"tol", tol},
          {"pass", rep.rel_gap < tol}};
}

nlohmann::ordered_json to_report(const FlowResult& res) {
  const auto& last = res.history.back();
  return {{"iterations", last.iter},
          {"functional", last.functional},
          {"grad_norm", last.grad_norm},
          {"converged", res.converged},
          {"aborted_domain", res.aborted_domain}};
}

}  // namespace fym
