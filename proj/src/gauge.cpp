#include "fym/gauge.hpp"

#include <cmath>

#include "fym/hypersurface.hpp"
#include <numbers>

namespace fym {

namespace {

int cell_count(int degree, const MeshComplex& M) {
  switch (degree) {
    case 0: return (int)M.pos.size();
    case 1: return (int)M.edges.size();
    case 2: return (int)M.faces.size();
    default: throw std::invalid_argument("cochain degree must be 0, 1 or 2");
  }
}

// Constant 1-form on a face, in the (t1,t2) frame, reconstructed from the
// boundary edge integrals by the precomputed least-squares coefficients.
std::array<AlgElement, 2> face_recon(const std::vector<AlgElement>& edge_vals,
                                     const MeshComplex::Face& f, const LieAlgebraSpec& alg) {
  std::array<AlgElement, 2> b{zero_element(alg), zero_element(alg)};
  for (int s = 0; s < f.nv; ++s)
    for (int d = 0; d < 2; ++d) axpy(f.recon[d][s], edge_vals[f.edge[s]], b[d]);
  return b;
}

// Oriented boundary sum divided by the face area (exterior derivative as a
// density).
AlgElement d_density(const std::vector<AlgElement>& edge_vals, const MeshComplex::Face& f,
                     const LieAlgebraSpec& alg) {
  AlgElement out = zero_element(alg);
  for (int s = 0; s < f.nv; ++s) axpy(f.esign[s] / f.area, edge_vals[f.edge[s]], out);
  return out;
}

}  // namespace

DiscreteForm DiscreteForm::zero(int degree, const MeshComplex& M, const LieAlgebraSpec& alg) {
  DiscreteForm out;
  out.degree = degree;
  out.comp.assign(cell_count(degree, M), zero_element(alg));
  return out;
}

DiscreteConnection DiscreteConnection::zero(const MeshComplex& M, const LieAlgebraSpec& alg) {
  DiscreteConnection out;
  out.edge.assign(M.edges.size(), zero_element(alg));
  return out;
}

double form_inner(const DiscreteForm& a, const DiscreteForm& b, const MeshComplex& M,
                  const LieAlgebraSpec& alg) {
  if (a.degree != b.degree) throw std::invalid_argument("inner product needs equal degrees");
  double out = 0.0;
  switch (a.degree) {
    case 0:
      for (size_t v = 0; v < M.pos.size(); ++v) out += M.star0[v] * inner(a.comp[v], b.comp[v], alg);
      break;
    case 1:
      for (size_t e = 0; e < M.edges.size(); ++e)
        out += M.edges[e].star1 * inner(a.comp[e], b.comp[e], alg);
      break;
    case 2:
      for (size_t f = 0; f < M.faces.size(); ++f)
        out += M.faces[f].area * inner(a.comp[f], b.comp[f], alg);
      break;
    default: throw std::invalid_argument("cochain degree must be 0, 1 or 2");
  }
  return out;
}

DiscreteForm curvature(const DiscreteConnection& A, const MeshComplex& M,
                       const LieAlgebraSpec& alg) {
  DiscreteForm R = DiscreteForm::zero(2, M, alg);
  for (size_t fi = 0; fi < M.faces.size(); ++fi) {
    const auto& f = M.faces[fi];
    AlgElement r = d_density(A.edge, f, alg);
    const auto b = face_recon(A.edge, f, alg);
    axpy(1.0, bracket(b[0], b[1], alg), r);
    if (!A.background.empty()) axpy(1.0, A.background[fi], r);
    R.comp[fi] = std::move(r);
  }
  return R;
}

DiscreteConnection make_monopole(int k, const MeshComplex& M) {
  if (!M.is_sphere) throw std::invalid_argument("monopole connections need a sphere mesh");
  DiscreteConnection A;
  A.edge.assign(M.edges.size(), AlgElement{0.0});
  A.background.assign(M.faces.size(), AlgElement{2.0 * std::numbers::pi * k / M.total_area});
  return A;
}

DiscreteForm cov_d(const DiscreteForm& alpha, const DiscreteConnection& A,
                   const MeshComplex& M, const LieAlgebraSpec& alg) {
  if (alpha.degree == 0) {
    DiscreteForm out = DiscreteForm::zero(1, M, alg);
    for (size_t e = 0; e < M.edges.size(); ++e) {
      const auto& ed = M.edges[e];
      AlgElement v = alpha.comp[ed.v1];
      axpy(-1.0, alpha.comp[ed.v0], v);
      AlgElement avg = scaled(alpha.comp[ed.v0], 0.5);
      axpy(0.5, alpha.comp[ed.v1], avg);
      axpy(1.0, bracket(A.edge[e], avg, alg), v);
      out.comp[e] = std::move(v);
    }
    return out;
  }
  if (alpha.degree == 1) {
    DiscreteForm out = DiscreteForm::zero(2, M, alg);
    for (size_t fi = 0; fi < M.faces.size(); ++fi) {
      const auto& f = M.faces[fi];
      AlgElement v = d_density(alpha.comp, f, alg);
      const auto bA = face_recon(A.edge, f, alg);
      const auto ba = face_recon(alpha.comp, f, alg);
      axpy(1.0, bracket(bA[0], ba[1], alg), v);
      axpy(1.0, bracket(ba[0], bA[1], alg), v);
      out.comp[fi] = std::move(v);
    }
    return out;
  }
  throw std::invalid_argument("cov_d is defined on degree 0 and 1 cochains");
}

DiscreteForm cov_delta(const DiscreteForm& phi, const DiscreteConnection& A,
                       const MeshComplex& M, const LieAlgebraSpec& alg) {
  if (phi.degree == 2) {
    DiscreteForm out = DiscreteForm::zero(1, M, alg);
    for (size_t fi = 0; fi < M.faces.size(); ++fi) {
      const auto& f = M.faces[fi];
      const auto bA = face_recon(A.edge, f, alg);
      const AlgElement b2phi = bracket(bA[1], phi.comp[fi], alg);
      const AlgElement b1phi = bracket(bA[0], phi.comp[fi], alg);
      for (int s = 0; s < f.nv; ++s) {
        AlgElement& acc = out.comp[f.edge[s]];
        axpy(f.esign[s], phi.comp[fi], acc);
        axpy(f.area * f.recon[0][s], b2phi, acc);
        axpy(-f.area * f.recon[1][s], b1phi, acc);
      }
    }
    for (size_t e = 0; e < M.edges.size(); ++e)
      out.comp[e] = scaled(out.comp[e], 1.0 / M.edges[e].star1);
    return out;
  }
  if (phi.degree == 1) {
    DiscreteForm out = DiscreteForm::zero(0, M, alg);
    for (size_t e = 0; e < M.edges.size(); ++e) {
      const auto& ed = M.edges[e];
      const AlgElement br = bracket(A.edge[e], phi.comp[e], alg);
      AlgElement head = phi.comp[e];
      axpy(-0.5, br, head);
      AlgElement tail = scaled(phi.comp[e], -1.0);
      axpy(-0.5, br, tail);
      axpy(ed.star1, head, out.comp[ed.v1]);
      axpy(ed.star1, tail, out.comp[ed.v0]);
    }
    for (size_t v = 0; v < M.pos.size(); ++v) out.comp[v] = scaled(out.comp[v], 1.0 / M.star0[v]);
    return out;
  }
  throw std::invalid_argument("cov_delta is defined on degree 1 and 2 cochains");
}

double functional(const DiscreteConnection& A, const MeshComplex& M, const FFunction& f,
                  const LieAlgebraSpec& alg) {
  const DiscreteForm R = curvature(A, M, alg);
  double total = 0.0;
  for (size_t fi = 0; fi < M.faces.size(); ++fi) {
    const double t = 0.5 * inner(R.comp[fi], R.comp[fi], alg);
    if (t >= f.domain_bound) throw DomainViolation((int)fi, t);
    total += f.F(t) * M.faces[fi].area;
  }
  return total;
}

double first_variation_analytic(const DiscreteConnection& A, const MeshComplex& M,
                                const FFunction& f, const DiscreteForm& alpha,
                                const LieAlgebraSpec& alg) {
  DiscreteForm R = curvature(A, M, alg);
  for (size_t fi = 0; fi < M.faces.size(); ++fi) {
    const double t = 0.5 * inner(R.comp[fi], R.comp[fi], alg);
    if (t >= f.domain_bound) throw DomainViolation((int)fi, t);
    R.comp[fi] = scaled(R.comp[fi], f.F1(t));
  }
  return form_inner(cov_delta(R, A, M, alg), alpha, M, alg);
}

double first_variation_fd(const DiscreteConnection& A, const MeshComplex& M,
                          const FFunction& f, const DiscreteForm& alpha, double h,
                          const LieAlgebraSpec& alg) {
  DiscreteConnection Ap = A, Am = A;
  for (size_t e = 0; e < M.edges.size(); ++e) {
    axpy(h, alpha.comp[e], Ap.edge[e]);
    axpy(-h, alpha.comp[e], Am.edge[e]);
  }
  return (functional(Ap, M, f, alg) - functional(Am, M, f, alg)) / (2.0 * h);
}

double index_form(const DiscreteForm& phi, const DiscreteConnection& A,
                  const MeshComplex& M, const FFunction& f, const DiscreteForm& alpha,
                  const LieAlgebraSpec& alg) {
  if (phi.degree != 2 || alpha.degree != 1)
    throw std::invalid_argument("index form takes a 2-cochain and a 1-cochain");
  const DiscreteForm R = curvature(A, M, alg);
  const DiscreteForm L = cov_d(alpha, A, M, alg);
  double total = 0.0;
  for (size_t fi = 0; fi < M.faces.size(); ++fi) {
    const auto& fc = M.faces[fi];
    const double t = 0.5 * inner(R.comp[fi], R.comp[fi], alg);
    if (t >= f.domain_bound) throw DomainViolation((int)fi, t);
    const double dphi = inner(L.comp[fi], phi.comp[fi], alg);
    // <r(alpha), alpha> in the face frame, with alpha reconstructed as a
    // constant 1-form and R the curvature 2-form of the face.
    const auto ba = face_recon(alpha.comp, fc, alg);
    PointForm a1 = PointForm::zero(1, 2, alg);
    a1.set(0, ba[0]);
    a1.set(1, ba[1]);
    PointForm R2 = PointForm::zero(2, 2, alg);
    R2.set(0, 1, R.comp[fi]);
    const double weitz = inner_forms(weitzenbock_1(a1, R2, alg), a1, alg);
    const double dnorm = inner(L.comp[fi], L.comp[fi], alg);
    total += fc.area * (f.F2(t) * dphi * dphi + f.F1(t) * (weitz + dnorm));
  }
  return total;
}

std::vector<DiscreteForm> simons_fields(const DiscreteForm& phi, const MeshComplex& M,
                                        const LieAlgebraSpec& alg) {
  if (phi.degree != 2) throw std::invalid_argument("simons fields take a 2-cochain");
  std::vector<DiscreteForm> out(3, DiscreteForm::zero(1, M, alg));
  std::vector<double> wsum(M.edges.size(), 0.0);
  for (size_t fi = 0; fi < M.faces.size(); ++fi) {
    const auto& f = M.faces[fi];
    const Eigen::Matrix3d fr = M.ambient_frame((int)fi);
    for (int s = 0; s < f.nv; ++s) {
      const auto& ed = M.edges[f.edge[s]];
      wsum[f.edge[s]] += f.area;
      const double d1 = ed.dir.dot(f.t1), d2 = ed.dir.dot(f.t2);
      for (int a = 0; a < 3; ++a) {
        // i_{V}phi with V = (fr(a,0), fr(a,1)) in the face frame:
        // components (-V2 phi, V1 phi); edge integral against the edge direction.
        const double coeff = ed.length * (-fr(a, 1) * d1 + fr(a, 0) * d2);
        axpy(f.area * coeff, phi.comp[fi], out[a].comp[f.edge[s]]);
      }
    }
  }
  for (size_t e = 0; e < M.edges.size(); ++e)
    for (int a = 0; a < 3; ++a) out[a].comp[e] = scaled(out[a].comp[e], 1.0 / wsum[e]);
  return out;
}

IndexSumReport index_sum_check(const DiscreteConnection& A, const MeshComplex& M,
                               const FFunction& f, const LieAlgebraSpec& alg) {
  const DiscreteForm phi = curvature(A, M, alg);
  IndexSumReport rep;
  for (const DiscreteForm& a : simons_fields(phi, M, alg))
    rep.lhs += index_form(phi, A, M, f, a, alg);

  for (size_t fi = 0; fi < M.faces.size(); ++fi) {
    const auto& fc = M.faces[fi];
    ImmersionData imm;
    imm.n = 2;
    imm.N = 3;
    imm.h = {fc.h11, fc.h12, fc.h12, fc.h22};
    PointForm p = PointForm::zero(2, 2, alg);
    p.set(0, 1, phi.comp[fi]);
    const ScalarInvariants inv = scalar_invariants(imm, p, alg, Degree{}, false);
    const double t = 0.5 * inner(phi.comp[fi], phi.comp[fi], alg);
    if (t >= f.domain_bound) throw DomainViolation((int)fi, t);
    rep.rhs += fc.area * (f.F2(t) * inv.h1_norm2 +
                          f.F1(t) * (inv.H_phi - 2.0 * inv.Ric_phi + inv.R_phi));
  }
  const double denom = std::max(std::abs(rep.lhs), std::abs(rep.rhs));
  rep.rel_gap = denom > 0.0 ? std::abs(rep.lhs - rep.rhs) / denom : 0.0;
  return rep;
}

FlowResult gradient_flow(const DiscreteConnection& A0, const MeshComplex& M,
                         const FFunction& f, const FlowOptions& opts,
                         const LieAlgebraSpec& alg) {
  FlowResult res;
  res.A = A0;
  double value = functional(res.A, M, f, alg);
  double last_step = opts.initial_step;

  for (int it = 0; it < opts.max_iters; ++it) {
    DiscreteForm FR = curvature(res.A, M, alg);
    for (size_t fi = 0; fi < M.faces.size(); ++fi) {
      const double t = 0.5 * inner(FR.comp[fi], FR.comp[fi], alg);
      FR.comp[fi] = scaled(FR.comp[fi], f.F1(t));
    }
    const DiscreteForm grad = cov_delta(FR, res.A, M, alg);
    const double gnorm2 = form_inner(grad, grad, M, alg);
    const double gnorm = std::sqrt(gnorm2);
    res.history.push_back({it, value, gnorm});
    if (gnorm <= opts.tol) {
      res.converged = true;
      return res;
    }

    // Warm-start above the last accepted step so flat minima (e.g. quartic
    // profiles) do not pin the flow to a fixed step size.
    double step = 4.0 * last_step;
    bool accepted = false;
    bool saw_violation = false;
    while (step > 1e-16) {
      DiscreteConnection trial = res.A;
      for (size_t e = 0; e < M.edges.size(); ++e) axpy(-step, grad.comp[e], trial.edge[e]);
      double trial_value;
      try {
        trial_value = functional(trial, M, f, alg);
      } catch (const DomainViolation&) {
        saw_violation = true;
        step *= opts.shrink;
        continue;
      }
      if (trial_value <= value - opts.armijo_c * step * gnorm2) {
        res.A = std::move(trial);
        value = trial_value;
        last_step = step;
        accepted = true;
        break;
      }
      step *= opts.shrink;
    }
    if (!accepted) {
      res.aborted_domain = saw_violation;
      return res;
    }
  }
  // record the final state
  {
    DiscreteForm FR = curvature(res.A, M, alg);
    for (size_t fi = 0; fi < M.faces.size(); ++fi) {
      const double t = 0.5 * inner(FR.comp[fi], FR.comp[fi], alg);
      FR.comp[fi] = scaled(FR.comp[fi], f.F1(t));
    }
    const DiscreteForm grad = cov_delta(FR, res.A, M, alg);
    const double gnorm = std::sqrt(form_inner(grad, grad, M, alg));
    res.history.push_back({opts.max_iters, value, gnorm});
    res.converged = gnorm <= opts.tol;
  }
  return res;
}

void rescale_to_density(std::vector<AlgElement>& edge, const MeshComplex& M,
                        const LieAlgebraSpec& alg, double target) {
  DiscreteConnection tmp;
  tmp.edge = edge;
  const DiscreteForm R = curvature(tmp, M, alg);
  double m = 0.0;
  for (const auto& r : R.comp) m = std::max(m, std::sqrt(inner(r, r, alg)));
  if (m == 0.0) return;
  for (auto& e : edge)
    for (double& x : e) x *= target / m;
}

DiscreteForm random_form(int degree, const MeshComplex& M, const LieAlgebraSpec& alg,
                         std::mt19937_64& rng, double scale) {
  DiscreteForm out = DiscreteForm::zero(degree, M, alg);
  std::normal_distribution<double> dist(0.0, scale);
  for (auto& c : out.comp)
    for (double& x : c) x = dist(rng);
  return out;
}

}  // namespace fym
