#pragma once

#include "formelast/forms.hpp"

namespace formelast {

// Lamé parameters of the isotropic law, in pascals. Construction enforces
// mu > 0 and a positive bulk modulus lambda + 2 mu / 3.
struct ElasticModuli {
  double lambda;
  double mu;
  ElasticModuli(double lambda_, double mu_);
};

// A boundary point with its outward unit normal supplied as a field in a
// neighborhood (the traction formulas differentiate it). normal_form is
// the lowered normal n = flat(normal).
struct BoundaryPoint {
  FrameTag frame{};
  VecField normal{};
  KForm normal_form{};
};

// Throws NotNormalized unless g(n, n) = 1 within 1e-10.
BoundaryPoint make_boundary_point(const MetricAtPoint& m, const VecField& normal);

// Volume expansion e = div(u-sharp) = -delta u = *d*u, as a zero-form.
KForm volume_expansion(const MetricAtPoint& m, const KForm& u);

// Strain as half the Lie derivative of the metric along the displacement
// vector field (not the one-form).
CovTensor2 strain_lie(const MetricAtPoint& m, const VecField& v);

// Strain from the covariant derivative of the displacement one-form,
// eps_ij = (u_i,_j + u_j,_i)/2 - Γ^k_ij u_k.
CovTensor2 strain_covariant(const MetricAtPoint& m, const KForm& u);

// sigma = lambda e g + 2 mu eps = -lambda (delta u) g + mu L_v g. Takes the
// displacement both ways and checks v = sharp(u); throws InconsistentPair
// otherwise.
CovTensor2 stress(const ElasticModuli& mod, const MetricAtPoint& m, const KForm& u,
                  const VecField& v);

// Cauchy-Navier residual, three equivalent routes. All are oriented like
// the classical operator mu Δv + (lambda + mu) grad(div v), so the three
// agree componentwise, not merely up to sign:
//   cn_residual_form      (lambda + 2 mu) d*d*u - mu *d*du
//                         = -[(lambda + 2 mu) d delta u + mu delta d u]
//   cn_residual_gradcurl  bridge route grad(div) minus curl(curl), built
//                         from d, *, flat and sharp
//   cn_residual_classical the oracle route.
KForm cn_residual_form(const ElasticModuli& mod, const MetricAtPoint& m, const KForm& u);
KForm cn_residual_gradcurl(const ElasticModuli& mod, const MetricAtPoint& m, const KForm& u);
VecField cn_residual_classical(const ElasticModuli& mod, const MetricAtPoint& m,
                               const VecField& v);

// Traction one-form, three routes.
// Cauchy's stress theorem, t_i = sigma_ij n^j; the ground-truth route.
KForm traction_cauchy(const ElasticModuli& mod, const MetricAtPoint& m, const KForm& u,
                      const VecField& v, const BoundaryPoint& bp);

// t = -lambda (delta u) n + mu (d(v . n) + v . dn + flat([n, v])).
KForm traction_form(const ElasticModuli& mod, const MetricAtPoint& m, const KForm& u,
                    const VecField& v, const BoundaryPoint& bp);

// Adapted-coordinate form for charts with a unit radial coordinate r
// (n = dr): t = -(lambda delta u) dr + mu (d v^r + flat([d/dr, v])).
// Throws ChartNotAdapted when the chart has no such coordinate or the
// index does not match.
KForm traction_adapted(const ElasticModuli& mod, const MetricAtPoint& m, const KForm& u,
                       const VecField& v, int r_index);

}  // namespace formelast
