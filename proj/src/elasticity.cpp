#include "formelast/elasticity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "formelast/exterior.hpp"
#include "formelast/lie.hpp"
#include "formelast/oracle.hpp"

namespace formelast {

namespace {

void require_order(int order, int needed, const char* op) {
  if (order < needed)
    throw DerivativeBudgetExceeded(std::string(op) + ": derivative budget exhausted");
}

// v must be sharp(u), checked on all live jet channels.
void require_consistent_pair(const MetricAtPoint& m, const KForm& u, const VecField& v,
                             const char* op) {
  require_same_frame(u.frame, v.frame, op);
  const VecField us = sharp(m, u);
  double scale = 1.0;
  double diff = 0.0;
  const int order = std::min(us.order, v.order);
  for (int i = 0; i < 3; ++i) {
    scale = std::max(scale, std::abs(v.comp[i].v));
    diff = std::max(diff, std::abs(us.comp[i].v - v.comp[i].v));
    if (order >= 1)
      for (int k = 0; k < 3; ++k) {
        scale = std::max(scale, std::abs(v.comp[i].g[k]));
        diff = std::max(diff, std::abs(us.comp[i].g[k] - v.comp[i].g[k]));
      }
  }
  if (diff > 1e-12 * scale)
    throw InconsistentPair(std::string(op) + ": v does not equal sharp(u)");
}

}  // namespace

ElasticModuli::ElasticModuli(double lambda_, double mu_) : lambda(lambda_), mu(mu_) {
  if (!(mu > 0.0)) throw InvalidSpec("ElasticModuli: mu must be positive");
  if (!(lambda + 2.0 * mu / 3.0 > 0.0))
    throw InvalidSpec("ElasticModuli: bulk modulus lambda + 2 mu / 3 must be positive");
}

BoundaryPoint make_boundary_point(const MetricAtPoint& m, const VecField& normal) {
  require_same_frame(frame_of(m), normal.frame, "make_boundary_point");
  double gnn = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gnn += m.g_value(i, j) * normal.comp[i].v * normal.comp[j].v;
  if (std::abs(gnn - 1.0) > 1e-10)
    throw NotNormalized("make_boundary_point: normal is not unit length");
  BoundaryPoint bp;
  bp.frame = normal.frame;
  bp.normal = normal;
  bp.normal_form = flat(m, normal);
  return bp;
}

KForm volume_expansion(const MetricAtPoint& m, const KForm& u) {
  require_order(u.order, 1, "volume_expansion");
  if (u.degree != 1) throw DegreeOverflow("volume_expansion: expects a one-form");
  KForm e = codifferential(m, u);
  e.comp[0] = -e.comp[0];
  return e;
}

CovTensor2 strain_lie(const MetricAtPoint& m, const VecField& v) {
  require_same_frame(frame_of(m), v.frame, "strain_lie");
  require_order(v.order, 1, "strain_lie");
  CovTensor2 eps = lie_cov2(v, metric_tensor(m));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) eps.comp[i][j] = eps.comp[i][j] * 0.5;
  return eps;
}

CovTensor2 strain_covariant(const MetricAtPoint& m, const KForm& u) {
  require_same_frame(frame_of(m), u.frame, "strain_covariant");
  if (u.degree != 1) throw DegreeOverflow("strain_covariant: expects a one-form");
  require_order(u.order, 1, "strain_covariant");
  CovTensor2 eps;
  eps.frame = u.frame;
  eps.order = u.order - 1;
  eps.symmetric = true;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Jet2 s = (derivative_jet(u.comp[i], j) + derivative_jet(u.comp[j], i)) * 0.5;
      for (int k = 0; k < 3; ++k) s = s - m.gamma[k][i][j] * u.comp[k];
      eps.comp[i][j] = s;
      eps.comp[j][i] = s;
    }
  return eps;
}

CovTensor2 stress(const ElasticModuli& mod, const MetricAtPoint& m, const KForm& u,
                  const VecField& v) {
  require_consistent_pair(m, u, v, "stress");
  const KForm e = volume_expansion(m, u);
  const CovTensor2 eps = strain_lie(m, v);
  CovTensor2 sig;
  sig.frame = u.frame;
  sig.order = std::min(e.order, eps.order);
  sig.symmetric = true;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const Jet2 s = (e.comp[0] * m.g[i][j]) * mod.lambda + eps.comp[i][j] * (2.0 * mod.mu);
      sig.comp[i][j] = s;
      sig.comp[j][i] = s;
    }
  return sig;
}

KForm cn_residual_form(const ElasticModuli& mod, const MetricAtPoint& m, const KForm& u) {
  if (u.degree != 1) throw DegreeOverflow("cn_residual_form: expects a one-form");
  require_order(u.order, 2, "cn_residual_form");
  // (lambda + 2 mu) d*d*u
  const KForm graddiv = exterior_derivative(hodge_star(m, exterior_derivative(hodge_star(m, u))));
  // mu *d*du
  const KForm curlcurl = hodge_star(m, exterior_derivative(hodge_star(m, exterior_derivative(u))));
  std::array<Jet2, 3> c;
  for (int i = 0; i < 3; ++i)
    c[i] = graddiv.comp[i] * (mod.lambda + 2.0 * mod.mu) - curlcurl.comp[i] * mod.mu;
  return one_form(u.frame, c, std::min(graddiv.order, curlcurl.order));
}

KForm cn_residual_gradcurl(const ElasticModuli& mod, const MetricAtPoint& m, const KForm& u) {
  if (u.degree != 1) throw DegreeOverflow("cn_residual_gradcurl: expects a one-form");
  require_order(u.order, 2, "cn_residual_gradcurl");
  // grad(div v) through the bridge identities, with explicit sharp/flat
  // round-trips so the numerical path differs from cn_residual_form.
  const KForm div_u = hodge_star(m, exterior_derivative(hodge_star(m, u)));
  const VecField graddiv = sharp(m, exterior_derivative(div_u));
  const VecField curl = sharp(m, hodge_star(m, exterior_derivative(u)));
  const VecField curlcurl = sharp(m, hodge_star(m, exterior_derivative(flat(m, curl))));
  std::array<Jet2, 3> c;
  for (int i = 0; i < 3; ++i)
    c[i] = graddiv.comp[i] * (mod.lambda + 2.0 * mod.mu) - curlcurl.comp[i] * mod.mu;
  return flat(m, vec_field(u.frame, c, std::min(graddiv.order, curlcurl.order)));
}

VecField cn_residual_classical(const ElasticModuli& mod, const MetricAtPoint& m,
                               const VecField& v) {
  require_order(v.order, 2, "cn_residual_classical");
  const VecField lap = oracle::vector_laplacian(m, v);
  const VecField graddiv = oracle::grad_classical(m, oracle::div_classical(m, v));
  std::array<Jet2, 3> c;
  for (int i = 0; i < 3; ++i)
    c[i] = lap.comp[i] * mod.mu + graddiv.comp[i] * (mod.lambda + mod.mu);
  return vec_field(v.frame, c, std::min(lap.order, graddiv.order));
}

KForm traction_cauchy(const ElasticModuli& mod, const MetricAtPoint& m, const KForm& u,
                      const VecField& v, const BoundaryPoint& bp) {
  require_same_frame(u.frame, bp.frame, "traction_cauchy");
  const CovTensor2 sig = stress(mod, m, u, v);
  std::array<Jet2, 3> c;
  for (int i = 0; i < 3; ++i) {
    Jet2 s = jet_const(0.0);
    for (int j = 0; j < 3; ++j) s = s + sig.comp[i][j] * bp.normal.comp[j];
    c[i] = s;
  }
  return one_form(u.frame, c, std::min(sig.order, bp.normal.order));
}

KForm traction_form(const ElasticModuli& mod, const MetricAtPoint& m, const KForm& u,
                    const VecField& v, const BoundaryPoint& bp) {
  require_same_frame(u.frame, bp.frame, "traction_form");
  require_consistent_pair(m, u, v, "traction_form");
  require_order(std::min({u.order, v.order, bp.normal.order}), 1, "traction_form");

  const KForm delta_u = codifferential(m, u);
  const KForm d_vn = exterior_derivative(interior_product(v, bp.normal_form));
  const KForm v_dn = interior_product(v, exterior_derivative(bp.normal_form));
  const KForm bracket = flat(m, lie_bracket(bp.normal, v));

  std::array<Jet2, 3> c;
  for (int i = 0; i < 3; ++i)
    c[i] = (delta_u.comp[0] * bp.normal_form.comp[i]) * (-mod.lambda) +
           (d_vn.comp[i] + v_dn.comp[i] + bracket.comp[i]) * mod.mu;
  const int order = std::min({delta_u.order, d_vn.order, v_dn.order, bracket.order});
  return one_form(u.frame, c, order);
}

KForm traction_adapted(const ElasticModuli& mod, const MetricAtPoint& m, const KForm& u,
                       const VecField& v, int r_index) {
  const Chart* chart = m.chart;
  if (!chart->unit_radial().has_value() || chart->unit_radial().value() != r_index)
    throw ChartNotAdapted("traction_adapted: chart has no unit radial coordinate " +
                          std::to_string(r_index));
  require_consistent_pair(m, u, v, "traction_adapted");
  require_order(std::min(u.order, v.order), 1, "traction_adapted");

  std::array<Jet2, 3> radial{};
  radial[static_cast<std::size_t>(r_index)] = jet_const(1.0);
  const VecField d_dr = vec_field(u.frame, radial, 2);

  const KForm delta_u = codifferential(m, u);
  const KForm du_r =
      exterior_derivative(scalar_form(u.frame, v.comp[static_cast<std::size_t>(r_index)], v.order));
  const KForm bracket = flat(m, lie_bracket(d_dr, v));

  std::array<Jet2, 3> c;
  for (int i = 0; i < 3; ++i) c[i] = (du_r.comp[i] + bracket.comp[i]) * mod.mu;
  c[static_cast<std::size_t>(r_index)] =
      c[static_cast<std::size_t>(r_index)] - delta_u.comp[0] * mod.lambda;
  const int order = std::min({delta_u.order, du_r.order, bracket.order});
  return one_form(u.frame, c, order);
}

}  // namespace formelast
