#include "formelast/oracle.hpp"

#include <algorithm>
#include <string>

namespace formelast::oracle {

namespace {

void require_order(int order, int needed, const char* op) {
  if (order < needed)
    throw DerivativeBudgetExceeded(std::string(op) + ": derivative budget exhausted");
}

}  // namespace

CovTensor2 cov_deriv_covector(const MetricAtPoint& m, const KForm& u) {
  require_same_frame(frame_of(m), u.frame, "cov_deriv_covector");
  if (u.degree != 1) throw DegreeOverflow("cov_deriv_covector: expects a one-form");
  require_order(u.order, 1, "cov_deriv_covector");
  CovTensor2 r;
  r.frame = u.frame;
  r.order = u.order - 1;
  r.symmetric = false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Jet2 s = derivative_jet(u.comp[i], j);
      for (int k = 0; k < 3; ++k) s = s - m.gamma[k][i][j] * u.comp[k];
      r.comp[i][j] = s;
    }
  return r;
}

VecField grad_classical(const MetricAtPoint& m, const KForm& f) {
  require_same_frame(frame_of(m), f.frame, "grad_classical");
  if (f.degree != 0) throw DegreeOverflow("grad_classical: expects a zero-form");
  require_order(f.order, 1, "grad_classical");
  std::array<Jet2, 3> c;
  for (int i = 0; i < 3; ++i) {
    Jet2 s = jet_const(0.0);
    for (int j = 0; j < 3; ++j) s = s + m.g_inv[i][j] * derivative_jet(f.comp[0], j);
    c[i] = s;
  }
  return vec_field(f.frame, c, f.order - 1);
}

KForm div_classical(const MetricAtPoint& m, const VecField& v) {
  require_same_frame(frame_of(m), v.frame, "div_classical");
  require_order(v.order, 1, "div_classical");
  Jet2 s = jet_const(0.0);
  for (int i = 0; i < 3; ++i) s = s + derivative_jet(m.sqrt_det * v.comp[i], i);
  return scalar_form(v.frame, recip(m.sqrt_det) * s, v.order - 1);
}

VecField curl_classical(const MetricAtPoint& m, const VecField& v) {
  require_same_frame(frame_of(m), v.frame, "curl_classical");
  require_order(v.order, 1, "curl_classical");
  std::array<Jet2, 3> low;
  for (int k = 0; k < 3; ++k) {
    Jet2 s = jet_const(0.0);
    for (int l = 0; l < 3; ++l) s = s + m.g[k][l] * v.comp[l];
    low[k] = s;
  }
  const Jet2 inv_sd = recip(m.sqrt_det);
  std::array<Jet2, 3> c;
  c[0] = inv_sd * (derivative_jet(low[2], 1) - derivative_jet(low[1], 2));
  c[1] = inv_sd * (derivative_jet(low[0], 2) - derivative_jet(low[2], 0));
  c[2] = inv_sd * (derivative_jet(low[1], 0) - derivative_jet(low[0], 1));
  return vec_field(v.frame, c, v.order - 1);
}

VecField vector_laplacian(const MetricAtPoint& m, const VecField& v) {
  require_order(v.order, 2, "vector_laplacian");
  const VecField graddiv = grad_classical(m, div_classical(m, v));
  const VecField curlcurl = curl_classical(m, curl_classical(m, v));
  std::array<Jet2, 3> c;
  for (int i = 0; i < 3; ++i) c[i] = graddiv.comp[i] - curlcurl.comp[i];
  return vec_field(v.frame, c, std::min(graddiv.order, curlcurl.order));
}

KForm stress_divergence(const MetricAtPoint& m, const CovTensor2& sigma) {
  require_same_frame(frame_of(m), sigma.frame, "stress_divergence");
  require_order(sigma.order, 1, "stress_divergence");
  std::array<Jet2, 3> c;
  for (int i = 0; i < 3; ++i) {
    Jet2 s = jet_const(0.0);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Jet2 term = derivative_jet(sigma.comp[i][j], k);
        for (int mm = 0; mm < 3; ++mm)
          term = term - m.gamma[mm][i][k] * sigma.comp[mm][j] -
                 m.gamma[mm][j][k] * sigma.comp[i][mm];
        s = s + m.g_inv[j][k] * term;
      }
    c[i] = s;
  }
  return one_form(sigma.frame, c, sigma.order - 1);
}

}  // namespace formelast::oracle
