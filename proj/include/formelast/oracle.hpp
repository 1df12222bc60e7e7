#pragma once

#include "formelast/forms.hpp"

namespace formelast::oracle {

// Classical index-tensor implementations of the vector differential
// operators, used as independent ground truth for the form-based routes.
// Nothing here calls into the exterior module; the only shared inputs are
// the metric data and the jet carrier.

// u_{i|j} = u_i,_j - Γ^k_ij u_k (not symmetrized).
CovTensor2 cov_deriv_covector(const MetricAtPoint& m, const KForm& u);

// (grad f)^i = g^ij f_,j.
VecField grad_classical(const MetricAtPoint& m, const KForm& f);

// div v = (1/sqrt g)(sqrt g v^i)_,i — the density formula, which keeps the
// route independent of the Christoffel path as well.
KForm div_classical(const MetricAtPoint& m, const VecField& v);

// (curl v)^i = (1/sqrt g) eps^{ijk} (g_kl v^l)_,j with the permutation
// symbol, right-handed orientation.
VecField curl_classical(const MetricAtPoint& m, const VecField& v);

// grad(div v) - curl(curl v), assembled from the classical operators.
VecField vector_laplacian(const MetricAtPoint& m, const VecField& v);

// (div sigma)_i = g^jk (sigma_ij,_k - Γ^m_ik sigma_mj - Γ^m_jk sigma_im).
KForm stress_divergence(const MetricAtPoint& m, const CovTensor2& sigma);

}  // namespace formelast::oracle
