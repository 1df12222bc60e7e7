#pragma once

#include "formelast/forms.hpp"

namespace formelast {

// Differential-form operators on a chart at a point. All metric-dependent
// operators take the MetricAtPoint whose frame must match the operand's.

// Index lowering, (flat v)_i = g_ij v^j.
KForm flat(const MetricAtPoint& m, const VecField& v);

// Index raising, (sharp w)^i = g^ij w_j; w must have degree 1.
VecField sharp(const MetricAtPoint& m, const KForm& w);

// Antisymmetrized coordinate derivative, degree k -> k+1. Consumes one
// derivative order; throws DerivativeBudgetExceeded on an exhausted form.
KForm exterior_derivative(const KForm& w);

// Hodge star for the chart metric and right-handed orientation; an
// involution on all degrees in E^3.
KForm hodge_star(const MetricAtPoint& m, const KForm& w);

// Codifferential, degree k -> k-1 (k = 1, 2, 3):
//   -*d*  on one- and three-forms,
//   +*d*  on two-forms.
KForm codifferential(const MetricAtPoint& m, const KForm& w);

KForm wedge(const KForm& a, const KForm& b);

// Contraction on the first slot, degree k -> k-1 (k >= 1).
KForm interior_product(const VecField& v, const KForm& w);

}  // namespace formelast
