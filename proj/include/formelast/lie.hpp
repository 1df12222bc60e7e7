#pragma once

#include "formelast/forms.hpp"

namespace formelast {

// Lie brackets and Lie derivatives in the coordinate basis. Every
// operation consumes one derivative order from its field arguments.

// [v, w]^i = v^k w^i_,k - w^k v^i_,k; antisymmetric.
VecField lie_bracket(const VecField& v, const VecField& w);

// L_v f = v^k f_,k on scalars (degree-0 forms).
KForm lie_scalar(const VecField& v, const KForm& f);

// Cartan's formula on one-forms: L_v w = v . dw + d(v . w).
KForm lie_oneform(const VecField& v, const KForm& w);

// Coordinate-formula route (L_v w)_i = v^k w_i,_k + w_k v^k_,i, kept as an
// independent cross-check of the Cartan route.
KForm lie_oneform_coordinate(const VecField& v, const KForm& w);

// Closed component formula on covariant rank-2 tensors:
// (L_v t)_ij = v^k t_ij,_k + t_kj v^k_,i + t_ik v^k_,j.
CovTensor2 lie_cov2(const VecField& v, const CovTensor2& t);

// Same derivative assembled by the tensor-product rule,
// L_v(t_ij dx^i (x) dx^j) = (L_v t_ij) dx^i (x) dx^j
//                           + t_ij (L_v dx^i) (x) dx^j
//                           + t_ij dx^i (x) (L_v dx^j),
// with L_v dx^i computed through Cartan's formula. Shipped as a runnable
// proof that both assemblies agree.
CovTensor2 lie_cov2_product_rule(const VecField& v, const CovTensor2& t);

}  // namespace formelast
