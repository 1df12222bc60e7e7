#include "formelast/lie.hpp"

#include <algorithm>
#include <string>

#include "formelast/exterior.hpp"

namespace formelast {

namespace {

void require_order(int order, int needed, const char* op) {
  if (order < needed)
    throw DerivativeBudgetExceeded(std::string(op) + ": derivative budget exhausted");
}

}  // namespace

VecField lie_bracket(const VecField& v, const VecField& w) {
  require_same_frame(v.frame, w.frame, "lie_bracket");
  require_order(std::min(v.order, w.order), 1, "lie_bracket");
  std::array<Jet2, 3> c;
  for (int i = 0; i < 3; ++i) {
    Jet2 s = jet_const(0.0);
    for (int k = 0; k < 3; ++k)
      s = s + v.comp[k] * derivative_jet(w.comp[i], k) - w.comp[k] * derivative_jet(v.comp[i], k);
    c[i] = s;
  }
  return vec_field(v.frame, c, std::min(v.order, w.order) - 1);
}

KForm lie_scalar(const VecField& v, const KForm& f) {
  require_same_frame(v.frame, f.frame, "lie_scalar");
  if (f.degree != 0) throw DegreeOverflow("lie_scalar: expects a zero-form");
  require_order(std::min(v.order, f.order), 1, "lie_scalar");
  Jet2 s = jet_const(0.0);
  for (int k = 0; k < 3; ++k) s = s + v.comp[k] * derivative_jet(f.comp[0], k);
  return scalar_form(f.frame, s, std::min(v.order, f.order) - 1);
}

KForm lie_oneform(const VecField& v, const KForm& w) {
  require_same_frame(v.frame, w.frame, "lie_oneform");
  if (w.degree != 1) throw DegreeOverflow("lie_oneform: expects a one-form");
  require_order(std::min(v.order, w.order), 1, "lie_oneform");
  const KForm a = interior_product(v, exterior_derivative(w));
  const KForm b = exterior_derivative(interior_product(v, w));
  std::array<Jet2, 3> c;
  for (int i = 0; i < 3; ++i) c[i] = a.comp[i] + b.comp[i];
  return one_form(w.frame, c, std::min(a.order, b.order));
}

KForm lie_oneform_coordinate(const VecField& v, const KForm& w) {
  require_same_frame(v.frame, w.frame, "lie_oneform_coordinate");
  if (w.degree != 1) throw DegreeOverflow("lie_oneform_coordinate: expects a one-form");
  require_order(std::min(v.order, w.order), 1, "lie_oneform_coordinate");
  std::array<Jet2, 3> c;
  for (int i = 0; i < 3; ++i) {
    Jet2 s = jet_const(0.0);
    for (int k = 0; k < 3; ++k)
      s = s + v.comp[k] * derivative_jet(w.comp[i], k) + w.comp[k] * derivative_jet(v.comp[k], i);
    c[i] = s;
  }
  return one_form(w.frame, c, std::min(v.order, w.order) - 1);
}

CovTensor2 lie_cov2(const VecField& v, const CovTensor2& t) {
  require_same_frame(v.frame, t.frame, "lie_cov2");
  require_order(std::min(v.order, t.order), 1, "lie_cov2");
  CovTensor2 r;
  r.frame = t.frame;
  r.order = std::min(v.order, t.order) - 1;
  r.symmetric = t.symmetric;
  for (int i = 0; i < 3; ++i)
    for (int j = t.symmetric ? i : 0; j < 3; ++j) {
      Jet2 s = jet_const(0.0);
      for (int k = 0; k < 3; ++k)
        s = s + v.comp[k] * derivative_jet(t.comp[i][j], k) +
            t.comp[k][j] * derivative_jet(v.comp[k], i) +
            t.comp[i][k] * derivative_jet(v.comp[k], j);
      r.comp[i][j] = s;
      if (t.symmetric) r.comp[j][i] = s;
    }
  return r;
}

CovTensor2 lie_cov2_product_rule(const VecField& v, const CovTensor2& t) {
  require_same_frame(v.frame, t.frame, "lie_cov2_product_rule");
  require_order(std::min(v.order, t.order), 1, "lie_cov2_product_rule");

  // L_v dx^i for the three basis covectors, via Cartan's formula.
  std::array<KForm, 3> lie_basis;
  for (int i = 0; i < 3; ++i) {
    std::array<Jet2, 3> e{};
    e[i] = jet_const(1.0);
    lie_basis[i] = lie_oneform(v, one_form(v.frame, e, 2));
  }

  CovTensor2 r;
  r.frame = t.frame;
  r.order = std::min(v.order, t.order) - 1;
  r.symmetric = false;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Jet2 s = lie_scalar(v, scalar_form(v.frame, t.comp[a][b], t.order)).comp[0];
      for (int i = 0; i < 3; ++i) {
        s = s + t.comp[i][b] * lie_basis[i].comp[a];
        s = s + t.comp[a][i] * lie_basis[i].comp[b];
      }
      r.comp[a][b] = s;
    }
  return r;
}

}  // namespace formelast
