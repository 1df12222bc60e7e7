#include "formelast/exterior.hpp"

#include <algorithm>
#include <string>

namespace formelast {

namespace {

void require_order(int order, int needed, const char* op) {
  if (order < needed)
    throw DerivativeBudgetExceeded(std::string(op) + ": derivative budget exhausted");
}

int clamp_order(int order) { return std::min(order, 2); }

}  // namespace

KForm flat(const MetricAtPoint& m, const VecField& v) {
  require_same_frame(frame_of(m), v.frame, "flat");
  std::array<Jet2, 3> c;
  for (int i = 0; i < 3; ++i) {
    Jet2 s = jet_const(0.0);
    for (int j = 0; j < 3; ++j) s = s + m.g[i][j] * v.comp[j];
    c[i] = s;
  }
  return one_form(v.frame, c, clamp_order(v.order));
}

VecField sharp(const MetricAtPoint& m, const KForm& w) {
  require_same_frame(frame_of(m), w.frame, "sharp");
  if (w.degree != 1) throw DegreeOverflow("sharp: expects a one-form");
  std::array<Jet2, 3> c;
  for (int i = 0; i < 3; ++i) {
    Jet2 s = jet_const(0.0);
    for (int j = 0; j < 3; ++j) s = s + m.g_inv[i][j] * w.comp[j];
    c[i] = s;
  }
  return vec_field(w.frame, c, clamp_order(w.order));
}

KForm exterior_derivative(const KForm& w) {
  require_order(w.order, 1, "exterior_derivative");
  const int out_order = w.order - 1;
  switch (w.degree) {
    case 0: {
      std::array<Jet2, 3> c;
      for (int i = 0; i < 3; ++i) c[i] = derivative_jet(w.comp[0], i);
      return one_form(w.frame, c, out_order);
    }
    case 1: {
      std::array<Jet2, 3> c;
      c[0] = derivative_jet(w.comp[2], 1) - derivative_jet(w.comp[1], 2);
      c[1] = derivative_jet(w.comp[0], 2) - derivative_jet(w.comp[2], 0);
      c[2] = derivative_jet(w.comp[1], 0) - derivative_jet(w.comp[0], 1);
      return two_form(w.frame, c, out_order);
    }
    case 2: {
      const Jet2 c = derivative_jet(w.comp[0], 0) + derivative_jet(w.comp[1], 1) +
                     derivative_jet(w.comp[2], 2);
      return three_form(w.frame, c, out_order);
    }
    default:
      throw DegreeOverflow("exterior_derivative: no degree-4 forms on E^3");
  }
}

KForm hodge_star(const MetricAtPoint& m, const KForm& w) {
  require_same_frame(frame_of(m), w.frame, "hodge_star");
  const int out_order = clamp_order(w.order);
  switch (w.degree) {
    case 0:
      return three_form(w.frame, m.sqrt_det * w.comp[0], out_order);
    case 3:
      return scalar_form(w.frame, recip(m.sqrt_det) * w.comp[0], out_order);
    case 1: {
      // *w = interior product of w-sharp with the volume form:
      // slot a gets sqrt(det g) g^{ab} w_b.
      std::array<Jet2, 3> c;
      for (int a = 0; a < 3; ++a) {
        Jet2 s = jet_const(0.0);
        for (int b = 0; b < 3; ++b) s = s + m.g_inv[a][b] * w.comp[b];
        c[a] = m.sqrt_det * s;
      }
      return two_form(w.frame, c, out_order);
    }
    case 2: {
      const Jet2 inv_sd = recip(m.sqrt_det);
      std::array<Jet2, 3> c;
      for (int i = 0; i < 3; ++i) {
        Jet2 s = jet_const(0.0);
        for (int a = 0; a < 3; ++a) s = s + m.g[i][a] * w.comp[a];
        c[i] = inv_sd * s;
      }
      return one_form(w.frame, c, out_order);
    }
    default:
      throw DegreeOverflow("hodge_star: invalid degree");
  }
}

KForm codifferential(const MetricAtPoint& m, const KForm& w) {
  if (w.degree < 1 || w.degree > 3)
    throw DegreeOverflow("codifferential: expects degree 1, 2 or 3");
  require_order(w.order, 1, "codifferential");
  const KForm sds = hodge_star(m, exterior_derivative(hodge_star(m, w)));
  if (w.degree == 2) return sds;
  KForm r = sds;
  for (int i = 0; i < r.component_count(); ++i) r.comp[i] = -r.comp[i];
  return r;
}

KForm wedge(const KForm& a, const KForm& b) {
  require_same_frame(a.frame, b.frame, "wedge");
  const int deg = a.degree + b.degree;
  if (deg > 3) throw DegreeOverflow("wedge: total degree exceeds 3");
  const int order = std::min(a.order, b.order);

  if (a.degree == 0) {
    KForm r = b;
    r.order = order;
    for (int i = 0; i < r.component_count(); ++i) r.comp[i] = a.comp[0] * b.comp[i];
    return r;
  }
  if (b.degree == 0) return wedge(b, a);

  if (a.degree == 1 && b.degree == 1) {
    std::array<Jet2, 3> c;
    c[0] = a.comp[1] * b.comp[2] - a.comp[2] * b.comp[1];
    c[1] = a.comp[2] * b.comp[0] - a.comp[0] * b.comp[2];
    c[2] = a.comp[0] * b.comp[1] - a.comp[1] * b.comp[0];
    return two_form(a.frame, c, order);
  }
  // (1,2) and (2,1): dx^i wedge (2-form slot i) = volume form, cross slots
  // vanish, and the grading sign for (2,1) is +1.
  const KForm& one = (a.degree == 1) ? a : b;
  const KForm& two = (a.degree == 1) ? b : a;
  Jet2 s = jet_const(0.0);
  for (int i = 0; i < 3; ++i) s = s + one.comp[i] * two.comp[i];
  return three_form(a.frame, s, order);
}

KForm interior_product(const VecField& v, const KForm& w) {
  require_same_frame(v.frame, w.frame, "interior_product");
  if (w.degree < 1) throw DegreeOverflow("interior_product: expects degree >= 1");
  const int order = std::min(v.order, w.order);
  switch (w.degree) {
    case 1: {
      Jet2 s = jet_const(0.0);
      for (int i = 0; i < 3; ++i) s = s + v.comp[i] * w.comp[i];
      return scalar_form(w.frame, s, order);
    }
    case 2: {
      std::array<Jet2, 3> c;
      c[0] = w.comp[1] * v.comp[2] - w.comp[2] * v.comp[1];
      c[1] = w.comp[2] * v.comp[0] - w.comp[0] * v.comp[2];
      c[2] = w.comp[0] * v.comp[1] - w.comp[1] * v.comp[0];
      return one_form(w.frame, c, order);
    }
    case 3: {
      std::array<Jet2, 3> c;
      for (int i = 0; i < 3; ++i) c[i] = w.comp[0] * v.comp[i];
      return two_form(w.frame, c, order);
    }
    default:
      throw DegreeOverflow("interior_product: invalid degree");
  }
}

}  // namespace formelast
