#include "formelast/forms.hpp"

#include <cmath>
#include <string>

namespace formelast {

void require_same_frame(const FrameTag& a, const FrameTag& b, const char* op) {
  if (!(a == b)) throw TagMismatch(std::string(op) + ": operands evaluated in different frames");
}

KForm scalar_form(const FrameTag& frame, const Jet2& f, int order) {
  KForm w;
  w.degree = 0;
  w.order = order;
  w.frame = frame;
  w.comp[0] = f;
  return w;
}

KForm one_form(const FrameTag& frame, const std::array<Jet2, 3>& c, int order) {
  KForm w;
  w.degree = 1;
  w.order = order;
  w.frame = frame;
  w.comp = c;
  return w;
}

KForm two_form(const FrameTag& frame, const std::array<Jet2, 3>& c, int order) {
  KForm w;
  w.degree = 2;
  w.order = order;
  w.frame = frame;
  w.comp = c;
  return w;
}

KForm three_form(const FrameTag& frame, const Jet2& c, int order) {
  KForm w;
  w.degree = 3;
  w.order = order;
  w.frame = frame;
  w.comp[0] = c;
  return w;
}

VecField vec_field(const FrameTag& frame, const std::array<Jet2, 3>& c, int order) {
  VecField v;
  v.order = order;
  v.frame = frame;
  v.comp = c;
  return v;
}

CovTensor2 metric_tensor(const MetricAtPoint& m) {
  CovTensor2 t;
  t.order = 2;
  t.symmetric = true;
  t.frame = frame_of(m);
  t.comp = m.g;
  return t;
}

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 invert3(const Mat3& a, const char* what) {
  const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                     a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                     a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (!(std::abs(det) > kSingularGuard))
    throw SingularPoint(std::string(what) + ": Jacobian not invertible");
  Mat3 inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) / det;
    }
  return inv;
}

std::array<std::array<Jet2, 3>, 3> invert3_jets(const std::array<std::array<Jet2, 3>, 3>& a,
                                                const char* what) {
  const Jet2 det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                   a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                   a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (!(std::abs(det.v) > kSingularGuard))
    throw SingularPoint(std::string(what) + ": Jacobian not invertible");
  const Jet2 inv_det = recip(det);
  std::array<std::array<Jet2, 3>, 3> inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) * inv_det;
    }
  return inv;
}

// Chain-rule composition of a source-coordinate jet through the transition
// map, given its Jacobian t[i][alpha] and Hessian t2[i][alpha][beta].
Jet2 compose_through(const Jet2& f, const Mat3& t,
                     const std::array<std::array<std::array<double, 3>, 3>, 3>& t2) {
  Jet2 r;
  r.v = f.v;
  for (int al = 0; al < 3; ++al) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) s += f.g[i] * t[i][al];
    r.g[al] = s;
  }
  for (int al = 0; al < 3; ++al)
    for (int be = al; be < 3; ++be) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) s += f.h[kHessIndex[i][j]] * t[i][al] * t[j][be];
        s += f.g[i] * t2[i][al][be];
      }
      r.h[kHessIndex[al][be]] = s;
    }
  return r;
}

}  // namespace

VecField pullback_displacement(const Chart& src, const Chart& dst, const VecFieldFn& field,
                               const Point& p_dst) {
  if (&src == &dst) {
    if (!dst.is_regular(p_dst))
      throw SingularPoint(dst.name() + ": point outside regular domain");
    return vec_field({&dst, p_dst}, field(p_dst), 2);
  }

  const Point x = dst.to_cartesian(p_dst);
  const Point p_src = src.from_cartesian(x);
  if (!src.is_regular(p_src))
    throw SingularPoint(src.name() + ": corresponding point outside regular domain");

  const NestedJetTriple phi_s = src.embed_nested(p_src);
  const NestedJetTriple phi_d = dst.embed_nested(p_dst);

  // Jacobian columns of both embeddings, as full 2-jets of position.
  std::array<std::array<Jet2, 3>, 3> js_jet, jd_jet;
  Mat3 js_val, jd_val;
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 3; ++i) {
      js_jet[a][i] = phi_s[a].g[i];
      jd_jet[a][i] = phi_d[a].g[i];
      js_val[a][i] = phi_s[a].g[i].v;
      jd_val[a][i] = phi_d[a].g[i].v;
    }
  const Mat3 js_inv = invert3(js_val, src.name().c_str());

  // Transition map psi = src^-1 ∘ dst: first derivatives from Js^-1 Jd,
  // second derivatives implicitly from Phi_s(psi(q)) = Phi_d(q).
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int al = 0; al < 3; ++al) {
      double s = 0.0;
      for (int a = 0; a < 3; ++a) s += js_inv[i][a] * jd_val[a][al];
      t[i][al] = s;
    }
  std::array<std::array<std::array<double, 3>, 3>, 3> t2{};
  for (int i = 0; i < 3; ++i)
    for (int al = 0; al < 3; ++al)
      for (int be = 0; be < 3; ++be) {
        double s = 0.0;
        for (int a = 0; a < 3; ++a) {
          double hs = 0.0;
          for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l)
              hs += phi_s[a].v.h[kHessIndex[k][l]] * t[k][al] * t[l][be];
          s += js_inv[i][a] * (phi_d[a].v.h[kHessIndex[al][be]] - hs);
        }
        t2[i][al][be] = s;
      }

  const std::array<Jet2, 3> v_src = field(p_src);

  // Cartesian components as source-coordinate jets, then composed into
  // destination-coordinate jets.
  std::array<Jet2, 3> v_cart;
  for (int a = 0; a < 3; ++a) {
    Jet2 s = jet_const(0.0);
    for (int i = 0; i < 3; ++i) s = s + js_jet[a][i] * v_src[i];
    v_cart[a] = compose_through(s, t, t2);
  }

  const auto jd_inv_jet = invert3_jets(jd_jet, dst.name().c_str());
  std::array<Jet2, 3> v_dst;
  for (int al = 0; al < 3; ++al) {
    Jet2 s = jet_const(0.0);
    for (int a = 0; a < 3; ++a) s = s + jd_inv_jet[al][a] * v_cart[a];
    v_dst[al] = s;
  }

  return vec_field({&dst, p_dst}, v_dst, 2);
}

}  // namespace formelast
