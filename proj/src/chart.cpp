#include "formelast/chart.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

namespace formelast {

namespace {

// Points closer to a singular set than this are rejected by the domain
// predicates; keeps det g comfortably above the jet singular guard.
constexpr double kRegularityMargin = 1e-6;

}  // namespace

Point Chart::to_cartesian(const Point& q) const {
  if (!is_regular(q)) throw SingularPoint(name() + ": point outside regular domain");
  const JetTriple phi = embed(q);
  return {phi[0].v, phi[1].v, phi[2].v};
}

JetTriple Chart::coordinate_jets(const Point& q) {
  return {jet_coord(0, q[0]), jet_coord(1, q[1]), jet_coord(2, q[2])};
}

NestedJetTriple Chart::nested_coordinate_jets(const Point& q) {
  NestedJetTriple s;
  for (int i = 0; i < 3; ++i) {
    s[i].v = jet_coord(i, q[i]);
    s[i].g[i] = jet_const(1.0);
  }
  return s;
}

namespace {

struct CartesianChart final : Chart {
  CartesianChart() : Chart("cartesian") {}

  template <class T>
  static std::array<T, 3> map(const std::array<T, 3>& q) {
    return q;
  }

  bool is_regular(const Point&) const override { return true; }
  JetTriple embed(const Point& q) const override { return map(coordinate_jets(q)); }
  NestedJetTriple embed_nested(const Point& q) const override {
    return map(nested_coordinate_jets(q));
  }
  Point from_cartesian(const Point& x) const override { return x; }
};

// (r, theta, z) -> (r cos theta, r sin theta, z), r > 0.
struct CylindricalChart final : Chart {
  CylindricalChart() : Chart("cylindrical", 0) {}

  template <class T>
  static std::array<T, 3> map(const std::array<T, 3>& q) {
    return {q[0] * cos(q[1]), q[0] * sin(q[1]), q[2]};
  }

  bool is_regular(const Point& q) const override { return q[0] > kRegularityMargin; }
  JetTriple embed(const Point& q) const override { return map(coordinate_jets(q)); }
  NestedJetTriple embed_nested(const Point& q) const override {
    return map(nested_coordinate_jets(q));
  }
  Point from_cartesian(const Point& x) const override {
    const double r = std::hypot(x[0], x[1]);
    if (!(r > kRegularityMargin))
      throw SingularPoint("cylindrical: point on the coordinate axis");
    return {r, std::atan2(x[1], x[0]), x[2]};
  }
};

// (r, theta, phi) with polar angle theta in (0, pi):
// (r sin theta cos phi, r sin theta sin phi, r cos theta), r > 0.
struct SphericalChart final : Chart {
  SphericalChart() : Chart("spherical", 0) {}

  template <class T>
  static std::array<T, 3> map(const std::array<T, 3>& q) {
    const T st = sin(q[1]);
    return {q[0] * st * cos(q[2]), q[0] * st * sin(q[2]), q[0] * cos(q[1])};
  }

  bool is_regular(const Point& q) const override {
    return q[0] > kRegularityMargin && q[1] > 0.0 && q[1] < std::acos(-1.0) &&
           std::sin(q[1]) > kRegularityMargin;
  }
  JetTriple embed(const Point& q) const override { return map(coordinate_jets(q)); }
  NestedJetTriple embed_nested(const Point& q) const override {
    return map(nested_coordinate_jets(q));
  }
  Point from_cartesian(const Point& x) const override {
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    const double rho = std::hypot(x[0], x[1]);
    if (!(r > kRegularityMargin) || !(rho > kRegularityMargin))
      throw SingularPoint("spherical: point at origin or on the polar axis");
    return {r, std::acos(std::clamp(x[2] / r, -1.0, 1.0)), std::atan2(x[1], x[0])};
  }
};

// Parabolic cylindrical preset: (u, w, z) -> ((u^2 - w^2)/2, u w, z) with
// w > 0; exercises the custom-chart path with a non-orthonormal frame.
struct ParabolicChart final : Chart {
  ParabolicChart() : Chart("parabolic") {}

  template <class T>
  static std::array<T, 3> map(const std::array<T, 3>& q) {
    return {(q[0] * q[0] - q[1] * q[1]) * 0.5, q[0] * q[1], q[2]};
  }

  bool is_regular(const Point& q) const override {
    return q[1] > kRegularityMargin &&
           q[0] * q[0] + q[1] * q[1] > kRegularityMargin;
  }
  JetTriple embed(const Point& q) const override { return map(coordinate_jets(q)); }
  NestedJetTriple embed_nested(const Point& q) const override {
    return map(nested_coordinate_jets(q));
  }
  Point from_cartesian(const Point& x) const override {
    const double r = std::hypot(x[0], x[1]);
    const double w = std::sqrt(std::max(r - x[0], 0.0));
    if (!(w > kRegularityMargin))
      throw OutOfDomain("parabolic: point on the w = 0 half-plane");
    const double u = x[1] / w;
    return {u, w, x[2]};
  }
};

}  // namespace

const Chart& cartesian_chart() {
  static const CartesianChart c;
  return c;
}

const Chart& cylindrical_chart() {
  static const CylindricalChart c;
  return c;
}

const Chart& spherical_chart() {
  static const SphericalChart c;
  return c;
}

namespace {

const std::map<std::string, const Chart*>& registry() {
  static const ParabolicChart parabolic;
  static const std::map<std::string, const Chart*> reg = {
      {"cartesian", &cartesian_chart()},
      {"cylindrical", &cylindrical_chart()},
      {"spherical", &spherical_chart()},
      {"parabolic", &parabolic},
  };
  return reg;
}

}  // namespace

const Chart& chart_by_name(const std::string& name) {
  const auto& reg = registry();
  const auto it = reg.find(name);
  if (it == reg.end()) throw ConfigError("unknown chart: " + name);
  return *it->second;
}

std::vector<std::string> chart_names() {
  std::vector<std::string> names;
  for (const auto& [name, chart] : registry()) names.push_back(name);
  return names;
}

namespace {

Jet2 det3(const std::array<std::array<Jet2, 3>, 3>& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

}  // namespace

MetricAtPoint metric_at(const Chart& chart, const Point& p) {
  if (!chart.is_regular(p))
    throw SingularPoint(chart.name() + ": point outside regular domain");

  const NestedJetTriple phi = chart.embed_nested(p);

  // Jacobian columns as full 2-jets of position.
  std::array<std::array<Jet2, 3>, 3> jac;  // jac[a][i] = d(phi^a)/dq^i
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 3; ++i) jac[a][i] = phi[a].g[i];

  MetricAtPoint m;
  m.chart = &chart;
  m.point = p;

  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Jet2 s = jet_const(0.0);
      for (int a = 0; a < 3; ++a) s = s + jac[a][i] * jac[a][j];
      m.g[i][j] = s;
      m.g[j][i] = s;
    }

  const Jet2 det = det3(m.g);
  if (!(det.v > kSingularGuard))
    throw SingularPoint(chart.name() + ": metric determinant at or below guard");
  m.sqrt_det = sqrt(det);

  const Jet2 inv_det = recip(det);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      // Cofactor of entry (j, i); g is symmetric so this is the (i, j)
      // entry of the inverse.
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      const Jet2 cof = m.g[r0][c0] * m.g[r1][c1] - m.g[r0][c1] * m.g[r1][c0];
      const Jet2 entry = cof * inv_det;
      m.g_inv[i][j] = entry;
      m.g_inv[j][i] = entry;
    }

  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        Jet2 s = jet_const(0.0);
        for (int mm = 0; mm < 3; ++mm) {
          const Jet2 dsum = derivative_jet(m.g[i][mm], j) + derivative_jet(m.g[j][mm], i) -
                            derivative_jet(m.g[i][j], mm);
          s = s + m.g_inv[k][mm] * dsum;
        }
        s = s * 0.5;
        m.gamma[k][i][j] = s;
        m.gamma[k][j][i] = s;
      }

  return m;
}

std::array<std::array<std::array<double, 3>, 3>, 3> christoffel(const MetricAtPoint& m) {
  std::array<std::array<std::array<double, 3>, 3>, 3> out{};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        double s = 0.0;
        for (int mm = 0; mm < 3; ++mm)
          s += m.g_inv_value(k, mm) * (m.dg(i, mm, j) + m.dg(j, mm, i) - m.dg(i, j, mm));
        s *= 0.5;
        out[k][i][j] = s;
        out[k][j][i] = s;
      }
  return out;
}

}  // namespace formelast
