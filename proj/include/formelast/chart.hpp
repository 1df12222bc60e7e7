#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "formelast/jet.hpp"

namespace formelast {

using Point = std::array<double, 3>;

using JetTriple = std::array<Jet2, 3>;
using NestedJetTriple = std::array<NestedJet2, 3>;

// A curvilinear coordinate system on (a subset of) E^3, defined by its
// embedding into Cartesian coordinates. The embedding is evaluated in jet
// arithmetic, at two nesting depths:
//   embed        — plain 2-jets of the Cartesian coordinate functions,
//   embed_nested — Jet2T<Jet2> evaluation, whose gradient channels are the
//                  Jacobian columns as full 2-jets. This supplies third
//                  embedding derivatives, hence g_ij, g_ij,k and g_ij,kl.
class Chart {
 public:
  Chart(std::string name, std::optional<int> unit_radial = std::nullopt)
      : name_(std::move(name)), unit_radial_(unit_radial) {}
  virtual ~Chart() = default;

  const std::string& name() const { return name_; }

  // Index of a coordinate r with g_rr = 1 and g_r,other = 0 on the chart's
  // regular domain, when such a coordinate exists (cylindrical, spherical).
  std::optional<int> unit_radial() const { return unit_radial_; }

  virtual bool is_regular(const Point& q) const = 0;
  virtual JetTriple embed(const Point& q) const = 0;
  virtual NestedJetTriple embed_nested(const Point& q) const = 0;
  virtual Point from_cartesian(const Point& x) const = 0;

  Point to_cartesian(const Point& q) const;

 protected:
  static JetTriple coordinate_jets(const Point& q);
  static NestedJetTriple nested_coordinate_jets(const Point& q);

 private:
  std::string name_;
  std::optional<int> unit_radial_;
};

// Registry of named charts: the builtins (cartesian, cylindrical,
// spherical) plus extra presets. Throws ConfigError for unknown names.
const Chart& chart_by_name(const std::string& name);
std::vector<std::string> chart_names();

const Chart& cartesian_chart();
const Chart& cylindrical_chart();
const Chart& spherical_chart();

// Metric geometry of a chart at one regular point. The coefficient
// functions are held as jets so downstream operators can differentiate
// metric-dependent quantities without re-deriving anything:
//   g, g_inv, sqrt_det — full 2-jets (value, first and second derivatives),
//   gamma              — Christoffel symbols of the second kind as 1-jets
//                        (their Hessian channel is poisoned).
struct MetricAtPoint {
  const Chart* chart = nullptr;
  Point point{};

  std::array<std::array<Jet2, 3>, 3> g{};
  std::array<std::array<Jet2, 3>, 3> g_inv{};
  Jet2 sqrt_det{};
  std::array<std::array<std::array<Jet2, 3>, 3>, 3> gamma{};  // gamma[k][i][j] = Γ^k_ij

  double g_value(int i, int j) const { return g[i][j].v; }
  double g_inv_value(int i, int j) const { return g_inv[i][j].v; }
  double dg(int i, int j, int k) const { return g[i][j].g[static_cast<std::size_t>(k)]; }
  double d2g(int i, int j, int k, int l) const { return g[i][j].h[kHessIndex[k][l]]; }
  double sqrt_det_value() const { return sqrt_det.v; }
  double gamma_value(int k, int i, int j) const { return gamma[k][i][j].v; }
};

// Throws SingularPoint when the domain predicate fails or det g falls at or
// below the singular guard.
MetricAtPoint metric_at(const Chart& chart, const Point& p);

// Γ^k_ij = ½ g^km (g_im,j + g_jm,i − g_ij,m) evaluated from the plain
// metric data of m; gamma[k][i][j] layout, symmetric in (i, j).
std::array<std::array<std::array<double, 3>, 3>, 3> christoffel(const MetricAtPoint& m);

}  // namespace formelast
