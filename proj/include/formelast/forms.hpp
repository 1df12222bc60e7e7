#pragma once

#include <array>
#include <functional>

#include "formelast/chart.hpp"

namespace formelast {

// Chart + evaluation point shared by every pointwise object. Binary
// operations require identical frames.
struct FrameTag {
  const Chart* chart = nullptr;
  Point point{};
};

inline bool operator==(const FrameTag& a, const FrameTag& b) {
  return a.chart == b.chart && a.point == b.point;
}

void require_same_frame(const FrameTag& a, const FrameTag& b, const char* op);

inline FrameTag frame_of(const MetricAtPoint& m) { return {m.chart, m.point}; }

// Differential k-form at a point, components as jets in the coordinate
// co-basis. Storage order:
//   degree 0: comp[0]
//   degree 1: (dx1, dx2, dx3)
//   degree 2: (dx2^dx3, dx3^dx1, dx1^dx2)
//   degree 3: comp[0] carries the dx1^dx2^dx3 coefficient.
// `order` is the derivative budget: how many jet orders remain valid.
// The exterior derivative consumes one; channels above the budget are
// NaN-poisoned and never read by in-budget operations.
struct KForm {
  int degree = 0;
  int order = 2;
  FrameTag frame{};
  std::array<Jet2, 3> comp{};

  int component_count() const { return (degree == 0 || degree == 3) ? 1 : 3; }
  double value(int slot = 0) const { return comp[static_cast<std::size_t>(slot)].v; }
};

KForm scalar_form(const FrameTag& frame, const Jet2& f, int order = 2);
KForm one_form(const FrameTag& frame, const std::array<Jet2, 3>& c, int order = 2);
KForm two_form(const FrameTag& frame, const std::array<Jet2, 3>& c, int order = 2);
KForm three_form(const FrameTag& frame, const Jet2& c, int order = 2);

// Contravariant vector field at a point, components in the coordinate
// basis (d/dx1, d/dx2, d/dx3).
struct VecField {
  int order = 2;
  FrameTag frame{};
  std::array<Jet2, 3> comp{};

  double value(int slot) const { return comp[static_cast<std::size_t>(slot)].v; }
};

VecField vec_field(const FrameTag& frame, const std::array<Jet2, 3>& c, int order = 2);

// Covariant rank-2 tensor at a point (houses g, strain, stress).
struct CovTensor2 {
  int order = 2;
  bool symmetric = false;
  FrameTag frame{};
  std::array<std::array<Jet2, 3>, 3> comp{};

  double value(int i, int j) const { return comp[i][j].v; }
};

// The metric as a symmetric CovTensor2 with full 2-jet components.
CovTensor2 metric_tensor(const MetricAtPoint& m);

// Displacement field closure: chart point -> component jets in that
// chart's coordinate basis, exact through second order.
using VecFieldFn = std::function<std::array<Jet2, 3>(const Point&)>;

// Represents the displacement field given by `field` on chart `src` as a
// vector field on chart `dst` at the point p_dst, with all jet channels
// transformed through the chain rule (the transition map's first and
// second derivatives are recovered from the two embeddings).
VecField pullback_displacement(const Chart& src, const Chart& dst, const VecFieldFn& field,
                               const Point& p_dst);

}  // namespace formelast
