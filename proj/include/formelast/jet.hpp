#pragma once

#include <array>
#include <cmath>
#include <limits>

#include "formelast/errors.hpp"

namespace formelast {

// Truncated second-order Taylor arithmetic. A jet carries the value of a
// scalar quantity together with its first and second partial derivatives
// with respect to the three chart coordinates of the evaluation point.
// The Hessian is packed as the upper triangle in row-major index order
// (00, 01, 02, 11, 12, 22), so symmetry is structural.
//
// The scalar type is a template parameter so jets can nest: evaluating a
// chart embedding with Jet2T<Jet2> scalars yields the embedding's third
// derivatives, which is where second metric derivatives come from without
// any hand-coded formulas.

inline constexpr double kSingularGuard = 1e-12;

inline constexpr int kHessIndex[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};

template <class T>
struct Jet2T {
  T v{};
  std::array<T, 3> g{};
  std::array<T, 6> h{};
};

using Jet2 = Jet2T<double>;
using NestedJet2 = Jet2T<Jet2>;

inline double value_of(double x) { return x; }

template <class T>
double value_of(const Jet2T<T>& a) {
  return value_of(a.v);
}

inline Jet2 jet_const(double c) {
  Jet2 r;
  r.v = c;
  return r;
}

inline Jet2 jet_coord(int axis, double x) {
  if (axis < 0 || axis > 2) throw OutOfDomain("jet_coord: axis out of range");
  Jet2 r;
  r.v = x;
  r.g[static_cast<std::size_t>(axis)] = 1.0;
  return r;
}

template <class T>
Jet2T<T> operator+(const Jet2T<T>& a, const Jet2T<T>& b) {
  Jet2T<T> r;
  r.v = a.v + b.v;
  for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] + b.g[i];
  for (int k = 0; k < 6; ++k) r.h[k] = a.h[k] + b.h[k];
  return r;
}

template <class T>
Jet2T<T> operator-(const Jet2T<T>& a, const Jet2T<T>& b) {
  Jet2T<T> r;
  r.v = a.v - b.v;
  for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] - b.g[i];
  for (int k = 0; k < 6; ++k) r.h[k] = a.h[k] - b.h[k];
  return r;
}

template <class T>
Jet2T<T> operator-(const Jet2T<T>& a) {
  Jet2T<T> r;
  r.v = -a.v;
  for (int i = 0; i < 3; ++i) r.g[i] = -a.g[i];
  for (int k = 0; k < 6; ++k) r.h[k] = -a.h[k];
  return r;
}

// Leibniz rule through both derivative orders.
template <class T>
Jet2T<T> operator*(const Jet2T<T>& a, const Jet2T<T>& b) {
  Jet2T<T> r;
  r.v = a.v * b.v;
  for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const int k = kHessIndex[i][j];
      r.h[k] = a.h[k] * b.v + a.g[i] * b.g[j] + a.g[j] * b.g[i] + a.v * b.h[k];
    }
  return r;
}

template <class T>
Jet2T<T> operator*(const Jet2T<T>& a, double c) {
  Jet2T<T> r;
  r.v = a.v * c;
  for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] * c;
  for (int k = 0; k < 6; ++k) r.h[k] = a.h[k] * c;
  return r;
}

template <class T>
Jet2T<T> operator*(double c, const Jet2T<T>& a) {
  return a * c;
}

template <class T>
Jet2T<T> operator+(const Jet2T<T>& a, double c) {
  Jet2T<T> r = a;
  r.v = a.v + c;
  return r;
}

template <class T>
Jet2T<T> operator+(double c, const Jet2T<T>& a) {
  return a + c;
}

template <class T>
Jet2T<T> operator-(const Jet2T<T>& a, double c) {
  return a + (-c);
}

// Composition with a scalar function given by f, f', f'' at the jet value.
template <class T>
Jet2T<T> jet_chain(const Jet2T<T>& a, const T& f0, const T& f1, const T& f2) {
  Jet2T<T> r;
  r.v = f0;
  for (int i = 0; i < 3; ++i) r.g[i] = f1 * a.g[i];
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const int k = kHessIndex[i][j];
      r.h[k] = f1 * a.h[k] + f2 * (a.g[i] * a.g[j]);
    }
  return r;
}

inline double recip(double x) { return 1.0 / x; }

template <class T>
Jet2T<T> recip(const Jet2T<T>& a) {
  if (!(std::abs(value_of(a)) > kSingularGuard))
    throw SingularJet("recip: jet value at or below singular guard");
  const T f0 = recip(a.v);
  const T f1 = -(f0 * f0);
  const T f2 = (f0 * f0 * f0) * 2.0;
  return jet_chain(a, f0, f1, f2);
}

template <class T>
Jet2T<T> sqrt(const Jet2T<T>& a) {
  if (!(value_of(a) > kSingularGuard))
    throw SingularJet("sqrt: jet value at or below singular guard");
  using std::sqrt;
  const T f0 = sqrt(a.v);
  const T f1 = recip(f0 * 2.0);
  const T f2 = -(f1 * recip(a.v)) * 0.5;
  return jet_chain(a, f0, f1, f2);
}

template <class T>
Jet2T<T> sin(const Jet2T<T>& a) {
  using std::cos;
  using std::sin;
  const T s = sin(a.v);
  const T c = cos(a.v);
  return jet_chain(a, s, c, -s);
}

template <class T>
Jet2T<T> cos(const Jet2T<T>& a) {
  using std::cos;
  using std::sin;
  const T s = sin(a.v);
  const T c = cos(a.v);
  return jet_chain(a, c, -s, -c);
}

template <class T>
Jet2T<T> operator/(const Jet2T<T>& a, const Jet2T<T>& b) {
  return a * recip(b);
}

template <class T>
Jet2T<T> operator/(const Jet2T<T>& a, double c) {
  return a * (1.0 / c);
}

// Shift a jet one derivative order down: the result carries d(a)/dq^axis
// with its gradient taken from a's Hessian. The Hessian channel of the
// result would need third derivatives, so it is poisoned with NaN; budget
// bookkeeping on forms keeps it from ever being read.
inline Jet2 derivative_jet(const Jet2& a, int axis) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  Jet2 r;
  r.v = a.g[static_cast<std::size_t>(axis)];
  for (int k = 0; k < 3; ++k) r.g[k] = a.h[kHessIndex[axis][k]];
  r.h = {nan, nan, nan, nan, nan, nan};
  return r;
}

// Channels valid at the given budget are finite.
inline bool jet_finite(const Jet2& a, int order) {
  if (!std::isfinite(a.v)) return false;
  if (order >= 1)
    for (int i = 0; i < 3; ++i)
      if (!std::isfinite(a.g[i])) return false;
  if (order >= 2)
    for (int k = 0; k < 6; ++k)
      if (!std::isfinite(a.h[k])) return false;
  return true;
}

}  // namespace formelast
