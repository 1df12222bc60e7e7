#include <doctest.h>

#include <cmath>

#include "formelast/exterior.hpp"
#include "formelast/oracle.hpp"
#include "test_support.hpp"

using namespace formelast;
using namespace formelast::testing;

namespace {

const std::array<const char*, 3> kBuiltins = {"cartesian", "cylindrical", "spherical"};

}  // namespace

TEST_CASE("covariant derivative of a covector: cartesian is the plain partial") {
  const Point p = {0.8, -0.3, 0.5};
  const MetricAtPoint m = metric_at(cartesian_chart(), p);
  std::mt19937_64 rng(151);
  const KForm u = one_form(frame_of(m), random_polynomial_triple(rng, p));
  const CovTensor2 cd = oracle::cov_deriv_covector(m, u);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(cd.value(i, j) == doctest::Approx(u.comp[i].g[j]).epsilon(1e-14));
}

TEST_CASE("covariant derivative in cylindrical: u = dr gives u_(theta|theta) = r") {
  const MetricAtPoint m = metric_at(cylindrical_chart(), {1.7, 0.9, 0.0});
  std::array<Jet2, 3> c{};
  c[0] = jet_const(1.0);
  const CovTensor2 cd = oracle::cov_deriv_covector(m, one_form(frame_of(m), c));
  CHECK(cd.value(1, 1) == doctest::Approx(1.7).epsilon(1e-13));
  CHECK(std::abs(cd.value(0, 0)) < 1e-13);
}

TEST_CASE("classical gradient of x^2 + y^2 at (1,2,0)") {
  const Point p = {1.0, 2.0, 0.0};
  const MetricAtPoint m = metric_at(cartesian_chart(), p);
  const Jet2 x = jet_coord(0, p[0]), y = jet_coord(1, p[1]);
  const VecField g = oracle::grad_classical(m, scalar_form(frame_of(m), x * x + y * y));
  CHECK(g.value(0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(g.value(1) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(std::abs(g.value(2)) < 1e-14);
}

TEST_CASE("divergence of the dilation field is 3 in every chart") {
  const auto dil = [](const Point& q) -> std::array<Jet2, 3> {
    return {jet_coord(0, q[0]), jet_coord(1, q[1]), jet_coord(2, q[2])};
  };
  std::mt19937_64 rng(157);
  for (const char* name : kBuiltins) {
    const Chart& chart = chart_by_name(name);
    for (int trial = 0; trial < 10; ++trial) {
      const Point p = random_regular_point(rng, chart);
      const VecField v = pullback_displacement(cartesian_chart(), chart, dil, p);
      const MetricAtPoint m = metric_at(chart, p);
      CHECK(oracle::div_classical(m, v).value() == doctest::Approx(3.0).epsilon(1e-11));
    }
  }
}

TEST_CASE("curl of the rigid rotation is (0,0,2), also via the bridge") {
  const Point p = {0.6, 1.2, -0.8};
  const MetricAtPoint m = metric_at(cartesian_chart(), p);
  const FrameTag tag = frame_of(m);
  const std::array<Jet2, 3> rot = {-jet_coord(1, p[1]), jet_coord(0, p[0]), jet_const(0.0)};
  const VecField v = vec_field(tag, rot);

  const VecField c = oracle::curl_classical(m, v);
  CHECK(std::abs(c.value(0)) < 1e-14);
  CHECK(std::abs(c.value(1)) < 1e-14);
  CHECK(c.value(2) == doctest::Approx(2.0).epsilon(1e-14));

  const VecField cb = sharp(m, hodge_star(m, exterior_derivative(flat(m, v))));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(c.value(i) - cb.value(i)) < 1e-13);
}

TEST_CASE("vector laplacian: frozen cases") {
  const Point p = {0.9, 0.4, -0.2};
  const MetricAtPoint m = metric_at(cartesian_chart(), p);
  const FrameTag tag = frame_of(m);

  // linear field
  const std::array<Jet2, 3> lin = {jet_coord(1, p[1]), jet_coord(0, p[0]), jet_const(2.0)};
  const VecField l0 = oracle::vector_laplacian(m, vec_field(tag, lin));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(l0.value(i)) < 1e-13);

  // (x^2, 0, 0) -> (2, 0, 0)
  std::array<Jet2, 3> sq{};
  sq[0] = jet_coord(0, p[0]) * jet_coord(0, p[0]);
  const VecField l1 = oracle::vector_laplacian(m, vec_field(tag, sq));
  CHECK(l1.value(0) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(std::abs(l1.value(1)) < 1e-13);

  // gradient of the harmonic x^2 - y^2 stays harmonic
  const std::array<Jet2, 3> hg = {2.0 * jet_coord(0, p[0]), -2.0 * jet_coord(1, p[1]),
                                  jet_const(0.0)};
  const VecField l2 = oracle::vector_laplacian(m, vec_field(tag, hg));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(l2.value(i)) < 1e-13);
}

TEST_CASE("stress divergence of a constant tensor vanishes in cartesian") {
  const MetricAtPoint m = metric_at(cartesian_chart(), {0.2, 0.4, 0.6});
  CovTensor2 sigma;
  sigma.frame = frame_of(m);
  sigma.order = 2;
  sigma.symmetric = true;
  const double vals[3][3] = {{2.0, 0.5, -0.1}, {0.5, 1.0, 0.3}, {-0.1, 0.3, 4.0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sigma.comp[i][j] = jet_const(vals[i][j]);
  const KForm div = oracle::stress_divergence(m, sigma);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(div.value(i)) < 1e-14);
}

TEST_CASE("bridge lemma: exterior routes equal classical grad, div, curl") {
  std::mt19937_64 rng(163);
  for (const char* name : kBuiltins) {
    const Chart& chart = chart_by_name(name);
    for (int trial = 0; trial < 25; ++trial) {
      const Point p = random_regular_point(rng, chart);
      const MetricAtPoint m = metric_at(chart, p);
      const FrameTag tag = frame_of(m);

      // grad f = sharp(d f)
      const KForm f = scalar_form(tag, random_polynomial_jet(rng, p));
      const VecField g1 = oracle::grad_classical(m, f);
      const VecField g2 = sharp(m, exterior_derivative(f));
      CHECK(max_comp_diff(g1, g2) < 1e-9 * std::max(1.0, max_comp_abs(g1)));

      // div v = *d*(flat v)
      const VecField v = vec_field(tag, random_polynomial_triple(rng, p));
      const KForm u = flat(m, v);
      const double d1 = oracle::div_classical(m, v).value();
      const double d2 = hodge_star(m, exterior_derivative(hodge_star(m, u))).value();
      CHECK(std::abs(d1 - d2) < 1e-9 * std::max(1.0, std::abs(d1)));

      // curl v = sharp(*d(flat v))
      const VecField c1 = oracle::curl_classical(m, v);
      const VecField c2 = sharp(m, hodge_star(m, exterior_derivative(u)));
      CHECK(max_comp_diff(c1, c2) < 1e-9 * std::max(1.0, max_comp_abs(c1)));

      // codifferential anchor: delta u = -div(sharp u)
      const KForm du = codifferential(m, u);
      CHECK(std::abs(du.value() + d1) < 1e-9 * std::max(1.0, std::abs(d1)));
    }
  }
}

TEST_CASE("oracle operators enforce the derivative budget") {
  const Point p = {0.3, 0.3, 0.3};
  const MetricAtPoint m = metric_at(cartesian_chart(), p);
  std::mt19937_64 rng(167);
  const VecField v = vec_field(frame_of(m), random_polynomial_triple(rng, p));
  const VecField once = oracle::curl_classical(m, oracle::curl_classical(m, v));
  CHECK(once.order == 0);
  CHECK_THROWS_AS(oracle::curl_classical(m, once), DerivativeBudgetExceeded);
  CHECK_THROWS_AS(oracle::vector_laplacian(m, oracle::curl_classical(m, v)),
                  DerivativeBudgetExceeded);
}
