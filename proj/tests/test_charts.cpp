#include <doctest.h>

#include <cmath>

#include "formelast/chart.hpp"
#include "formelast/forms.hpp"
#include "test_support.hpp"

using namespace formelast;
using namespace formelast::testing;

namespace {

const double kPi = std::acos(-1.0);

// Finite-difference metric from embedding values only: the independent
// oracle for the jet-derived metric.
double fd_metric(const Chart& chart, const Point& p, int i, int j, double h = 1e-5) {
  double s = 0.0;
  for (int a = 0; a < 3; ++a) {
    const auto fa = [&](const Point& q) { return chart.embed(q)[a].v; };
    s += fd_partial(fa, p, i, h) * fd_partial(fa, p, j, h);
  }
  return s;
}

}  // namespace

TEST_CASE("cartesian chart is the fixed point: g = I, dg = 0, gamma = 0") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Point p = random_regular_point(rng, cartesian_chart());
    const MetricAtPoint m = metric_at(cartesian_chart(), p);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(m.g_value(i, j) == (i == j ? 1.0 : 0.0));
        for (int k = 0; k < 3; ++k) {
          CHECK(m.dg(i, j, k) == 0.0);
          CHECK(m.gamma_value(k, i, j) == 0.0);
        }
      }
    CHECK(m.sqrt_det_value() == 1.0);
  }
}

TEST_CASE("cylindrical metric at r=2") {
  const MetricAtPoint m = metric_at(cylindrical_chart(), {2.0, 0.7, -0.3});
  CHECK(m.g_value(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(m.g_value(1, 1) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(m.g_value(2, 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(m.g_value(0, 1)) < 1e-14);
  CHECK(m.sqrt_det_value() == doctest::Approx(2.0).epsilon(1e-14));
  // g_theta_theta,r = 2r
  CHECK(m.dg(1, 1, 0) == doctest::Approx(4.0).epsilon(1e-13));
  // second derivative g_theta_theta,rr = 2
  CHECK(m.d2g(1, 1, 0, 0) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("spherical metric at r=1, theta=pi/2 is the identity") {
  const MetricAtPoint m = metric_at(spherical_chart(), {1.0, kPi / 2.0, 1.1});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(m.g_value(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-13));
  CHECK(m.sqrt_det_value() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("christoffel symbols: cylindrical and spherical closed forms") {
  {
    const MetricAtPoint m = metric_at(cylindrical_chart(), {2.0, 0.3, 1.0});
    const auto gamma = christoffel(m);
    CHECK(gamma[0][1][1] == doctest::Approx(-2.0).epsilon(1e-13));  // Γ^r_tt = -r
    CHECK(gamma[1][0][1] == doctest::Approx(0.5).epsilon(1e-13));   // Γ^t_rt = 1/r
    CHECK(gamma[1][1][0] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::abs(gamma[2][1][1]) < 1e-13);
    CHECK(std::abs(gamma[0][0][0]) < 1e-13);
  }
  {
    const MetricAtPoint m = metric_at(spherical_chart(), {1.0, kPi / 2.0, 0.4});
    const auto gamma = christoffel(m);
    CHECK(gamma[0][1][1] == doctest::Approx(-1.0).epsilon(1e-13));  // Γ^r_tt = -r
    CHECK(std::abs(gamma[1][2][2]) < 1e-13);                        // Γ^t_pp = -sin t cos t = 0
    CHECK(gamma[0][2][2] == doctest::Approx(-1.0).epsilon(1e-13));  // Γ^r_pp = -r sin^2 t
    CHECK(gamma[2][0][2] == doctest::Approx(1.0).epsilon(1e-13));   // Γ^p_rp = 1/r
  }
}

TEST_CASE("jet metric matches finite differences of the embedding") {
  std::mt19937_64 rng(37);
  for (const char* name : {"cartesian", "cylindrical", "spherical", "parabolic"}) {
    const Chart& chart = chart_by_name(name);
    for (int trial = 0; trial < 20; ++trial) {
      const Point p = random_regular_point(rng, chart);
      const MetricAtPoint m = metric_at(chart, p);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const double fd = fd_metric(chart, p, i, j);
          CHECK(std::abs(m.g_value(i, j) - fd) < 1e-6 * std::max(1.0, std::abs(fd)));
        }
    }
  }
}

TEST_CASE("dg and d2g match finite differences of the derived metric") {
  std::mt19937_64 rng(41);
  for (const char* name : {"cylindrical", "spherical", "parabolic"}) {
    const Chart& chart = chart_by_name(name);
    for (int trial = 0; trial < 5; ++trial) {
      const Point p = random_regular_point(rng, chart);
      const MetricAtPoint m = metric_at(chart, p);
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
          const auto gij = [&](const Point& q) { return metric_at(chart, q).g_value(i, j); };
          for (int k = 0; k < 3; ++k) {
            const double fd = fd_partial(gij, p, k);
            CHECK(std::abs(m.dg(i, j, k) - fd) < 1e-6 * std::max(1.0, std::abs(fd)));
            for (int l = k; l < 3; ++l) {
              const double fd2 = fd_partial2(gij, p, k, l);
              CHECK(std::abs(m.d2g(i, j, k, l) - fd2) < 1e-4 * std::max(1.0, std::abs(fd2)));
            }
          }
        }
    }
  }
}

TEST_CASE("metric invariants: symmetry, inverse, compatibility") {
  std::mt19937_64 rng(43);
  for (const char* name : {"cartesian", "cylindrical", "spherical", "parabolic"}) {
    const Chart& chart = chart_by_name(name);
    for (int trial = 0; trial < 20; ++trial) {
      const Point p = random_regular_point(rng, chart);
      const MetricAtPoint m = metric_at(chart, p);

      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          CHECK(m.g_value(i, j) == m.g_value(j, i));
          double id = 0.0;
          for (int k = 0; k < 3; ++k) id += m.g_inv_value(i, k) * m.g_value(k, j);
          CHECK(std::abs(id - (i == j ? 1.0 : 0.0)) < 1e-12);
          for (int k = 0; k < 3; ++k) {
            CHECK(m.dg(i, j, k) == m.dg(j, i, k));
            CHECK(m.gamma_value(k, i, j) == m.gamma_value(k, j, i));
            // metric compatibility g_ij,k = g_mj Γ^m_ik + g_im Γ^m_jk
            double s = m.dg(i, j, k);
            for (int mm = 0; mm < 3; ++mm)
              s -= m.g_value(mm, j) * m.gamma_value(mm, i, k) +
                   m.g_value(i, mm) * m.gamma_value(mm, j, k);
            CHECK(std::abs(s) < 1e-10);
          }
        }
    }
  }
}

TEST_CASE("to_cartesian / from_cartesian round trips") {
  CHECK(cylindrical_chart().to_cartesian({2.0, kPi / 2.0, 1.0})[0] ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(cylindrical_chart().to_cartesian({2.0, kPi / 2.0, 1.0})[1] ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(cylindrical_chart().to_cartesian({2.0, kPi / 2.0, 1.0})[2] == 1.0);

  std::mt19937_64 rng(47);
  for (const char* name : {"cylindrical", "spherical", "parabolic"}) {
    const Chart& chart = chart_by_name(name);
    for (int trial = 0; trial < 50; ++trial) {
      Point p = random_regular_point(rng, chart);
      // keep angles in the principal branch for exact round trips
      if (chart.name() == "cylindrical" || chart.name() == "spherical") {
        const int slot = chart.name() == "cylindrical" ? 1 : 2;
        p[slot] = uniform(rng, -3.0, 3.0);
      }
      const Point q = chart.from_cartesian(chart.to_cartesian(p));
      for (int i = 0; i < 3; ++i) CHECK(std::abs(q[i] - p[i]) < 1e-12);
    }
  }

  CHECK_THROWS_AS(cylindrical_chart().from_cartesian({0.0, 0.0, 1.0}), SingularPoint);
  CHECK_THROWS_AS(spherical_chart().from_cartesian({0.0, 0.0, 0.0}), SingularPoint);
  CHECK_THROWS_AS(spherical_chart().from_cartesian({0.0, 0.0, 2.0}), SingularPoint);
  CHECK_THROWS_AS(metric_at(cylindrical_chart(), {0.0, 0.0, 0.0}), SingularPoint);
}

TEST_CASE("registry knows the builtin charts and rejects unknown names") {
  CHECK(chart_by_name("cartesian").name() == "cartesian");
  CHECK(chart_by_name("parabolic").name() == "parabolic");
  CHECK_THROWS_AS(chart_by_name("toroidal"), ConfigError);
  CHECK(cylindrical_chart().unit_radial() == 0);
  CHECK(spherical_chart().unit_radial() == 0);
  CHECK_FALSE(cartesian_chart().unit_radial().has_value());
}

TEST_CASE("pullback: identity chart keeps components") {
  const auto field = [](const Point& p) -> std::array<Jet2, 3> {
    return {jet_coord(0, p[0]), jet_coord(1, p[1]), jet_coord(2, p[2])};
  };
  const Point p = {0.4, -0.2, 0.9};
  const VecField v = pullback_displacement(cartesian_chart(), cartesian_chart(), field, p);
  CHECK(v.value(0) == 0.4);
  CHECK(v.value(1) == -0.2);
  CHECK(v.comp[0].g[0] == 1.0);
}

TEST_CASE("pullback: cartesian dilation becomes the radial field in spherical") {
  const auto field = [](const Point& p) -> std::array<Jet2, 3> {
    return {jet_coord(0, p[0]), jet_coord(1, p[1]), jet_coord(2, p[2])};
  };
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const Point p = random_regular_point(rng, spherical_chart());
    const VecField v =
        pullback_displacement(cartesian_chart(), spherical_chart(), field, p);
    CHECK(v.value(0) == doctest::Approx(p[0]).epsilon(1e-12));
    CHECK(std::abs(v.value(1)) < 1e-12);
    CHECK(std::abs(v.value(2)) < 1e-12);
    CHECK(v.comp[0].g[0] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("pullback: rigid rotation becomes the angular field in cylindrical") {
  const auto field = [](const Point& p) -> std::array<Jet2, 3> {
    return {-jet_coord(1, p[1]), jet_coord(0, p[0]), jet_const(0.0)};
  };
  const Point p = {1.7, 0.8, -0.4};
  const VecField v =
      pullback_displacement(cartesian_chart(), cylindrical_chart(), field, p);
  CHECK(std::abs(v.value(0)) < 1e-13);
  CHECK(v.value(1) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(v.value(2)) < 1e-13);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(v.comp[1].g[k]) < 1e-13);
}

TEST_CASE("pullback: z-translation in spherical with hand-derived jets") {
  const auto field = [](const Point&) -> std::array<Jet2, 3> {
    return {jet_const(0.0), jet_const(0.0), jet_const(1.0)};
  };
  const Point p = {1.3, 0.9, 2.1};
  const double r = p[0], th = p[1];
  const VecField v = pullback_displacement(cartesian_chart(), spherical_chart(), field, p);
  // v = cos(theta) d/dr - sin(theta)/r d/dtheta
  CHECK(v.value(0) == doctest::Approx(std::cos(th)).epsilon(1e-13));
  CHECK(v.value(1) == doctest::Approx(-std::sin(th) / r).epsilon(1e-13));
  CHECK(std::abs(v.value(2)) < 1e-13);
  CHECK(v.comp[0].g[1] == doctest::Approx(-std::sin(th)).epsilon(1e-13));
  CHECK(v.comp[0].g[0] == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(v.comp[1].g[0] == doctest::Approx(std::sin(th) / (r * r)).epsilon(1e-13));
  CHECK(v.comp[1].g[1] == doctest::Approx(-std::cos(th) / r).epsilon(1e-13));
}

TEST_CASE("pullback pushes forward to the source's cartesian components") {
  // Cubic cartesian field, pulled into each curvilinear chart, pushed back
  // through the destination Jacobian.
  const auto field = [](const Point& p) -> std::array<Jet2, 3> {
    const Jet2 x = jet_coord(0, p[0]), y = jet_coord(1, p[1]), z = jet_coord(2, p[2]);
    return {x * y * z, x * x - y, z * z * x + 0.5};
  };
  std::mt19937_64 rng(59);
  for (const char* name : {"cylindrical", "spherical", "parabolic"}) {
    const Chart& chart = chart_by_name(name);
    for (int trial = 0; trial < 20; ++trial) {
      const Point p = random_regular_point(rng, chart);
      const VecField v = pullback_displacement(cartesian_chart(), chart, field, p);
      const Point x = chart.to_cartesian(p);
      const auto want = field(x);
      const NestedJetTriple phi = chart.embed_nested(p);
      for (int a = 0; a < 3; ++a) {
        double got = 0.0;
        for (int i = 0; i < 3; ++i) got += phi[a].g[i].v * v.value(i);
        CHECK(rel_err(got, want[a].v) < 1e-10);
      }
    }
  }
}

TEST_CASE("pullback between two curvilinear charts round-trips") {
  // Angular field defined in cylindrical coordinates, pulled to spherical
  // and back.
  const auto field = [](const Point& p) -> std::array<Jet2, 3> {
    const Jet2 r = jet_coord(0, p[0]), z = jet_coord(2, p[2]);
    return {r * z, jet_const(1.0) + z * z, r};
  };
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    Point p_cyl = random_regular_point(rng, cylindrical_chart());
    p_cyl[2] = uniform(rng, 0.5, 1.5);  // keep away from the spherical polar axis

    const Point x = cylindrical_chart().to_cartesian(p_cyl);
    const Point p_sph = spherical_chart().from_cartesian(x);
    const VecField in_sph =
        pullback_displacement(cylindrical_chart(), spherical_chart(), field, p_sph);

    // Evaluate the same associated spherical field back in cylindrical.
    const auto sph_field = [&](const Point& q) -> std::array<Jet2, 3> {
      return pullback_displacement(cylindrical_chart(), spherical_chart(), field, q).comp;
    };
    const VecField back =
        pullback_displacement(spherical_chart(), cylindrical_chart(), sph_field, p_cyl);
    const auto direct = field(p_cyl);
    for (int i = 0; i < 3; ++i) {
      CHECK(rel_err(back.value(i), direct[i].v) < 1e-10);
      for (int k = 0; k < 3; ++k)
        CHECK(std::abs(back.comp[i].g[k] - direct[i].g[k]) < 1e-9);
    }
    (void)in_sph;
  }
}
