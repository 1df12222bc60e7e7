#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "formelast/elasticity.hpp"
#include "formelast/forms.hpp"

namespace formelast::harness {

// Analytic displacement fields used as test vehicles: exact 2-jet closures
// over the points of a defining chart.

enum class FieldKind {
  Polynomial,
  RigidTranslation,
  RigidRotation,
  Dilation,
  LameSphere,
  LameCylinder,
  CustomPreset,
};

struct PolyTerm {
  int target_component = 0;        // 0..2, which vector component
  std::array<int, 3> exponents{};  // monomial powers, total degree <= 3
  double coefficient = 0.0;
};

struct FieldSpec {
  FieldKind kind = FieldKind::Polynomial;
  std::string chart = "cartesian";  // defining chart
  std::vector<PolyTerm> terms;      // Polynomial
  int axis = 0;                     // RigidTranslation / RigidRotation
  double a = 1.0, b = 2.0, p_i = 1.0;  // Lamé geometry and internal pressure
  double lambda = 1.0, mu = 1.0;       // Lamé moduli
  std::string preset;               // CustomPreset name
};

// Parse/serialize the structured-text representation:
// {"kind": ..., "chart": ..., "params": {...}}.
FieldSpec field_spec_from_json_text(const std::string& text);
std::string field_spec_to_json_text(const FieldSpec& spec);

struct DisplacementField {
  std::string name;
  const Chart* chart = nullptr;  // defining chart
  VecFieldFn components;         // exact 2-jets in the defining chart
};

// Throws InvalidSpec on bad parameters (degree > 3, a >= b, unknown preset,
// wrong defining chart for a kind).
DisplacementField make_field(const FieldSpec& spec);

// Evaluate in an arbitrary chart; pulls the field over when the chart is
// not the defining one.
VecField evaluate_field(const DisplacementField& field, const Chart& chart, const Point& p);

// The six rigid-motion generators (three translations, three rotations),
// defined in cartesian coordinates.
DisplacementField rigid_generator(int k);

// u_r = A r + B / r^2 for the pressurized thick-walled sphere with inner
// radius a, outer radius b, internal pressure p_i and traction-free outer
// surface; returns {A, B}.
std::array<double, 2> lame_sphere_constants(double a, double b, double p_i,
                                            const ElasticModuli& mod);

// u_r = A r + B / r (plane strain thick-walled cylinder), same conventions.
std::array<double, 2> lame_cylinder_constants(double a, double b, double p_i,
                                              const ElasticModuli& mod);

// Uniform coefficients in [-1, 1] over all monomials of total degree <= 3;
// deterministic for a fixed generator state.
DisplacementField random_polynomial_field(std::mt19937_64& rng, const Chart& chart,
                                          const std::string& name);

std::vector<std::string> custom_preset_names();

// Portable uniform double in [lo, hi) from a seeded generator; used
// everywhere randomness is needed so reports are reproducible across
// standard libraries.
double uniform_real(std::mt19937_64& rng, double lo, double hi);

// Evaluation points sampled from chart-specific boxes bounded away from
// the singular sets.
Point sample_regular_point(std::mt19937_64& rng, const Chart& chart);

}  // namespace formelast::harness
