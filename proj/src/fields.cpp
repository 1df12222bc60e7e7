#include "formelast/fields.hpp"

#include <cmath>
#include <map>

#include <json.hpp>

namespace formelast::harness {

using nlohmann::json;

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Point sample_regular_point(std::mt19937_64& rng, const Chart& chart) {
  const double pi = std::acos(-1.0);
  const std::string& n = chart.name();
  if (n == "cylindrical")
    return {uniform_real(rng, 0.5, 3.0), uniform_real(rng, 0.0, 2.0 * pi),
            uniform_real(rng, -1.5, 1.5)};
  if (n == "spherical")
    return {uniform_real(rng, 0.5, 3.0), uniform_real(rng, 0.4, pi - 0.4),
            uniform_real(rng, 0.0, 2.0 * pi)};
  if (n == "parabolic")
    return {uniform_real(rng, -2.0, 2.0), uniform_real(rng, 0.5, 2.0),
            uniform_real(rng, -1.5, 1.5)};
  return {uniform_real(rng, -1.5, 1.5), uniform_real(rng, -1.5, 1.5),
          uniform_real(rng, -1.5, 1.5)};
}

namespace {

Jet2 jet_pow(const Jet2& a, int n) {
  Jet2 r = jet_const(1.0);
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

std::array<Jet2, 3> eval_polynomial(const std::vector<PolyTerm>& terms, const Point& p) {
  const Jet2 q[3] = {jet_coord(0, p[0]), jet_coord(1, p[1]), jet_coord(2, p[2])};
  std::array<Jet2, 3> out = {jet_const(0.0), jet_const(0.0), jet_const(0.0)};
  for (const PolyTerm& t : terms) {
    Jet2 mono = jet_const(t.coefficient);
    for (int i = 0; i < 3; ++i) mono = mono * jet_pow(q[i], t.exponents[i]);
    out[t.target_component] = out[t.target_component] + mono;
  }
  return out;
}

std::array<Jet2, 3> rigid_components(int k, const Point& p) {
  const Jet2 x = jet_coord(0, p[0]), y = jet_coord(1, p[1]), z = jet_coord(2, p[2]);
  switch (k) {
    case 0: return {jet_const(1.0), jet_const(0.0), jet_const(0.0)};
    case 1: return {jet_const(0.0), jet_const(1.0), jet_const(0.0)};
    case 2: return {jet_const(0.0), jet_const(0.0), jet_const(1.0)};
    case 3: return {jet_const(0.0), -z, y};
    case 4: return {z, jet_const(0.0), -x};
    default: return {-y, x, jet_const(0.0)};
  }
}

// Named analytic presets beyond the enumerated kinds.
const std::map<std::string, std::pair<std::string, VecFieldFn>>& presets() {
  static const std::map<std::string, std::pair<std::string, VecFieldFn>> reg = {
      // gradient of the harmonic potential x^2 - y^2
      {"harmonic_gradient",
       {"cartesian",
        [](const Point& p) -> std::array<Jet2, 3> {
          return {2.0 * jet_coord(0, p[0]), -2.0 * jet_coord(1, p[1]), jet_const(0.0)};
        }}},
      // curl of (0, 0, x y): divergence-free with harmonic stream function
      {"harmonic_curl",
       {"cartesian",
        [](const Point& p) -> std::array<Jet2, 3> {
          return {jet_coord(0, p[0]), -jet_coord(1, p[1]), jet_const(0.0)};
        }}},
      // simple shear in the x-y plane
      {"shear_xy",
       {"cartesian",
        [](const Point& p) -> std::array<Jet2, 3> {
          return {jet_coord(1, p[1]), jet_const(0.0), jet_const(0.0)};
        }}},
      // non-polynomial smooth field for eval demonstrations
      {"sine_axial",
       {"cartesian",
        [](const Point& p) -> std::array<Jet2, 3> {
          return {sin(jet_coord(1, p[1])), jet_const(0.0), cos(jet_coord(0, p[0]))};
        }}},
  };
  return reg;
}

FieldKind kind_from_string(const std::string& s) {
  if (s == "polynomial") return FieldKind::Polynomial;
  if (s == "rigid_translation") return FieldKind::RigidTranslation;
  if (s == "rigid_rotation") return FieldKind::RigidRotation;
  if (s == "dilation") return FieldKind::Dilation;
  if (s == "lame_sphere") return FieldKind::LameSphere;
  if (s == "lame_cylinder") return FieldKind::LameCylinder;
  if (s == "custom_preset") return FieldKind::CustomPreset;
  throw InvalidSpec("unknown field kind: " + s);
}

std::string kind_to_string(FieldKind k) {
  switch (k) {
    case FieldKind::Polynomial: return "polynomial";
    case FieldKind::RigidTranslation: return "rigid_translation";
    case FieldKind::RigidRotation: return "rigid_rotation";
    case FieldKind::Dilation: return "dilation";
    case FieldKind::LameSphere: return "lame_sphere";
    case FieldKind::LameCylinder: return "lame_cylinder";
    case FieldKind::CustomPreset: return "custom_preset";
  }
  return "polynomial";
}

}  // namespace

FieldSpec field_spec_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("field spec is not valid JSON: ") + e.what());
  }
  FieldSpec spec;
  if (!j.contains("kind")) throw InvalidSpec("field spec missing \"kind\"");
  spec.kind = kind_from_string(j.at("kind").get<std::string>());
  spec.chart = j.value("chart", std::string("cartesian"));
  const json params = j.value("params", json::object());
  switch (spec.kind) {
    case FieldKind::Polynomial: {
      if (!params.contains("terms")) throw InvalidSpec("polynomial spec missing params.terms");
      for (const auto& t : params.at("terms")) {
        PolyTerm term;
        term.target_component = t.at("target_component").get<int>();
        const auto e = t.at("exponents");
        for (int i = 0; i < 3; ++i) term.exponents[i] = e.at(i).get<int>();
        term.coefficient = t.at("coefficient").get<double>();
        spec.terms.push_back(term);
      }
      break;
    }
    case FieldKind::RigidTranslation:
    case FieldKind::RigidRotation:
      spec.axis = params.value("axis", 0);
      break;
    case FieldKind::LameSphere:
    case FieldKind::LameCylinder:
      spec.a = params.value("a", 1.0);
      spec.b = params.value("b", 2.0);
      spec.p_i = params.value("p_i", 1.0);
      spec.lambda = params.value("lambda", 1.0);
      spec.mu = params.value("mu", 1.0);
      break;
    case FieldKind::CustomPreset:
      if (!params.contains("name")) throw InvalidSpec("custom_preset spec missing params.name");
      spec.preset = params.at("name").get<std::string>();
      break;
    case FieldKind::Dilation:
      break;
  }
  return spec;
}

std::string field_spec_to_json_text(const FieldSpec& spec) {
  nlohmann::ordered_json j;
  j["kind"] = kind_to_string(spec.kind);
  j["chart"] = spec.chart;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  switch (spec.kind) {
    case FieldKind::Polynomial: {
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      for (const PolyTerm& t : spec.terms)
        terms.push_back({{"target_component", t.target_component},
                         {"exponents", t.exponents},
                         {"coefficient", t.coefficient}});
      params["terms"] = terms;
      break;
    }
    case FieldKind::RigidTranslation:
    case FieldKind::RigidRotation:
      params["axis"] = spec.axis;
      break;
    case FieldKind::LameSphere:
    case FieldKind::LameCylinder:
      params["a"] = spec.a;
      params["b"] = spec.b;
      params["p_i"] = spec.p_i;
      params["lambda"] = spec.lambda;
      params["mu"] = spec.mu;
      break;
    case FieldKind::CustomPreset:
      params["name"] = spec.preset;
      break;
    case FieldKind::Dilation:
      break;
  }
  j["params"] = params;
  return j.dump();
}

std::array<double, 2> lame_sphere_constants(double a, double b, double p_i,
                                            const ElasticModuli& mod) {
  if (!(0.0 < a && a < b)) throw InvalidSpec("lame_sphere: requires 0 < a < b");
  const double a3 = a * a * a, b3 = b * b * b;
  const double big_b = p_i * a3 * b3 / (4.0 * mod.mu * (b3 - a3));
  const double big_a = p_i * a3 / ((3.0 * mod.lambda + 2.0 * mod.mu) * (b3 - a3));
  return {big_a, big_b};
}

std::array<double, 2> lame_cylinder_constants(double a, double b, double p_i,
                                              const ElasticModuli& mod) {
  if (!(0.0 < a && a < b)) throw InvalidSpec("lame_cylinder: requires 0 < a < b");
  const double a2 = a * a, b2 = b * b;
  const double big_b = p_i * a2 * b2 / (2.0 * mod.mu * (b2 - a2));
  const double big_a = p_i * a2 / (2.0 * (mod.lambda + mod.mu) * (b2 - a2));
  return {big_a, big_b};
}

DisplacementField rigid_generator(int k) {
  if (k < 0 || k > 5) throw InvalidSpec("rigid_generator: index must be 0..5");
  static const char* names[6] = {"translate_x", "translate_y", "translate_z",
                                 "rotate_x",    "rotate_y",    "rotate_z"};
  DisplacementField f;
  f.name = names[k];
  f.chart = &cartesian_chart();
  f.components = [k](const Point& p) { return rigid_components(k, p); };
  return f;
}

DisplacementField make_field(const FieldSpec& spec) {
  DisplacementField f;
  f.chart = &chart_by_name(spec.chart);
  switch (spec.kind) {
    case FieldKind::Polynomial: {
      for (const PolyTerm& t : spec.terms) {
        if (t.target_component < 0 || t.target_component > 2)
          throw InvalidSpec("polynomial: target_component must be 0..2");
        int deg = 0;
        for (int i = 0; i < 3; ++i) {
          if (t.exponents[i] < 0) throw InvalidSpec("polynomial: negative exponent");
          deg += t.exponents[i];
        }
        if (deg > 3) throw InvalidSpec("polynomial: total degree must be <= 3");
      }
      const auto terms = spec.terms;
      f.name = "polynomial";
      f.components = [terms](const Point& p) { return eval_polynomial(terms, p); };
      return f;
    }
    case FieldKind::RigidTranslation:
    case FieldKind::RigidRotation: {
      if (spec.axis < 0 || spec.axis > 2) throw InvalidSpec("rigid: axis must be 0..2");
      if (spec.chart != "cartesian")
        throw InvalidSpec("rigid generators are defined in the cartesian chart");
      const int k = (spec.kind == FieldKind::RigidTranslation) ? spec.axis : 3 + spec.axis;
      return rigid_generator(k);
    }
    case FieldKind::Dilation: {
      if (spec.chart != "cartesian")
        throw InvalidSpec("dilation is defined in the cartesian chart");
      f.name = "dilation";
      f.components = [](const Point& p) -> std::array<Jet2, 3> {
        return {jet_coord(0, p[0]), jet_coord(1, p[1]), jet_coord(2, p[2])};
      };
      return f;
    }
    case FieldKind::LameSphere: {
      if (spec.chart != "spherical")
        throw InvalidSpec("lame_sphere is defined in the spherical chart");
      const auto ab = lame_sphere_constants(spec.a, spec.b, spec.p_i,
                                            ElasticModuli(spec.lambda, spec.mu));
      f.name = "lame_sphere";
      f.components = [ab](const Point& p) -> std::array<Jet2, 3> {
        const Jet2 r = jet_coord(0, p[0]);
        return {ab[0] * r + ab[1] * recip(r * r), jet_const(0.0), jet_const(0.0)};
      };
      return f;
    }
    case FieldKind::LameCylinder: {
      if (spec.chart != "cylindrical")
        throw InvalidSpec("lame_cylinder is defined in the cylindrical chart");
      const auto ab = lame_cylinder_constants(spec.a, spec.b, spec.p_i,
                                              ElasticModuli(spec.lambda, spec.mu));
      f.name = "lame_cylinder";
      f.components = [ab](const Point& p) -> std::array<Jet2, 3> {
        const Jet2 r = jet_coord(0, p[0]);
        return {ab[0] * r + ab[1] * recip(r), jet_const(0.0), jet_const(0.0)};
      };
      return f;
    }
    case FieldKind::CustomPreset: {
      const auto& reg = presets();
      const auto it = reg.find(spec.preset);
      if (it == reg.end()) throw InvalidSpec("unknown custom preset: " + spec.preset);
      f.name = spec.preset;
      f.chart = &chart_by_name(it->second.first);
      f.components = it->second.second;
      return f;
    }
  }
  throw InvalidSpec("unhandled field kind");
}

VecField evaluate_field(const DisplacementField& field, const Chart& chart, const Point& p) {
  return pullback_displacement(*field.chart, chart, field.components, p);
}

DisplacementField random_polynomial_field(std::mt19937_64& rng, const Chart& chart,
                                          const std::string& name) {
  FieldSpec spec;
  spec.kind = FieldKind::Polynomial;
  spec.chart = chart.name();
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; i + j <= 3; ++j)
        for (int k = 0; i + j + k <= 3; ++k)
          spec.terms.push_back({c, {i, j, k}, uniform_real(rng, -1.0, 1.0)});
  DisplacementField f = make_field(spec);
  f.name = name;
  return f;
}

std::vector<std::string> custom_preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, preset] : presets()) names.push_back(name);
  return names;
}

}  // namespace formelast::harness
