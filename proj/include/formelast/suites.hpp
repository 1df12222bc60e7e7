#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "formelast/fields.hpp"

namespace formelast::harness {

struct SuiteConfig {
  std::uint64_t seed = 42;
  int fields = 0;       // 0 = suite default
  int points = 0;       // 0 = suite default
  double tol_rel = 0.0;  // 0 = per-check defaults; overrides relative checks
  std::vector<std::string> charts;  // empty = cartesian, cylindrical, spherical
};

struct CheckRecord {
  std::string id;
  std::string chart;
  std::string field;
  Point point{};  // where the largest disagreement occurred
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
  double tolerance = 0.0;
  bool relative = true;  // relative (to max(1, magnitude)) vs absolute
  bool pass = true;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 42;
  int fields = 0;
  int points = 0;
  double tol_rel = 0.0;
  std::vector<std::string> charts;
  std::vector<CheckRecord> checks;
  int total = 0;
  int passed = 0;
  int failed = 0;

  bool all_passed() const { return failed == 0; }
  // Stable key order, checks sorted by (id, chart, field); byte-identical
  // for identical suite, seed and config.
  std::string to_json() const;
};

// Suite names: bridge, strain_equiv, cn_equiv, traction_equiv, killing,
// cross_chart, jets_selftest, all. Throws UnknownSuite / ConfigError.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);
std::vector<std::string> suite_names();

// Module invariants and the suites that execute them; a meta-test checks
// that the union of coverage equals the full list.
std::vector<std::string> all_invariants();
std::vector<std::string> covered_invariants(const std::string& suite);

// Single-operation evaluation for the CLI and bindings.
struct EvalRequest {
  std::string op;
  std::string chart = "cartesian";
  Point at{};
  double lambda = 1.0;
  double mu = 1.0;
  std::optional<FieldSpec> field;
  std::optional<std::array<double, 3>> normal;  // constant components
};

// Returns a printed component table (coordinate basis, plus physical
// components on orthogonal charts). Throws UnknownOp, ConfigError,
// SingularPoint and the operation's own errors.
std::string eval_op(const EvalRequest& req);
std::vector<std::string> eval_op_names();

}  // namespace formelast::harness
