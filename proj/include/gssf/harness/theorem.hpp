#pragma once

// Scenario runs for the six totally-geodesic characterizations, the
// equivalence matrix and model validation, with verdicts and reports.

#include "gssf/contact/validate.hpp"
#include "gssf/tachibana/ops.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gssf {

inline constexpr const char* kToolVersion = "0.1.0";

enum class TheoremId { QsigmaR, QSsigma, QSnablasigma, QgRsigma, QgCsigma, Pseudo };
enum class Direction { Forward, Identity };
enum class Verdict { Pass, Fail, Inconclusive };

/// T-QsigmaR, T-QSsigma, T-QSnablasigma, T-QgRsigma, T-QgCsigma, T-pseudo.
TheoremId parse_theorem_id(std::string_view id);
std::string to_string(TheoremId id);
const std::vector<std::string>& theorem_ids();
std::string to_string(Direction d);
std::string to_string(Verdict v);
int exit_code(Verdict v);  // 0 pass, 1 fail, 2 inconclusive

using Interval = std::pair<double, double>;

struct Scenario {
  std::string space;
  std::optional<std::string> embedding;
  bool synthetic = false;
  int samples = 50;
  std::optional<double> tol;  // default depends on direction
  std::optional<double> L1;
  std::uint64_t seed = 42;
  std::optional<Direction> mode;
  std::optional<Interval> space_box;      // overrides every chart coordinate
  std::optional<Interval> embedding_box;

  double forward_tol = 1e-7;
  double identity_tol = 1e-6;
  double validate_tol = 1e-6;
};

struct Precondition {
  std::string name;
  double value = 0.0;     // measured quantity
  double excluded = 0.0;  // the value it must differ from
  bool satisfied = true;
};

struct ResultRow {
  std::string name;
  double residual = 0.0;
  std::optional<Verdict> verdict;
  std::vector<std::pair<std::string, double>> values;  // extra named numbers
  std::vector<double> point;
};

struct VerificationReport {
  std::string command;  // validate, theorem, equivalence
  Scenario scenario;
  std::optional<TheoremId> theorem;
  std::optional<Direction> direction;
  double tol = 0.0;  // effective tolerance
  std::vector<Precondition> preconditions;
  std::vector<ResultRow> results;
  double max_residual = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

/// Resolves names and boxes. Throws CatalogError on unknown names.
ModelSpace scenario_space(const Scenario& s);
SigmaField scenario_sigma(const Scenario& s);

/// Default direction: forward for geometric σ, identity for synthetic σ.
Direction scenario_direction(const Scenario& s);

/// Forward: the theorem's Q-expression over frame tuples, with σ from the
/// scenario; verdict is pass or fail and preconditions are only reported.
/// Identity: the ξ-substituted expression against its closed form, gated
/// by the preconditions. Throws PreconditionError for a non-invariant
/// embedding or an identity run without synthetic σ.
VerificationReport run_theorem(TheoremId id, const Scenario& s, Execution exec = Execution::Parallel);

/// The identity direction regardless of scenario mode.
VerificationReport derivation_identity_check(TheoremId id, const Scenario& s,
                                             Execution exec = Execution::Parallel);

/// Closed-form coefficient c with expression = c · σ(...) in the identity
/// direction, from the model parameters (and the numeric r for T-QgCsigma).
double identity_coefficient(TheoremId id, const SigmaGeometry& g, double l1);

/// The ξ-substituted expression and the σ value it should be a multiple of,
/// for frame vectors x, u.
std::pair<Vec, Vec> identity_sides(TheoremId id, const SigmaGeometry& g, double l1, const Vec& x, const Vec& u);

/// Full theorem expression at one argument tuple (max-abs is the residual).
int theorem_arity(TheoremId id);
Vec theorem_expression(TheoremId id, const SigmaGeometry& g, double l1, std::span<const Vec> args);

/// The twelve equivalent conditions on a geometric scenario.
VerificationReport equivalence_matrix(const Scenario& s, Execution exec = Execution::Parallel);

VerificationReport validate_report(const Scenario& s, Execution exec = Execution::Parallel);

/// Deterministic JSON text (two-space indent, trailing newline).
std::string to_json(const VerificationReport& r);

/// Shortest round-trip decimal text of a double, locale independent.
std::string decimal_string(double v);

}  // namespace gssf
