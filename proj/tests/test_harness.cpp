#include <doctest.h>

#include "gssf/harness/config.hpp"
#include "gssf/harness/theorem.hpp"
#include "gssf/tensor_core/errors.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

using namespace gssf;

namespace {

Scenario synthetic(const std::string& space, int samples = 8) {
  Scenario s;
  s.space = space;
  s.synthetic = true;
  s.samples = samples;
  return s;
}

double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST_CASE("theorem ids round trip and unknown ids are rejected") {
  for (const auto& id : theorem_ids()) CHECK(to_string(parse_theorem_id(id)) == id);
  CHECK_THROWS_AS(parse_theorem_id("T-nope"), CatalogError);
  CHECK(exit_code(Verdict::Pass) == 0);
  CHECK(exit_code(Verdict::Fail) == 1);
  CHECK(exit_code(Verdict::Inconclusive) == 2);
}

TEST_CASE("closed-form coefficients on the Sasakian models") {
  // k = 1 on both; n is the dimension index of the free-standing σ's base.
  const SigmaField f5 = scenario_sigma(synthetic("sasakian-r5"));
  const SigmaGeometry g = f5.at(sample_points(f5.box(), 1, 3)[0]);
  REQUIRE(g.n == 2);
  CHECK(identity_coefficient(TheoremId::QsigmaR, g, 0) == doctest::Approx(-3));
  CHECK(identity_coefficient(TheoremId::QSsigma, g, 0) == doctest::Approx(-4));
  CHECK(identity_coefficient(TheoremId::QSnablasigma, g, 0) == doctest::Approx(-8));
  CHECK(identity_coefficient(TheoremId::QgRsigma, g, 0) == doctest::Approx(2));
  CHECK(identity_coefficient(TheoremId::QgCsigma, g, 0) == doctest::Approx(2 * (1 + 4.0 / 20)));
  CHECK(identity_coefficient(TheoremId::Pseudo, g, 0.25) == doctest::Approx(0.75));
}

TEST_CASE("trace over Y matches a direct sum of single Q components") {
  // Independent assembly of trace_Y Q(σ,R)(X,Y,ξ;U,ξ) from its definition.
  const SigmaField f = scenario_sigma(synthetic("sasakian-r5"));
  const SigmaGeometry g = f.at(sample_points(f.box(), 1, 9)[0]);
  UniformStream rng(5);
  Vec x(g.m), u(g.m);
  for (int i = 0; i < g.m; ++i) x(i) = rng.next(-1, 1), u(i) = rng.next(-1, 1);
  const Vec& xi = g.xi;
  Vec tr = Vec::Zero(g.p);
  for (int b = 0; b < g.m; ++b) {
    const Vec y = Vec::Unit(g.m, b);
    for (int al = 0; al < g.p; ++al) {
      // −Σ_i R(..,(U ∧_{σ^α} ξ)slot_i,..), component b of the tangent value
      auto w = [&](const Vec& z) { return g.sigma_of(xi, z)(al) * u - g.sigma_of(u, z)(al) * xi; };
      const Vec t = -(g.curvature(w(x), y, xi) + g.curvature(x, w(y), xi) + g.curvature(x, y, w(xi)));
      tr(al) += t(b);
    }
  }
  const auto [expr, base] = identity_sides(TheoremId::QsigmaR, g, 0, x, u);
  CHECK(max_abs(expr - tr) < 1e-12);
  CHECK(max_abs(expr + 3.0 * base) < 1e-10);
}

TEST_CASE("identity chains hold on synthetic σ over Sasakian models") {
  for (const char* sp : {"sasakian-r3", "sasakian-r5"})
    for (const auto& id : theorem_ids()) {
      Scenario s = synthetic(sp);
      s.L1 = 0.5;
      const auto r = run_theorem(parse_theorem_id(id), s);
      CAPTURE(sp);
      CAPTURE(id);
      CHECK(r.direction == Direction::Identity);
      CHECK(r.verdict == Verdict::Pass);
      CHECK(r.max_residual < 1e-9);
    }
}

TEST_CASE("identity chains are gated by their preconditions") {
  SUBCASE("f1 = f3 on the cosymplectic model") {
    for (const auto& id : theorem_ids()) {
      Scenario s = synthetic("cosymplectic-flat-3");
      s.L1 = 0.5;
      const auto r = run_theorem(parse_theorem_id(id), s);
      CHECK(r.verdict == Verdict::Inconclusive);
      CHECK_FALSE(r.preconditions[0].satisfied);
    }
  }
  SUBCASE("excluded scalar curvature on kenmotsu-h5") {
    const auto r = run_theorem(TheoremId::QgCsigma, synthetic("kenmotsu-h5"));
    CHECK(r.verdict == Verdict::Inconclusive);
    REQUIRE(r.preconditions.size() == 2);
    CHECK(r.preconditions[1].value == doctest::Approx(-20));
    CHECK_FALSE(r.preconditions[1].satisfied);
  }
  SUBCASE("L1 equal to f1 - f3") {
    Scenario s = synthetic("sasakian-r5");
    s.L1 = 1.0;
    const auto r = run_theorem(TheoremId::Pseudo, s);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK_FALSE(r.preconditions[1].satisfied);
  }
}

TEST_CASE("forward direction on embeddings") {
  Scenario s;
  s.space = "sasakian-r5";
  s.embedding = "r3-in-r5-sasakian";
  s.samples = 6;
  for (const auto& id : theorem_ids()) {
    const auto r = run_theorem(parse_theorem_id(id), s);
    CHECK(r.direction == Direction::Forward);
    CHECK(r.verdict == Verdict::Pass);
  }
  // Synthetic σ run forward is not totally geodesic, so every row fails.
  Scenario f = synthetic("sasakian-r5", 4);
  f.mode = Direction::Forward;
  for (const auto& id : theorem_ids()) CHECK(run_theorem(parse_theorem_id(id), f).verdict == Verdict::Fail);

  Scenario bad = s;
  bad.embedding = "slice-anti-invariant";
  CHECK_THROWS_AS(run_theorem(TheoremId::QSsigma, bad), PreconditionError);
  Scenario geo_identity = s;
  geo_identity.mode = Direction::Identity;
  CHECK_THROWS_AS(run_theorem(TheoremId::QSsigma, geo_identity), PreconditionError);
  Scenario neither;
  neither.space = "sasakian-r5";
  CHECK_THROWS_AS(run_theorem(TheoremId::QSsigma, neither), CatalogError);
}

TEST_CASE("equivalence matrix verdicts") {
  Scenario s;
  s.space = "sasakian-r5";
  s.embedding = "r3-in-r5-sasakian";
  s.samples = 4;
  const auto r = equivalence_matrix(s);
  REQUIRE(r.results.size() == 12);
  for (const auto& row : r.results) CHECK(row.verdict == Verdict::Pass);
  CHECK(r.verdict == Verdict::Pass);

  s.space = "kenmotsu-h5";
  s.embedding = "h3-in-h5-kenmotsu";
  const auto k = equivalence_matrix(s);
  CHECK(k.verdict == Verdict::Inconclusive);
  int inconclusive = 0;
  for (const auto& row : k.results) inconclusive += row.verdict == Verdict::Inconclusive;
  CHECK(inconclusive == 3);
}

TEST_CASE("validate report") {
  Scenario s;
  s.space = "sasakian-r5";
  s.samples = 5;
  const auto r = validate_report(s);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.max_residual < 1e-6);
  s.space = "kenmotsu-h3";
  CHECK(validate_report(s).verdict == Verdict::Fail);
}

TEST_CASE("decimal strings round trip") {
  for (double v : {0.0, 1.0, -4.0, 1e-7, 0.1, 2.0 / 3.0, 1.234567890123e-300}) {
    const std::string t = decimal_string(v);
    double back = 0;
    std::from_chars(t.data(), t.data() + t.size(), back);
    CHECK(back == v);
  }
}

TEST_CASE("reports are deterministic across execution modes") {
  Scenario s = synthetic("sasakian-r5", 6);
  s.L1 = 0.3;
  const std::string a = to_json(run_theorem(TheoremId::Pseudo, s, Execution::Serial));
  const std::string b = to_json(run_theorem(TheoremId::Pseudo, s, Execution::Parallel));
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  for (const char* key : {"tool_version", "scenario", "preconditions", "results", "max_residual", "verdict"})
    CHECK(j.contains(key));
  CHECK(j["max_residual"].is_string());
  CHECK(j["results"][0]["residual"].is_string());
}

TEST_CASE("config files") {
  Scenario s;
  std::istringstream good("# comment\nsamples = 7\nseed=9\nL1 = 0.5\ntol.forward = 1e-8\n\nbox.space = -1, 1\n");
  apply_config(good, s);
  CHECK(s.samples == 7);
  CHECK(s.seed == 9);
  CHECK(*s.L1 == 0.5);
  CHECK(s.forward_tol == 1e-8);
  CHECK(s.space_box->first == -1.0);
  CHECK(s.space_box->second == 1.0);
  for (const char* bad : {"nope = 1\n", "samples = x\n", "samples = 0\n", "tol.identity = -1\n", "box.space = 1,0\n",
                          "samples\n"}) {
    std::istringstream in(bad);
    CAPTURE(bad);
    CHECK_THROWS_AS(apply_config(in, s), ConfigError);
  }
}
