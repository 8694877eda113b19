#include "gssf/harness/theorem.hpp"

#include "gssf/tensor_core/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "json.hpp"

namespace gssf {

namespace {

const std::vector<std::pair<TheoremId, std::string>>& id_names() {
  static const std::vector<std::pair<TheoremId, std::string>> names = {
      {TheoremId::QsigmaR, "T-QsigmaR"},   {TheoremId::QSsigma, "T-QSsigma"},
      {TheoremId::QSnablasigma, "T-QSnablasigma"}, {TheoremId::QgRsigma, "T-QgRsigma"},
      {TheoremId::QgCsigma, "T-QgCsigma"}, {TheoremId::Pseudo, "T-pseudo"}};
  return names;
}

constexpr double kParamZero = 1e-12;
constexpr double kL1Tol = 1e-12;
constexpr double kScalarRel = 1e-9;

double vmax(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

Vec flatten(const Mat& m) { return Eigen::Map<const Vec>(m.data(), m.size()); }

SampleBox override_box(const SampleBox& box, const std::optional<Interval>& iv) {
  if (!iv) return box;
  SampleBox out = box;
  for (auto& b : out.bounds) b = *iv;
  return out;
}

MultilinearInput curvature_form(const SigmaGeometry& g) {
  return {3, g.m, [&g](std::span<const Vec> a) { return g.curvature(a[0], a[1], a[2]); }};
}
MultilinearInput sigma_form(const SigmaGeometry& g) {
  return {2, g.p, [&g](std::span<const Vec> a) { return g.sigma_of(a[0], a[1]); }};
}
MultilinearInput nabla_sigma_form(const SigmaGeometry& g) {
  return {3, g.p, [&g](std::span<const Vec> a) { return g.nabla_sigma_of(a[0], a[1], a[2]); }};
}
MultilinearInput r_sigma_form(const SigmaGeometry& g) {
  return {4, g.p, [&g](std::span<const Vec> a) { return r_dot_sigma(g, a[0], a[1], a[2], a[3]); }};
}
MultilinearInput c_sigma_form(const SigmaGeometry& g) {
  return {4, g.p, [&g](std::span<const Vec> a) { return c_dot_sigma(g, a[0], a[1], a[2], a[3]); }};
}

void require_invariant(const SigmaField& f, const std::vector<Point>& points) {
  if (!f.embedding) return;
  for (const auto& q : points)
    if (!check_invariant(*f.embedding, q).invariant)
      throw PreconditionError("embedding '" + f.embedding->name + "' is not invariant");
}

double scalar_target(const SigmaGeometry& g) {
  const int n = g.ambient_n;
  return 2.0 * n * (2 * n + 1) * g.params.f1_minus_f3();
}

bool scalar_excluded(double r, double target) {
  return std::abs(r - target) <= kScalarRel * std::max(1.0, std::abs(target));
}

Precondition f1_f3(const GssfParams& p) {
  const double k = p.f1_minus_f3();
  return {"f1 != f3", k, 0.0, std::abs(k) > kParamZero};
}

Precondition l1_condition(double l1, const GssfParams& p) {
  return {"L1 != f1 - f3", l1, p.f1_minus_f3(), std::abs(l1 - p.f1_minus_f3()) >= kL1Tol};
}

// r ≠ 2n(2n+1)(f1−f3) at every sampled point; reports the point closest
// to the excluded value.
Precondition scalar_condition(const std::vector<SigmaGeometry>& geo) {
  Precondition pc{"r != 2n(2n+1)(f1 - f3)", 0.0, 0.0, true};
  double best = INFINITY;
  for (const auto& g : geo) {
    const double target = scalar_target(g);
    const double gap = std::abs(g.ambient_scalar - target);
    if (gap < best) {
      best = gap;
      pc.value = g.ambient_scalar;
      pc.excluded = target;
    }
    if (scalar_excluded(g.ambient_scalar, target)) pc.satisfied = false;
  }
  return pc;
}

std::vector<Precondition> theorem_preconditions(TheoremId id, const std::vector<SigmaGeometry>& geo, double l1,
                                                const GssfParams& params) {
  std::vector<Precondition> out = {f1_f3(params)};
  if (id == TheoremId::QgCsigma) out.push_back(scalar_condition(geo));
  if (id == TheoremId::Pseudo) out.push_back(l1_condition(l1, params));
  return out;
}

bool all_satisfied(const std::vector<Precondition>& pcs) {
  return std::all_of(pcs.begin(), pcs.end(), [](const Precondition& p) { return p.satisfied; });
}

std::vector<SigmaGeometry> geometries(const SigmaField& f, const std::vector<Point>& points, Execution exec) {
  return map_indexed<SigmaGeometry>(points.size(), [&](std::size_t i) { return f.at(points[i]); }, exec);
}

double forward_residual_at(TheoremId id, const SigmaGeometry& g, double l1, std::uint64_t seed) {
  const auto frame = argument_frame(g);
  const int arity = theorem_arity(id);
  double r = 0.0;
  std::vector<Vec> args(arity);
  for (const auto& t : frame_tuples(static_cast<int>(frame.size()), arity, static_cast<int>(frame.size()) - 1, 64, seed)) {
    for (int k = 0; k < arity; ++k) args[k] = frame[t[k]];
    r = std::max(r, vmax(theorem_expression(id, g, l1, args)));
  }
  return r;
}

struct IdentityAt {
  double residual = 0.0;
  double expression = 0.0;
  double coefficient = 0.0;
};

IdentityAt identity_at(TheoremId id, const SigmaGeometry& g, double l1) {
  IdentityAt out;
  out.coefficient = identity_coefficient(id, g, l1);
  const auto frame = argument_frame(g);
  for (const Vec& x : frame)
    for (const Vec& u : frame) {
      const auto [expr, base] = identity_sides(id, g, l1, x, u);
      out.residual = std::max(out.residual, vmax(expr - out.coefficient * base));
      out.expression = std::max(out.expression, vmax(expr));
    }
  return out;
}

}  // namespace

TheoremId parse_theorem_id(std::string_view id) {
  for (const auto& [k, n] : id_names())
    if (n == id) return k;
  std::string msg = "unknown theorem id '" + std::string(id) + "'; valid ids:";
  for (const auto& kn : id_names()) msg += " " + kn.second;
  throw CatalogError(msg);
}

std::string to_string(TheoremId id) {
  for (const auto& [k, n] : id_names())
    if (k == id) return n;
  return "unknown";
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& kn : id_names()) v.push_back(kn.second);
    return v;
  }();
  return ids;
}

std::string to_string(Direction d) { return d == Direction::Forward ? "forward" : "identity"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    default:
      return "inconclusive";
  }
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return 0;
    case Verdict::Fail:
      return 1;
    default:
      return 2;
  }
}

ModelSpace scenario_space(const Scenario& s) {
  ModelSpace m = builtin_space(s.space);
  m.box = override_box(m.box, s.space_box);
  return m;
}

SigmaField scenario_sigma(const Scenario& s) {
  const ModelSpace space = scenario_space(s);
  std::optional<EmbeddingModel> emb;
  if (s.embedding) {
    emb = builtin_embedding(*s.embedding, s.space);
    emb->ambient = space;
    if (*s.embedding == "identity") emb->box = space.box;
    emb->box = override_box(emb->box, s.embedding_box);
  }
  if (s.synthetic) return synth_sigma(s.seed, space, emb);
  if (!emb) throw CatalogError("scenario needs an embedding or synthetic sigma");
  return geometric_sigma(*emb);
}

Direction scenario_direction(const Scenario& s) {
  if (s.mode) return *s.mode;
  return s.synthetic ? Direction::Identity : Direction::Forward;
}

int theorem_arity(TheoremId id) {
  switch (id) {
    case TheoremId::QSsigma:
    case TheoremId::Pseudo:
      return 4;
    case TheoremId::QgRsigma:
    case TheoremId::QgCsigma:
      return 6;
    default:
      return 5;
  }
}

Vec theorem_expression(TheoremId id, const SigmaGeometry& g, double l1, std::span<const Vec> a) {
  const std::span<const Vec> head = a.first(a.size() - 2);
  const Vec& x = a[a.size() - 2];
  const Vec& y = a[a.size() - 1];
  switch (id) {
    case TheoremId::QsigmaR:
      return flatten(q_operator(sigma_input(g), curvature_form(g), head, x, y));
    case TheoremId::QSsigma:
      return flatten(q_operator(ricci_input(g), sigma_form(g), head, x, y));
    case TheoremId::QSnablasigma:
      return flatten(q_operator(ricci_input(g), nabla_sigma_form(g), head, x, y));
    case TheoremId::QgRsigma:
      return flatten(q_operator(metric_input(g), r_sigma_form(g), head, x, y));
    case TheoremId::QgCsigma:
      return flatten(q_operator(metric_input(g), c_sigma_form(g), head, x, y));
    case TheoremId::Pseudo:
      return parallelism_expression(ParallelismKind::Pseudo, g, l1, a);
  }
  return {};
}

double identity_coefficient(TheoremId id, const SigmaGeometry& g, double l1) {
  const double k = g.params.f1_minus_f3();
  const int n = g.n;
  switch (id) {
    case TheoremId::QsigmaR:
      return -(2.0 * n - 1.0) * k;
    case TheoremId::QSsigma:
      return -2.0 * n * k;
    case TheoremId::QSnablasigma:
      return -4.0 * n * k * k;
    case TheoremId::QgRsigma:
      return 2.0 * k;
    case TheoremId::QgCsigma:
      return 2.0 * (k - concircular_scale(g));
    case TheoremId::Pseudo:
      return k - l1;
  }
  return 0.0;
}

std::pair<Vec, Vec> identity_sides(TheoremId id, const SigmaGeometry& g, double l1, const Vec& x, const Vec& u) {
  const Vec& xi = g.xi;
  switch (id) {
    case TheoremId::QsigmaR: {
      // Trace over Y of Q(σ,R)(X, Y, ξ; U, ξ).
      Vec tr = Vec::Zero(g.p);
      for (int b = 0; b < g.m; ++b) {
        const Vec args[] = {x, Vec::Unit(g.m, b), xi};
        tr += q_operator(sigma_input(g), curvature_form(g), args, u, xi).col(b);
      }
      return {tr, g.sigma_of(u, x)};
    }
    case TheoremId::QSsigma: {
      const Vec args[] = {x, xi};
      return {q_operator(ricci_input(g), sigma_form(g), args, u, xi).row(0).transpose(), g.sigma_of(x, u)};
    }
    case TheoremId::QSnablasigma: {
      const Vec args[] = {x, xi, xi};
      return {q_operator(ricci_input(g), nabla_sigma_form(g), args, u, xi).row(0).transpose(),
              g.sigma_of(u, g.phi * x)};
    }
    case TheoremId::QgRsigma: {
      const Vec args[] = {x, xi, xi, xi};
      return {q_operator(metric_input(g), r_sigma_form(g), args, u, xi).row(0).transpose(), g.sigma_of(u, x)};
    }
    case TheoremId::QgCsigma: {
      const Vec args[] = {x, xi, xi, xi};
      return {q_operator(metric_input(g), c_sigma_form(g), args, u, xi).row(0).transpose(), g.sigma_of(u, x)};
    }
    case TheoremId::Pseudo: {
      const Vec args[] = {xi, x, u, xi};
      return {parallelism_expression(ParallelismKind::Pseudo, g, l1, args), g.sigma_of(u, x)};
    }
  }
  return {};
}

VerificationReport run_theorem(TheoremId id, const Scenario& s, Execution exec) {
  const Direction dir = scenario_direction(s);
  if (dir == Direction::Identity) return derivation_identity_check(id, s, exec);

  const SigmaField field = scenario_sigma(s);
  const auto points = sample_points(field.box(), s.samples, s.seed);
  require_invariant(field, points);
  const double l1 = s.L1.value_or(0.0);
  const auto geo = geometries(field, points, exec);
  const auto res = map_indexed<double>(
      points.size(), [&](std::size_t i) { return forward_residual_at(id, geo[i], l1, s.seed + i); }, exec);

  VerificationReport r;
  r.command = "theorem";
  r.scenario = s;
  r.theorem = id;
  r.direction = dir;
  r.tol = s.tol.value_or(s.forward_tol);
  r.preconditions = theorem_preconditions(id, geo, l1, field.space.params);
  for (std::size_t i = 0; i < points.size(); ++i) {
    ResultRow row{"point-" + std::to_string(i), res[i], std::nullopt, {{"sigma-norm", geo[i].sigma_norm()}}, points[i]};
    r.max_residual = std::max(r.max_residual, res[i]);
    r.results.push_back(std::move(row));
  }
  r.verdict = r.max_residual < r.tol ? Verdict::Pass : Verdict::Fail;
  return r;
}

VerificationReport derivation_identity_check(TheoremId id, const Scenario& s, Execution exec) {
  if (!s.synthetic) throw PreconditionError("the identity direction needs synthetic sigma");
  const SigmaField field = scenario_sigma(s);
  const auto points = sample_points(field.box(), s.samples, s.seed);
  require_invariant(field, points);
  const double l1 = s.L1.value_or(0.0);
  const auto geo = geometries(field, points, exec);
  const auto res =
      map_indexed<IdentityAt>(points.size(), [&](std::size_t i) { return identity_at(id, geo[i], l1); }, exec);

  VerificationReport r;
  r.command = "theorem";
  r.scenario = s;
  r.theorem = id;
  r.direction = Direction::Identity;
  r.tol = s.tol.value_or(s.identity_tol);
  r.preconditions = theorem_preconditions(id, geo, l1, field.space.params);
  bool coefficient_nonzero = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const IdentityAt& a = res[i];
    r.results.push_back({"point-" + std::to_string(i),
                         a.residual,
                         std::nullopt,
                         {{"coefficient", a.coefficient}, {"expression-norm", a.expression}},
                         points[i]});
    r.max_residual = std::max(r.max_residual, a.residual);
    if (std::abs(a.coefficient) <= kParamZero) coefficient_nonzero = false;
  }
  if (!all_satisfied(r.preconditions))
    r.verdict = Verdict::Inconclusive;
  else
    r.verdict = r.max_residual < r.tol && coefficient_nonzero ? Verdict::Pass : Verdict::Fail;
  return r;
}

VerificationReport equivalence_matrix(const Scenario& s, Execution exec) {
  if (!s.embedding || s.synthetic) throw PreconditionError("the equivalence matrix needs a geometric embedding");
  const SigmaField field = scenario_sigma(s);
  const auto points = sample_points(field.box(), s.samples, s.seed);
  require_invariant(field, points);
  const double l1 = s.L1.value_or(0.0);
  const auto geo = geometries(field, points, exec);

  struct Row {
    std::string name;
    std::function<double(const SigmaGeometry&, std::uint64_t)> residual;
    bool needs_scalar = false, needs_l1 = false, needs_k = true;
  };
  auto parallelism = [l1](ParallelismKind kind) {
    return [kind, l1](const SigmaGeometry& g, std::uint64_t seed) {
      const auto frame = argument_frame(g);
      const int arity = parallelism_arity(kind);
      std::vector<Vec> args(arity);
      double r = 0.0;
      for (const auto& t : frame_tuples(static_cast<int>(frame.size()), arity, static_cast<int>(frame.size()) - 1, 64, seed)) {
        for (int k = 0; k < arity; ++k) args[k] = frame[t[k]];
        r = std::max(r, vmax(parallelism_expression(kind, g, l1, args)));
      }
      return r;
    };
  };
  auto theorem = [l1](TheoremId id) {
    return [id, l1](const SigmaGeometry& g, std::uint64_t seed) { return forward_residual_at(id, g, l1, seed); };
  };
  const std::vector<Row> rows = {
      {"totally-geodesic", [](const SigmaGeometry& g, std::uint64_t) { return g.sigma_norm(); }, false, false, false},
      {"parallel", parallelism(ParallelismKind::Parallel)},
      {"semi-parallel", parallelism(ParallelismKind::Semi)},
      {"2-semi-parallel", parallelism(ParallelismKind::TwoSemi)},
      {"pseudo-parallel", parallelism(ParallelismKind::Pseudo), false, true},
      {"concircular-semi-parallel", parallelism(ParallelismKind::ConcircularSemi), true},
      {"concircular-2-semi-parallel", parallelism(ParallelismKind::ConcircularTwoSemi), true},
      {"Q(sigma,R)", theorem(TheoremId::QsigmaR)},
      {"Q(S,sigma)", theorem(TheoremId::QSsigma)},
      {"Q(S,nabla-sigma)", theorem(TheoremId::QSnablasigma)},
      {"Q(g,R.sigma)", theorem(TheoremId::QgRsigma)},
      {"Q(g,C.sigma)", theorem(TheoremId::QgCsigma), true},
  };

  const auto per_point = map_indexed<std::vector<double>>(
      points.size(),
      [&](std::size_t i) {
        std::vector<double> v;
        for (const auto& row : rows) v.push_back(row.residual(geo[i], s.seed + i));
        return v;
      },
      exec);

  VerificationReport r;
  r.command = "equivalence";
  r.scenario = s;
  r.tol = s.tol.value_or(s.forward_tol);
  const Precondition pk = f1_f3(field.space.params);
  const Precondition pr = scalar_condition(geo);
  const Precondition pl = l1_condition(l1, field.space.params);
  r.preconditions = {pk, pr, pl};

  std::optional<Verdict> agreed;
  bool disagree = false, any_inconclusive = false;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    double res = 0.0;
    for (const auto& v : per_point) res = std::max(res, v[j]);
    const bool gated = (rows[j].needs_k && !pk.satisfied) || (rows[j].needs_scalar && !pr.satisfied) ||
                       (rows[j].needs_l1 && !pl.satisfied);
    const Verdict v = gated ? Verdict::Inconclusive : (res < r.tol ? Verdict::Pass : Verdict::Fail);
    if (v == Verdict::Inconclusive) {
      any_inconclusive = true;
    } else if (agreed && *agreed != v) {
      disagree = true;
    } else {
      agreed = v;
    }
    r.max_residual = std::max(r.max_residual, res);
    r.results.push_back({rows[j].name, res, v, {}, {}});
  }
  r.verdict = disagree ? Verdict::Fail : any_inconclusive ? Verdict::Inconclusive : Verdict::Pass;
  return r;
}

VerificationReport validate_report(const Scenario& s, Execution exec) {
  const ModelSpace space = scenario_space(s);
  const auto points = sample_points(space.box, s.samples, s.seed);
  const double tol = s.tol.value_or(s.validate_tol);
  const auto reps =
      map_indexed<GssfReport>(points.size(), [&](std::size_t i) { return validate_gssf(space, points[i], tol); }, exec);

  VerificationReport r;
  r.command = "validate";
  r.scenario = s;
  r.tol = tol;
  const auto& names = reps.front().entries;
  bool pass = true;
  for (std::size_t j = 0; j < names.size(); ++j) {
    double res = 0.0;
    for (const auto& rep : reps) res = std::max(res, rep.entries[j].residual);
    const Verdict v = res < tol ? Verdict::Pass : Verdict::Fail;
    pass = pass && v == Verdict::Pass;
    r.max_residual = std::max(r.max_residual, res);
    r.results.push_back({names[j].name, res, v, {}, {}});
  }
  r.verdict = pass ? Verdict::Pass : Verdict::Fail;
  return r;
}

std::string decimal_string(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string to_json(const VerificationReport& r) {
  using nlohmann::ordered_json;
  const Scenario& s = r.scenario;
  ordered_json sc;
  sc["command"] = r.command;
  sc["space"] = s.space;
  sc["embedding"] = s.embedding ? ordered_json(*s.embedding) : ordered_json(nullptr);
  sc["synthetic"] = s.synthetic;
  sc["theorem"] = r.theorem ? ordered_json(to_string(*r.theorem)) : ordered_json(nullptr);
  sc["direction"] = r.direction ? ordered_json(to_string(*r.direction)) : ordered_json(nullptr);
  sc["samples"] = s.samples;
  sc["seed"] = s.seed;
  sc["tol"] = decimal_string(r.tol);
  sc["L1"] = s.L1 ? ordered_json(decimal_string(*s.L1)) : ordered_json(nullptr);

  ordered_json pcs = ordered_json::array();
  for (const auto& p : r.preconditions)
    pcs.push_back({{"name", p.name},
                   {"value", decimal_string(p.value)},
                   {"excluded", decimal_string(p.excluded)},
                   {"satisfied", p.satisfied}});

  ordered_json rows = ordered_json::array();
  for (const auto& row : r.results) {
    ordered_json j;
    j["name"] = row.name;
    j["residual"] = decimal_string(row.residual);
    if (row.verdict) j["verdict"] = to_string(*row.verdict);
    for (const auto& [k, v] : row.values) j[k] = decimal_string(v);
    if (!row.point.empty()) {
      ordered_json pt = ordered_json::array();
      for (double x : row.point) pt.push_back(decimal_string(x));
      j["point"] = pt;
    }
    rows.push_back(std::move(j));
  }

  ordered_json out;
  out["tool_version"] = kToolVersion;
  out["scenario"] = sc;
  out["preconditions"] = pcs;
  out["results"] = rows;
  out["max_residual"] = decimal_string(r.max_residual);
  out["verdict"] = to_string(r.verdict);
  return out.dump(2) + "\n";
}

}  // namespace gssf
