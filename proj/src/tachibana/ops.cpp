#include "gssf/tachibana/ops.hpp"

#include "gssf/tensor_core/errors.hpp"

#include <algorithm>
#include <cmath>

namespace gssf {

BilinearInput metric_input(const SigmaGeometry& s) {
  return {"metric", 1, [&s](const Vec& a, const Vec& b) { return Vec::Constant(1, s.inner(a, b)); }};
}

BilinearInput ricci_input(const SigmaGeometry& s) {
  return {"ricci", 1, [&s](const Vec& a, const Vec& b) { return Vec::Constant(1, s.ricci_of(a, b)); }};
}

BilinearInput sigma_input(const SigmaGeometry& s) {
  return {"sigma", s.p, [&s](const Vec& a, const Vec& b) { return s.sigma_of(a, b); }};
}

Mat wedge(const BilinearInput& e, const Vec& x, const Vec& y, const Vec& z) {
  const Vec eyz = e.eval(y, z), exz = e.eval(x, z);
  Mat out(x.size(), e.dim);
  for (int al = 0; al < e.dim; ++al) out.col(al) = eyz(al) * x - exz(al) * y;
  return out;
}

Mat q_operator(const BilinearInput& e, const MultilinearInput& t, std::span<const Vec> args, const Vec& x,
               const Vec& y) {
  if (static_cast<int>(args.size()) != t.arity) throw std::invalid_argument("q_operator: arity mismatch");
  Mat out = Mat::Zero(e.dim, t.dim);
  std::vector<Vec> slot(args.begin(), args.end());
  for (int i = 0; i < t.arity; ++i) {
    const Mat w = wedge(e, x, y, args[i]);
    for (int al = 0; al < e.dim; ++al) {
      slot[i] = w.col(al);
      out.row(al) -= t.eval(slot).transpose();
    }
    slot[i] = args[i];
  }
  return out;
}

Vec r_dot_sigma(const SigmaGeometry& s, const Vec& x, const Vec& y, const Vec& u, const Vec& v) {
  return s.rperp_of(x, y, s.sigma_of(u, v)) - s.sigma_of(s.curvature(x, y, u), v) -
         s.sigma_of(u, s.curvature(x, y, v));
}

Vec r_dot_nabla_sigma(const SigmaGeometry& s, const Vec& x, const Vec& y, const Vec& u, const Vec& v,
                      const Vec& w) {
  return s.rperp_of(x, y, s.nabla_sigma_of(u, v, w)) - s.nabla_sigma_of(s.curvature(x, y, u), v, w) -
         s.nabla_sigma_of(u, s.curvature(x, y, v), w) - s.nabla_sigma_of(u, v, s.curvature(x, y, w));
}

Vec concircular(const ModelSpace& space, const Vec& x, const Vec& y, const Vec& z, std::span<const double> p) {
  const CurvatureBundle cb = curvature_bundle(space.structure.metric, p);
  const Mat g = space.structure.metric.at(p);
  const int n = space.n();
  const double c = cb.scalar / (2.0 * n * (2 * n + 1));
  return apply_riemann(cb.riemann13, x, y, z) - c * (y.dot(g * z) * x - x.dot(g * z) * y);
}

double concircular_scale(const SigmaGeometry& s) {
  const int n = s.ambient_n;
  return s.ambient_scalar / (2.0 * n * (2 * n + 1));
}

Vec concircular(const SigmaGeometry& s, const Vec& x, const Vec& y, const Vec& z) {
  return s.curvature(x, y, z) - concircular_scale(s) * (s.inner(y, z) * x - s.inner(x, z) * y);
}

Vec c_dot_sigma(const SigmaGeometry& s, const Vec& x, const Vec& y, const Vec& u, const Vec& v) {
  return s.rperp_of(x, y, s.sigma_of(u, v)) - s.sigma_of(concircular(s, x, y, u), v) -
         s.sigma_of(u, concircular(s, x, y, v));
}

Vec c_dot_nabla_sigma(const SigmaGeometry& s, const Vec& x, const Vec& y, const Vec& u, const Vec& v,
                      const Vec& w) {
  return s.rperp_of(x, y, s.nabla_sigma_of(u, v, w)) - s.nabla_sigma_of(concircular(s, x, y, u), v, w) -
         s.nabla_sigma_of(u, concircular(s, x, y, v), w) - s.nabla_sigma_of(u, v, concircular(s, x, y, w));
}

std::vector<Vec> argument_frame(const SigmaGeometry& s) {
  std::vector<Vec> f;
  for (int a = 0; a < s.m; ++a) f.push_back(Vec::Unit(s.m, a));
  f.push_back(s.xi);
  return f;
}

std::vector<std::vector<int>> frame_tuples(int frame_size, int arity, int xi_index, int random_count,
                                           std::uint64_t seed) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(arity, 0);
  while (true) {
    if (std::find(t.begin(), t.end(), xi_index) != t.end()) out.push_back(t);
    int i = arity - 1;
    while (i >= 0 && ++t[i] == frame_size) t[i--] = 0;
    if (i < 0) break;
  }
  UniformStream rng(seed);
  for (int r = 0; r < random_count; ++r) {
    for (int& v : t) v = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(frame_size));
    out.push_back(t);
  }
  return out;
}

namespace {

const std::vector<std::pair<ParallelismKind, std::string>>& kind_names() {
  static const std::vector<std::pair<ParallelismKind, std::string>> names = {
      {ParallelismKind::Parallel, "parallel"},
      {ParallelismKind::Semi, "semi"},
      {ParallelismKind::TwoSemi, "2-semi"},
      {ParallelismKind::Pseudo, "pseudo"},
      {ParallelismKind::RicciPseudo, "ricci-pseudo"},
      {ParallelismKind::ConcircularSemi, "concircular-semi"},
      {ParallelismKind::ConcircularTwoSemi, "concircular-2-semi"}};
  return names;
}

MultilinearInput sigma_form(const SigmaGeometry& s) {
  return {2, s.p, [&s](std::span<const Vec> a) { return s.sigma_of(a[0], a[1]); }};
}

}  // namespace

ParallelismKind parse_parallelism_kind(std::string_view name) {
  for (const auto& [k, n] : kind_names())
    if (n == name) return k;
  std::string msg = "unknown parallelism kind '" + std::string(name) + "'; valid kinds:";
  for (const auto& kn : kind_names()) msg += " " + kn.second;
  throw CatalogError(msg);
}

std::string to_string(ParallelismKind kind) {
  for (const auto& [k, n] : kind_names())
    if (k == kind) return n;
  return "unknown";
}

int parallelism_arity(ParallelismKind kind) {
  switch (kind) {
    case ParallelismKind::Parallel:
      return 3;
    case ParallelismKind::TwoSemi:
    case ParallelismKind::ConcircularTwoSemi:
      return 5;
    default:
      return 4;
  }
}

Vec parallelism_expression(ParallelismKind kind, const SigmaGeometry& s, double l1, std::span<const Vec> a) {
  switch (kind) {
    case ParallelismKind::Parallel:
      return s.nabla_sigma_of(a[0], a[1], a[2]);
    case ParallelismKind::Semi:
      return r_dot_sigma(s, a[0], a[1], a[2], a[3]);
    case ParallelismKind::TwoSemi:
      return r_dot_nabla_sigma(s, a[0], a[1], a[2], a[3], a[4]);
    case ParallelismKind::ConcircularSemi:
      return c_dot_sigma(s, a[0], a[1], a[2], a[3]);
    case ParallelismKind::ConcircularTwoSemi:
      return c_dot_nabla_sigma(s, a[0], a[1], a[2], a[3], a[4]);
    case ParallelismKind::Pseudo:
    case ParallelismKind::RicciPseudo: {
      const BilinearInput e = kind == ParallelismKind::Pseudo ? metric_input(s) : ricci_input(s);
      const Vec uv[] = {a[2], a[3]};
      const Mat q = q_operator(e, sigma_form(s), uv, a[0], a[1]);
      return r_dot_sigma(s, a[0], a[1], a[2], a[3]) - l1 * q.row(0).transpose();
    }
  }
  return {};
}

ParallelismResidual parallelism_residual(ParallelismKind kind, const SigmaField& sigma, double l1, int samples,
                                         std::uint64_t seed, Execution exec) {
  const auto points = sample_points(sigma.box(), samples, seed);
  const int arity = parallelism_arity(kind);
  const bool pseudo = kind == ParallelismKind::Pseudo || kind == ParallelismKind::RicciPseudo;
  struct PointMax {
    double all = 0.0, xi = 0.0;
  };
  const auto per_point = map_indexed<PointMax>(
      points.size(),
      [&](std::size_t i) {
        const SigmaGeometry s = sigma.at(points[i]);
        const auto frame = argument_frame(s);
        const int xi = static_cast<int>(frame.size()) - 1;
        PointMax pm;
        std::vector<Vec> args(arity);
        for (const auto& t : frame_tuples(static_cast<int>(frame.size()), arity, xi, 64, seed + i)) {
          for (int k = 0; k < arity; ++k) args[k] = frame[t[k]];
          const Vec r = parallelism_expression(kind, s, l1, args);
          const double v = r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
          pm.all = std::max(pm.all, v);
          if (pseudo && t[0] == xi && t[3] == xi) pm.xi = std::max(pm.xi, v);
        }
        return pm;
      },
      exec);
  ParallelismResidual out;
  out.kind = kind;
  out.L1 = l1;
  for (const auto& pm : per_point) {
    out.value = std::max(out.value, pm.all);
    out.xi_slot = std::max(out.xi_slot, pm.xi);
  }
  return out;
}

ParallelismResidual parallelism_residual(std::string_view kind, const SigmaField& sigma, double l1, int samples,
                                         std::uint64_t seed, Execution exec) {
  return parallelism_residual(parse_parallelism_kind(kind), sigma, l1, samples, seed, exec);
}

}  // namespace gssf
