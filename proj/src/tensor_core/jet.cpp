#include "gssf/tensor_core/jet.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace gssf {

namespace {

int lookup_key(const Exponent& e, int nvars, int order) {
  int key = 0;
  for (int v = 0; v < nvars; ++v) key = key * (order + 1) + e[v];
  return key;
}

void enumerate(int nvars, int order, int var, int remaining, Exponent& cur,
               std::vector<Exponent>& out) {
  if (var == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = static_cast<std::uint8_t>(e);
    enumerate(nvars, order, var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

}  // namespace

struct JetSpaceRegistry {
  std::array<std::array<std::unique_ptr<JetSpace>, kMaxOrder + 1>, kMaxVars + 1> spaces;
  JetSpaceRegistry() {
    for (int n = 0; n <= kMaxVars; ++n)
      for (int k = 0; k <= kMaxOrder; ++k) spaces[n][k].reset(new JetSpace(n, k));
    for (int n = 0; n <= kMaxVars; ++n)
      for (int k = 1; k <= kMaxOrder; ++k) {
        JetSpace& hi = *spaces[n][k];
        const JetSpace& lo = *spaces[n][k - 1];
        for (int v = 0; v < n; ++v) {
          for (int i = 0; i < hi.size(); ++i) {
            Exponent e = hi.exponent(i);
            if (e[v] == 0) continue;
            double f = e[v];
            e[v] -= 1;
            int to = lo.index_of(e);
            if (to < 0) continue;
            hi.deriv_[v].push_back({static_cast<std::uint8_t>(i),
                                    static_cast<std::uint8_t>(to), f});
          }
        }
      }
  }
};

JetSpace::JetSpace(int nvars, int order) : nvars_(nvars), order_(order) {
  // Graded ordering: all degree-0, then degree-1, ... monomials.
  for (int d = 0; d <= order; ++d) {
    std::vector<Exponent> level;
    Exponent cur{};
    enumerate(nvars, order, 0, d, cur, level);
    for (auto& e : level)
      if (total_degree(e) == d) exps_.push_back(e);
  }
  int table = 1;
  for (int v = 0; v < nvars; ++v) table *= (order + 1);
  lookup_.assign(table, -1);
  for (int i = 0; i < size(); ++i) {
    lookup_[lookup_key(exps_[i], nvars, order)] = i;
    degree_.push_back(total_degree(exps_[i]));
    double w = 1.0;
    for (int v = 0; v < nvars; ++v)
      for (int f = 2; f <= exps_[i][v]; ++f) w *= f;
    weight_.push_back(w);
  }
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      if (degree_[a] + degree_[b] > order) continue;
      Exponent e{};
      for (int v = 0; v < nvars; ++v) e[v] = exps_[a][v] + exps_[b][v];
      mul_.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                      static_cast<std::uint8_t>(index_of(e))});
    }
}

int JetSpace::index_of(const Exponent& e) const {
  int deg = 0;
  for (int v = 0; v < nvars_; ++v) deg += e[v];
  for (int v = nvars_; v < kMaxVars; ++v)
    if (e[v] != 0) return -1;
  if (deg > order_) return -1;
  return lookup_[lookup_key(e, nvars_, order_)];
}

const JetSpace& JetSpace::get(int nvars, int order) {
  static const JetSpaceRegistry registry;
  if (nvars < 0 || nvars > kMaxVars || order < 0 || order > kMaxOrder)
    throw std::out_of_range("jet space (" + std::to_string(nvars) + ", " +
                            std::to_string(order) + ") outside supported range");
  return *registry.spaces[nvars][order];
}

ScalarJet ScalarJet::constant(const JetSpace& space, double v) {
  ScalarJet j;
  j.space_ = &space;
  j.c_[0] = v;
  return j;
}

ScalarJet ScalarJet::variable(const JetSpace& space, int var, double value) {
  ScalarJet j = constant(space, value);
  if (space.order() >= 1) j.c_[1 + var] = 1.0;
  return j;
}

double ScalarJet::partial(std::span<const int> vars) const {
  if (!space_) return vars.empty() ? c_[0] : 0.0;
  Exponent e{};
  for (int v : vars) e[v] += 1;
  int idx = space_->index_of(e);
  if (idx < 0) throw std::out_of_range("partial derivative above jet order");
  return c_[idx] * space_->factorial_weight(idx);
}

double ScalarJet::partial(int i) const {
  const int v[] = {i};
  return partial(v);
}
double ScalarJet::partial(int i, int j) const {
  const int v[] = {i, j};
  return partial(v);
}
double ScalarJet::partial(int i, int j, int k) const {
  const int v[] = {i, j, k};
  return partial(v);
}

bool ScalarJet::all_finite() const {
  for (int i = 0; i < used(); ++i)
    if (!std::isfinite(c_[i])) return false;
  return true;
}

ScalarJet ScalarJet::derivative(int var) const {
  if (!space_ || space_->order() == 0) {
    ScalarJet z;
    if (space_) z.space_ = space_;
    return z;
  }
  ScalarJet out;
  out.space_ = &JetSpace::get(space_->nvars(), space_->order() - 1);
  for (const auto& d : space_->deriv_table(var)) out.c_[d.to] += d.factor * c_[d.from];
  return out;
}

ScalarJet ScalarJet::truncate(int order) const {
  if (!space_ || order >= space_->order()) return *this;
  ScalarJet out;
  out.space_ = &JetSpace::get(space_->nvars(), order);
  // Graded layout: the lower space is a prefix.
  std::copy_n(c_.begin(), out.space_->size(), out.c_.begin());
  return out;
}

void ScalarJet::adopt(const ScalarJet& o) {
  if (!o.space_) return;
  if (!space_) {
    space_ = o.space_;
    return;
  }
  if (space_->nvars() != o.space_->nvars())
    throw std::invalid_argument("jet arithmetic across different variable counts");
  if (o.space_->order() < space_->order()) *this = truncate(o.space_->order());
}

ScalarJet& ScalarJet::operator+=(const ScalarJet& o) {
  adopt(o);
  for (int i = 0; i < used(); ++i) c_[i] += o.c_[i];
  return *this;
}

ScalarJet& ScalarJet::operator-=(const ScalarJet& o) {
  adopt(o);
  for (int i = 0; i < used(); ++i) c_[i] -= o.c_[i];
  return *this;
}

ScalarJet& ScalarJet::operator*=(double s) {
  for (int i = 0; i < used(); ++i) c_[i] *= s;
  return *this;
}

ScalarJet& ScalarJet::operator*=(const ScalarJet& o) {
  if (!o.space_) return *this *= o.c_[0];
  if (!space_) {
    double s = c_[0];
    *this = o;
    return *this *= s;
  }
  adopt(o);
  std::array<double, kMaxCoeffs> r{};
  for (const auto& m : space_->mul_table()) r[m.out] += c_[m.a] * o.c_[m.b];
  std::copy_n(r.begin(), used(), c_.begin());
  return *this;
}

ScalarJet& ScalarJet::operator/=(const ScalarJet& o) {
  if (!o.space_) return *this *= 1.0 / o.c_[0];
  return *this *= (1.0 / o);
}

ScalarJet operator-(ScalarJet a) { return a *= -1.0; }

ScalarJet ScalarJet::apply(std::span<const double> derivs) const {
  const int k = order();
  ScalarJet h = *this;
  h.c_[0] = 0.0;
  ScalarJet out = *this;
  std::fill(out.c_.begin(), out.c_.end(), 0.0);
  out.c_[0] = derivs[0];
  ScalarJet power = h;
  double fact = 1.0;
  for (int n = 1; n <= k && n < static_cast<int>(derivs.size()); ++n) {
    fact *= n;
    out += power * (derivs[n] / fact);
    if (n < k) power *= h;
  }
  return out;
}

ScalarJet operator/(double s, const ScalarJet& a) {
  const double x = a.value();
  const double d[] = {1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x), -6.0 / (x * x * x * x)};
  return a.apply(d) * s;
}

ScalarJet exp(const ScalarJet& a) {
  const double e = std::exp(a.value());
  const double d[] = {e, e, e, e};
  return a.apply(d);
}

ScalarJet log(const ScalarJet& a) {
  const double x = a.value();
  const double d[] = {std::log(x), 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x)};
  return a.apply(d);
}

ScalarJet sqrt(const ScalarJet& a) {
  const double x = a.value();
  const double s = std::sqrt(x);
  const double d[] = {s, 0.5 / s, -0.25 / (s * x), 0.375 / (s * x * x)};
  return a.apply(d);
}

ScalarJet sin(const ScalarJet& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  const double d[] = {s, c, -s, -c};
  return a.apply(d);
}

ScalarJet cos(const ScalarJet& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  const double d[] = {c, -s, -c, s};
  return a.apply(d);
}

ScalarJet pow(const ScalarJet& a, double p) {
  const double x = a.value();
  const double d[] = {std::pow(x, p), p * std::pow(x, p - 1),
                      p * (p - 1) * std::pow(x, p - 2),
                      p * (p - 1) * (p - 2) * std::pow(x, p - 3)};
  return a.apply(d);
}

ScalarJet square(const ScalarJet& a) { return a * a; }

ScalarJet compose(const ScalarJet& poly, std::span<const ScalarJet> args) {
  if (!poly.space()) return ScalarJet(poly.value());
  const JetSpace& ps = *poly.space();
  if (static_cast<int>(args.size()) != ps.nvars())
    throw std::invalid_argument("compose: argument count does not match polynomial variables");
  if (args.empty()) return ScalarJet(poly.value());
  const int order = std::min(ps.order(), args[0].order());
  // powers[v][e] = (args[v] - value)^e
  std::vector<std::array<ScalarJet, kMaxOrder + 1>> powers(args.size());
  for (std::size_t v = 0; v < args.size(); ++v) {
    ScalarJet h = args[v].truncate(order);
    h -= h.value();
    powers[v][0] = ScalarJet::constant(*h.space(), 1.0);
    for (int e = 1; e <= order; ++e) powers[v][e] = powers[v][e - 1] * h;
  }
  ScalarJet out = ScalarJet::constant(*powers[0][0].space(), 0.0);
  for (int i = 0; i < ps.size(); ++i) {
    if (ps.degree(i) > order || poly.coeff(i) == 0.0) continue;
    const Exponent& e = ps.exponent(i);
    ScalarJet term = ScalarJet::constant(*out.space(), poly.coeff(i));
    for (int v = 0; v < ps.nvars(); ++v)
      if (e[v]) term *= powers[v][e[v]];
    out += term;
  }
  return out;
}

void pin(std::span<ScalarJet> jets, const JetSpace& space) {
  for (auto& j : jets)
    if (!j.space()) j += ScalarJet::constant(space, 0.0);
}

std::vector<ScalarJet> jet_point(std::span<const double> p, int order) {
  const JetSpace& space = JetSpace::get(static_cast<int>(p.size()), order);
  std::vector<ScalarJet> x;
  x.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    x.push_back(ScalarJet::variable(space, static_cast<int>(i), p[i]));
  return x;
}

}  // namespace gssf
