#pragma once

// Truncated multivariate Taylor arithmetic ("jets").
//
// A ScalarJet holds the Taylor coefficients of a scalar function around a
// point, in up to kMaxVars variables and up to kMaxOrder total degree.
// Coefficients are stored densely per monomial, so mixed partials are
// symmetric by construction.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace gssf {

inline constexpr int kMaxVars = 7;
inline constexpr int kMaxOrder = 3;
// C(kMaxVars + kMaxOrder, kMaxOrder)
inline constexpr int kMaxCoeffs = 120;

using Exponent = std::array<std::uint8_t, kMaxVars>;

/// Monomial layout and product tables for a fixed (nvars, order) pair.
class JetSpace {
 public:
  static const JetSpace& get(int nvars, int order);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  int size() const { return static_cast<int>(exps_.size()); }
  const Exponent& exponent(int idx) const { return exps_[idx]; }
  int degree(int idx) const { return degree_[idx]; }
  // Index of the monomial with the given exponent, or -1 if above order.
  int index_of(const Exponent& e) const;
  // alpha! for the monomial; partial derivative = alpha! * coefficient.
  double factorial_weight(int idx) const { return weight_[idx]; }

  struct MulEntry {
    std::uint8_t a, b, out;
  };
  const std::vector<MulEntry>& mul_table() const { return mul_; }

  struct DerivEntry {
    std::uint8_t from, to;
    double factor;
  };
  // Maps this space onto (nvars, order - 1) for d/dx_var.
  const std::vector<DerivEntry>& deriv_table(int var) const { return deriv_[var]; }

 private:
  JetSpace(int nvars, int order);
  friend struct JetSpaceRegistry;

  int nvars_;
  int order_;
  std::vector<Exponent> exps_;
  std::vector<int> degree_;
  std::vector<double> weight_;
  std::vector<int> lookup_;
  std::vector<MulEntry> mul_;
  std::array<std::vector<DerivEntry>, kMaxVars> deriv_;
};

class ScalarJet {
 public:
  // Default jet is the untyped constant 0; it adopts the space of the
  // first jet it is combined with.
  ScalarJet() { c_.fill(0.0); }
  explicit ScalarJet(double constant) : ScalarJet() { c_[0] = constant; }

  static ScalarJet constant(const JetSpace& space, double v);
  static ScalarJet variable(const JetSpace& space, int var, double value);

  const JetSpace* space() const { return space_; }
  int nvars() const { return space_ ? space_->nvars() : 0; }
  int order() const { return space_ ? space_->order() : 0; }

  double value() const { return c_[0]; }
  double coeff(int idx) const { return c_[idx]; }
  double& coeff(int idx) { return c_[idx]; }

  double partial(int i) const;
  double partial(int i, int j) const;
  double partial(int i, int j, int k) const;
  // Partial derivative of the given multi-index (variable list, any order).
  double partial(std::span<const int> vars) const;

  bool all_finite() const;

  ScalarJet derivative(int var) const;
  ScalarJet truncate(int order) const;

  ScalarJet& operator+=(const ScalarJet& o);
  ScalarJet& operator-=(const ScalarJet& o);
  ScalarJet& operator*=(const ScalarJet& o);
  ScalarJet& operator/=(const ScalarJet& o);
  ScalarJet& operator+=(double s) { c_[0] += s; return *this; }
  ScalarJet& operator-=(double s) { c_[0] -= s; return *this; }
  ScalarJet& operator*=(double s);
  ScalarJet& operator/=(double s) { return *this *= 1.0 / s; }

  friend ScalarJet operator-(ScalarJet a);

  // f(a) from the derivatives f(a0), f'(a0), f''(a0), f'''(a0).
  ScalarJet apply(std::span<const double> derivs) const;

 private:
  int used() const { return space_ ? space_->size() : 1; }
  void adopt(const ScalarJet& o);

  const JetSpace* space_ = nullptr;
  std::array<double, kMaxCoeffs> c_;
};

inline ScalarJet operator+(ScalarJet a, const ScalarJet& b) { return a += b; }
inline ScalarJet operator-(ScalarJet a, const ScalarJet& b) { return a -= b; }
inline ScalarJet operator*(ScalarJet a, const ScalarJet& b) { return a *= b; }
inline ScalarJet operator/(ScalarJet a, const ScalarJet& b) { return a /= b; }
inline ScalarJet operator+(ScalarJet a, double s) { return a += s; }
inline ScalarJet operator+(double s, ScalarJet a) { return a += s; }
inline ScalarJet operator-(ScalarJet a, double s) { return a -= s; }
inline ScalarJet operator-(double s, ScalarJet a) { return (-a) += s; }
inline ScalarJet operator*(ScalarJet a, double s) { return a *= s; }
inline ScalarJet operator*(double s, ScalarJet a) { return a *= s; }
inline ScalarJet operator/(ScalarJet a, double s) { return a /= s; }
ScalarJet operator/(double s, const ScalarJet& a);

ScalarJet exp(const ScalarJet& a);
ScalarJet log(const ScalarJet& a);
ScalarJet sqrt(const ScalarJet& a);
ScalarJet sin(const ScalarJet& a);
ScalarJet cos(const ScalarJet& a);
ScalarJet pow(const ScalarJet& a, double p);
ScalarJet square(const ScalarJet& a);

/// Evaluates the Taylor polynomial `poly` (expanded at the values of
/// `args`) at the jets `args`. Result order is min(poly order, args order).
ScalarJet compose(const ScalarJet& poly, std::span<const ScalarJet> args);

/// Gives untyped (constant) jets the space `space`.
void pin(std::span<ScalarJet> jets, const JetSpace& space);

/// Coordinate jets x_i = p_i + dx_i in (p.size(), order).
std::vector<ScalarJet> jet_point(std::span<const double> p, int order);

}  // namespace gssf
