#pragma once

// Dense point-local tensors. Entry layout is row-major over slots, so the
// entry for indices (i0, i1, ..., ik) sits at ((i0 * dims + i1) * dims + ...).

#include <Eigen/Dense>

#include <initializer_list>
#include <span>
#include <vector>

namespace gssf {

enum class Variance { Up, Down };

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

class TensorValue {
 public:
  TensorValue() = default;
  TensorValue(int dims, std::vector<Variance> slots);

  static TensorValue scalar(double v);
  static TensorValue vector(const Vec& v);       // (1,0)
  static TensorValue covector(const Vec& v);     // (0,1)
  static TensorValue endomorphism(const Mat& m); // (1,1), m(row=up, col=down)
  static TensorValue bilinear(const Mat& m);     // (0,2)
  static TensorValue identity(int dims);

  int dims() const { return dims_; }
  int rank() const { return static_cast<int>(slots_.size()); }
  const std::vector<Variance>& slots() const { return slots_; }
  std::span<const double> entries() const { return entries_; }
  std::span<double> entries() { return entries_; }

  double& at(std::span<const int> idx) { return entries_[offset(idx)]; }
  double at(std::span<const int> idx) const { return entries_[offset(idx)]; }
  template <typename... I>
  double& operator()(I... i) {
    const int idx[] = {static_cast<int>(i)...};
    return at(std::span<const int>(idx, sizeof...(I)));
  }
  template <typename... I>
  double operator()(I... i) const {
    const int idx[] = {static_cast<int>(i)...};
    return at(std::span<const int>(idx, sizeof...(I)));
  }

  // Views for rank <= 2.
  Vec as_vector() const;
  Mat as_matrix() const;

  TensorValue& operator+=(const TensorValue& o);
  TensorValue& operator-=(const TensorValue& o);
  TensorValue& operator*=(double s);

  double max_abs() const;

 private:
  std::size_t offset(std::span<const int> idx) const;
  void check_compatible(const TensorValue& o) const;

  int dims_ = 0;
  std::vector<Variance> slots_;
  std::vector<double> entries_ = {0.0};
};

inline TensorValue operator+(TensorValue a, const TensorValue& b) { return a += b; }
inline TensorValue operator-(TensorValue a, const TensorValue& b) { return a -= b; }
inline TensorValue operator*(double s, TensorValue a) { return a *= s; }

/// Sums an up slot against a down slot; the remaining slots keep their order.
TensorValue contract(const TensorValue& t, int slot_a, int slot_b);

/// Contracts slot `slot_a` of `a` against slot `slot_b` of `b`; result
/// slots are a's remaining followed by b's remaining.
TensorValue contract(const TensorValue& a, int slot_a, const TensorValue& b, int slot_b);

TensorValue tensor_product(const TensorValue& a, const TensorValue& b);

enum class IndexDirection { Up, Down };

/// Raises (with g^{-1}) or lowers (with g) one slot. `g` must be (0,2).
TensorValue metric_adjust(const TensorValue& t, int slot, const TensorValue& g,
                          IndexDirection direction);

}  // namespace gssf
