#include <doctest.h>

#include "gssf/tensor_core/errors.hpp"
#include "gssf/tensor_core/field.hpp"
#include "gssf/tensor_core/linalg.hpp"
#include "support/finite_difference.hpp"
#include "support/random.hpp"

#include <cmath>

using namespace gssf;
using gssf::testing::random_spd;
using gssf::testing::random_tensor;
using gssf::testing::random_vec;

TEST_CASE("jet spaces have binomial sizes") {
  CHECK(JetSpace::get(7, 3).size() == 120);
  CHECK(JetSpace::get(5, 2).size() == 21);
  CHECK(JetSpace::get(3, 0).size() == 1);
  CHECK_THROWS_AS(JetSpace::get(8, 1), std::out_of_range);
}

TEST_CASE("jet product rule and Schwarz symmetry") {
  const double p[] = {0.3, -0.2, 0.7};
  auto x = jet_point(p, 3);
  ScalarJet f = exp(x[0] * x[1]) * sin(x[2]) + x[0] * x[0] * x[1];
  // d/dx0 d/dx1 of exp(x0 x1) sin(x2) + x0^2 x1
  const double e = std::exp(p[0] * p[1]);
  const double want = e * (1 + p[0] * p[1]) * std::sin(p[2]) + 2 * p[0];
  CHECK(f.partial(0, 1) == doctest::Approx(want).epsilon(1e-14));
  CHECK(f.partial(0, 1) == f.partial(1, 0));
  CHECK(f.partial(0, 1, 2) == f.partial(2, 1, 0));
  CHECK(f.partial(0, 0, 1) == doctest::Approx(e * p[1] * (2 + p[0] * p[1]) * std::sin(p[2]) + 2)
                                  .epsilon(1e-13));
}

TEST_CASE("jet reciprocal, sqrt and log agree with closed forms") {
  const double p[] = {1.7};
  auto x = jet_point(p, 3);
  ScalarJet r = 1.0 / x[0];
  CHECK(r.partial(0, 0, 0) == doctest::Approx(-6.0 / std::pow(1.7, 4)));
  ScalarJet s = sqrt(x[0]) * sqrt(x[0]);
  CHECK(s.partial(0) == doctest::Approx(1.0));
  CHECK(std::abs(s.partial(0, 0)) < 1e-14);
  ScalarJet l = log(exp(x[0]));
  CHECK(l.partial(0) == doctest::Approx(1.0));
  CHECK(std::abs(l.partial(0, 0, 0)) < 1e-12);
}

TEST_CASE("derivative lowers order and truncate keeps the prefix") {
  const double p[] = {0.5, 0.1};
  auto x = jet_point(p, 3);
  ScalarJet f = x[0] * x[0] * x[0] * x[1];
  ScalarJet d = f.derivative(0);
  CHECK(d.order() == 2);
  CHECK(d.partial(0, 1) == doctest::Approx(6 * p[0]));
  CHECK(f.truncate(1).partial(1) == doctest::Approx(p[0] * p[0] * p[0]));
}

TEST_CASE("compose reproduces direct evaluation") {
  // poly = Taylor of g(y0,y1) = exp(y0) * y1 at y = E(q0); args = E(q)
  const double q[] = {0.2, -0.4};
  auto qj = jet_point(q, 3);
  std::vector<ScalarJet> e = {sin(qj[0]) + qj[1], qj[0] * qj[1]};
  const double y0[] = {e[0].value(), e[1].value()};
  auto yj = jet_point(y0, 3);
  ScalarJet poly = exp(yj[0]) * yj[1];
  ScalarJet composed = compose(poly, e);
  ScalarJet direct = exp(e[0]) * e[1];
  const auto& space = *direct.space();
  for (int i = 0; i < space.size(); ++i)
    CHECK(composed.coeff(i) == doctest::Approx(direct.coeff(i)).epsilon(1e-13));
}

TEST_CASE("jet matrix inverse matches the derivative of the inverse") {
  const double p[] = {0.4, 0.9};
  auto x = jet_point(p, 2);
  JetMatrix m(2);
  m(0, 0) = 2.0 + x[0] * x[0];
  m(0, 1) = x[0] * x[1];
  m(1, 0) = m(0, 1);
  m(1, 1) = exp(x[1]);
  JetMatrix inv = inverse(m);
  // product must be the identity jet
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      ScalarJet s;
      for (int k = 0; k < 2; ++k) s += m(i, k) * inv(k, j);
      const auto& sp = *s.space();
      CHECK(s.value() == doctest::Approx(i == j ? 1.0 : 0.0));
      for (int c = 1; c < sp.size(); ++c) CHECK(std::abs(s.coeff(c)) < 1e-13);
    }
}

TEST_CASE("contract: trace of identity") {
  TensorValue id = TensorValue::identity(3);
  CHECK(contract(id, 0, 1).entries()[0] == 3.0);
}

TEST_CASE("contract: inverse metric against metric gives the identity") {
  UniformStream rng(7);
  Mat g = random_spd(rng, 4);
  Mat ginv = g.inverse();
  TensorValue up(4, {Variance::Up, Variance::Up});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) up(i, j) = ginv(i, j);
  TensorValue prod = contract(up, 1, TensorValue::bilinear(g), 0);
  CHECK(prod.slots() == std::vector<Variance>{Variance::Up, Variance::Down});
  CHECK((prod.as_matrix() - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("contract: error paths") {
  TensorValue t(3, {Variance::Down, Variance::Down});
  CHECK_THROWS_AS(contract(t, 0, 1), VarianceMismatchError);
  CHECK_THROWS_AS(contract(TensorValue::identity(3), 0, 0), VarianceMismatchError);
  CHECK_THROWS_AS(contract(TensorValue::identity(3), 0, 2), VarianceMismatchError);
}

TEST_CASE("contract is linear (property)") {
  UniformStream rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<Variance> slots = {Variance::Down, Variance::Up, Variance::Down};
    TensorValue a = random_tensor(rng, 4, slots), b = random_tensor(rng, 4, slots);
    const double s = rng.next(-2, 2), r = rng.next(-2, 2);
    TensorValue lhs = contract(s * a + r * b, 1, 2);
    TensorValue rhs = s * contract(a, 1, 2) + r * contract(b, 1, 2);
    CHECK((lhs - rhs).max_abs() < 1e-12);
  }
}

TEST_CASE("metric_adjust: Euclidean lowering is the identity on components") {
  Vec xi(3);
  xi << 0.0, 0.0, 1.0;
  TensorValue eta = metric_adjust(TensorValue::vector(xi), 0, TensorValue::bilinear(Mat::Identity(3, 3)),
                                  IndexDirection::Down);
  CHECK(eta.slots()[0] == Variance::Down);
  CHECK((eta.as_vector() - xi).norm() == 0.0);
}

TEST_CASE("metric_adjust: Kenmotsu structure vector lowers to dt") {
  const double t = 0.37;
  Mat g = Mat::Identity(3, 3);
  g(1, 1) = g(2, 2) = std::exp(2 * t);
  Vec xi = Vec::Unit(3, 0);
  TensorValue eta = metric_adjust(TensorValue::vector(xi), 0, TensorValue::bilinear(g), IndexDirection::Down);
  CHECK((eta.as_vector() - Vec::Unit(3, 0)).norm() < 1e-15);
}

TEST_CASE("metric_adjust round trips (property, 100 tensors)") {
  UniformStream rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 6;
    TensorValue g = TensorValue::bilinear(random_spd(rng, n));
    TensorValue t = random_tensor(rng, n, {Variance::Down, Variance::Down});
    const int slot = trial % 2;
    TensorValue back = metric_adjust(metric_adjust(t, slot, g, IndexDirection::Up), slot, g,
                                     IndexDirection::Down);
    CHECK((back - t).max_abs() < 1e-12);
  }
}

TEST_CASE("metric_adjust: singular metric and wrong variance") {
  Mat g = Mat::Identity(3, 3);
  g(2, 2) = 0.0;
  TensorValue t(3, {Variance::Down});
  CHECK_THROWS_AS(metric_adjust(t, 0, TensorValue::bilinear(g), IndexDirection::Up),
                  NumericInversionError);
  CHECK_THROWS_AS(metric_adjust(t, 0, TensorValue::bilinear(Mat::Identity(3, 3)), IndexDirection::Down),
                  VarianceMismatchError);
}

TEST_CASE("differentiate_field: constants, exponentials and the Kenmotsu metric") {
  ScalarField c = [](JetPoint) { return ScalarJet(4.2); };
  const std::vector<double> p = {0.1, 0.2, 0.3};
  ScalarJet jc = differentiate_field(c, p, 2);
  for (int i = 0; i < 3; ++i) {
    CHECK(jc.partial(i) == 0.0);
    for (int j = 0; j < 3; ++j) CHECK(jc.partial(i, j) == 0.0);
  }

  ScalarField e2t = [](JetPoint x) { return exp(2.0 * x[0]); };
  const std::vector<double> origin = {0.0, 0.0, 0.0};
  CHECK(differentiate_field(e2t, origin, 1).partial(0) == doctest::Approx(2.0).epsilon(1e-15));

  // g_xx of the Kenmotsu chart at t = 0.3; oracle: central differences.
  const std::vector<double> q = {0.3, -0.5, 0.8};
  const double jet = differentiate_field(e2t, q, 1).partial(0);
  const double fd = gssf::testing::fd_first(e2t, q, 0);
  CHECK(gssf::testing::rel_close(jet, fd, 1e-5));
  CHECK(jet == doctest::Approx(2 * std::exp(0.6)).epsilon(1e-14));
}

TEST_CASE("differentiate_field: non-finite values report the point") {
  ScalarField bad = [](JetPoint x) { return log(x[0]); };
  const std::vector<double> p = {-1.0};
  try {
    differentiate_field(bad, p, 1);
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(e.point() == p);
  }
}

TEST_CASE("sample_points is deterministic and stays in the box") {
  SampleBox box = SampleBox::cube(4, -0.5, 2.0);
  auto a = sample_points(box, 30, 42), b = sample_points(box, 30, 42);
  CHECK(a == b);
  for (const auto& p : a) CHECK(box.contains(p));
  CHECK(sample_points(box, 30, 43) != a);
}
