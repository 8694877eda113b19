#pragma once

// Second fundamental form and the derived normal-bundle data of a
// submanifold, evaluated pointwise in the submanifold chart.
//
// Normal components are taken in an orthonormal normal frame N_1..N_p, so
// a normal vector is a p-vector. Layouts (a, b, c tangent; α, β normal):
//   sigma        (α, a, b)     σ(∂a, ∂b)^α
//   nabla_sigma  (α, a, b, c)  ((∇̃_{∂a} σ)(∂b, ∂c))^α
//   rperp        (α, β, a, b)  (R⊥(∂a, ∂b) N_β)^α
//   dphi         (c, b, a)     ((∇_{∂a} φ) ∂b)^c
//   dxi          (c, a)        (∇_{∂a} ξ)^c

#include "gssf/submanifold/embedding.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gssf {

/// Data only an actual embedding has: ambient frame and cross-checks.
struct EmbeddedFrame {
  Vec y;                        // image point in the ambient chart
  Mat g;                        // ambient metric at y
  Mat tangent;                  // D x m Jacobian columns
  Mat normal;                   // D x p orthonormal normals
  std::vector<Mat> weingarten;  // A_{N_α} from -tan(∇̃ N_α), m x m
  double gauss_split = 0.0;     // |∇̃_a J_b - (J Γ_ab + σ_ab)| max
  double connection = 0.0;      // |tan(∇̃_a J_b) - Γ(h)| max
  double frame = 0.0;           // orthonormality and g(J, N) max
};

struct SigmaGeometry {
  int m = 0;  // submanifold dimension
  int p = 0;  // normal rank
  int n = 0;  // m = 2n + 1 when the submanifold carries a contact structure

  Mat h, hinv;
  TensorValue gamma;      // Γ^c_ab of h
  TensorValue riemann13;  // of h, same convention as curvature_bundle
  Mat ricci;
  double scalar = 0.0;

  // φ, ξ, η restricted to the tangent space and their induced derivatives.
  Mat phi;
  Vec xi, eta;
  TensorValue dphi;
  Mat dxi;
  Mat jn;  // J^α_β = g(φ N_β, N_α)

  std::vector<double> sigma;
  std::vector<double> nabla_sigma;
  std::vector<double> rperp;
  std::vector<double> raw_sigma;  // synthetic provider only, before projection

  // Ambient model data at the image point.
  GssfParams params;
  int ambient_n = 0;
  double ambient_scalar = 0.0;

  std::optional<EmbeddedFrame> embedded;

  double inner(const Vec& a, const Vec& b) const { return a.dot(h * b); }
  Vec sigma_of(const Vec& x, const Vec& y) const;
  Vec nabla_sigma_of(const Vec& x, const Vec& y, const Vec& z) const;  // (∇̃_x σ)(y, z)
  Vec rperp_of(const Vec& x, const Vec& y, const Vec& nu) const;
  Vec curvature(const Vec& x, const Vec& y, const Vec& z) const;       // R(x, y) z of h
  double ricci_of(const Vec& x, const Vec& y) const { return x.dot(ricci * y); }
  double sigma_norm() const;
};

/// A second fundamental form source: either the geometric σ of an
/// embedding, or a seeded synthetic field that satisfies σ(X, ξ) = 0 and
/// σ(X, φY) = J σ(X, Y) by construction. A synthetic field without an
/// embedding lives on the model itself with a flat rank-2 normal bundle.
struct SigmaField {
  enum class Provider { Geometric, Synthetic };

  Provider provider = Provider::Geometric;
  ModelSpace space;
  std::optional<EmbeddingModel> embedding;
  std::uint64_t seed = 0;
  int degree = 2;  // synthetic raw form: polynomial degree in the chart, 0 to 2

  const SampleBox& box() const { return embedding ? embedding->box : space.box; }
  SigmaGeometry at(std::span<const double> q) const;
};

SigmaField geometric_sigma(const EmbeddingModel& e);
SigmaField synth_sigma(std::uint64_t seed, const ModelSpace& space,
                       std::optional<EmbeddingModel> attach = std::nullopt, int degree = 2);

/// Pullback JᵀgJ. Throws ImmersionError when the Jacobian is rank deficient.
TensorValue induced_metric(const EmbeddingModel& e, std::span<const double> q);

/// σ(∂a, ∂b) as ambient vectors, slots (A, a, b) with A ambient.
std::vector<Mat> second_fundamental_form(const EmbeddingModel& e, std::span<const double> q);

/// A_N from the Weingarten formula for a normal vector N given in ambient
/// components. Throws InvalidNormalError when N has a tangential part.
Mat shape_operator(const EmbeddingModel& e, const Vec& normal, std::span<const double> q);

/// (∇̃_X σ)(Y, Z) in normal-frame components.
Vec nabla_sigma(const SigmaField& s, const Vec& x, const Vec& y, const Vec& z,
                std::span<const double> q);

struct InvarianceReport {
  bool invariant = false;
  double xi_normal = 0.0;   // |normal part of ξ|
  double phi_normal = 0.0;  // max |normal part of φ ∂a|
};
InvarianceReport check_invariant(const EmbeddingModel& e, std::span<const double> q);

struct InvariantIdentityReport {
  struct Entry {
    std::string name;
    double residual;
  };
  std::vector<Entry> entries;
  double max_residual = 0.0;
  bool pass = false;

  double residual(std::string_view name) const;
};

/// The six identities an invariant submanifold of a GSSF satisfies:
///   nabla-phi          (∇_X φ)Y = (f1−f3)[g(X,Y)ξ − η(Y)X]
///   nabla-xi           ∇_X ξ = −(f1−f3) φX
///   xi-curvature-xi    R(ξ,X)ξ = (f1−f3)[η(X)ξ − X]
///   ricci-xi           S(X,ξ) = 2n (f1−f3) η(X)
///   sigma-phi          σ(X,φY) = φσ(X,Y)
///   sigma-xi           σ(X,ξ) = 0, also through the Weingarten route
/// Throws PreconditionError when the embedding is not invariant at q.
InvariantIdentityReport invariant_identities(const SigmaField& s, std::span<const double> q, double tol);
InvariantIdentityReport invariant_identities(const EmbeddingModel& e, std::span<const double> q, double tol);

bool is_totally_geodesic(const EmbeddingModel& e, int samples, double tol, std::uint64_t seed = 42);

}  // namespace gssf
