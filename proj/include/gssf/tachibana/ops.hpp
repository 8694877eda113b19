#pragma once

// Tachibana operator Q(E, T), curvature actions on σ and ∇̃σ, and the
// concircular curvature tensor.
//
// Normal-valued quantities are p-vectors in the normal frame of the
// SigmaGeometry they come from. A vector-valued E (such as σ itself) is
// applied component by component, so Q returns one row per E-component.

#include "gssf/submanifold/geometry.hpp"
#include "gssf/tensor_core/parallel.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gssf {

using BilinearFn = std::function<Vec(const Vec&, const Vec&)>;
using MultilinearFn = std::function<Vec(std::span<const Vec>)>;

struct BilinearInput {
  std::string label;  // metric, ricci or sigma
  int dim = 1;        // number of components E takes values in
  BilinearFn eval;
};

BilinearInput metric_input(const SigmaGeometry& s);
BilinearInput ricci_input(const SigmaGeometry& s);
BilinearInput sigma_input(const SigmaGeometry& s);

struct MultilinearInput {
  int arity = 0;
  int dim = 1;  // value dimension
  MultilinearFn eval;
};

/// (X ∧_E Y)Z = E(Y,Z)X − E(X,Z)Y; column α uses component E^α.
Mat wedge(const BilinearInput& e, const Vec& x, const Vec& y, const Vec& z);

/// Q(E,T)(X_1..X_k; X, Y) = −Σ_i T(X_1, .., (X ∧_E Y)X_i, .., X_k).
/// Row α of the result belongs to E^α, columns are T's value components.
Mat q_operator(const BilinearInput& e, const MultilinearInput& t, std::span<const Vec> args,
               const Vec& x, const Vec& y);

/// (R(X,Y)·σ)(U,V) = R⊥(X,Y)σ(U,V) − σ(R(X,Y)U, V) − σ(U, R(X,Y)V).
Vec r_dot_sigma(const SigmaGeometry& s, const Vec& x, const Vec& y, const Vec& u, const Vec& v);

/// (R(X,Y)·∇̃σ)(U,V,W), the four-term expansion; ∇̃σ(U,V,W) = (∇̃_U σ)(V,W).
Vec r_dot_nabla_sigma(const SigmaGeometry& s, const Vec& x, const Vec& y, const Vec& u, const Vec& v,
                      const Vec& w);

/// 𝒞(X,Y)Z = R(X,Y)Z − r/(2n(2n+1)) [g(Y,Z)X − g(X,Z)Y] on the model itself.
Vec concircular(const ModelSpace& space, const Vec& x, const Vec& y, const Vec& z,
                std::span<const double> p);

/// Same tensor on tangent vectors of the submanifold: the induced curvature
/// with the ambient r and n in the constant-curvature block.
Vec concircular(const SigmaGeometry& s, const Vec& x, const Vec& y, const Vec& z);
double concircular_scale(const SigmaGeometry& s);  // r / (2n(2n+1)), ambient

/// (𝒞(X,Y)·σ)(U,V) = R⊥(X,Y)σ(U,V) − σ(𝒞(X,Y)U, V) − σ(U, 𝒞(X,Y)V).
Vec c_dot_sigma(const SigmaGeometry& s, const Vec& x, const Vec& y, const Vec& u, const Vec& v);
Vec c_dot_nabla_sigma(const SigmaGeometry& s, const Vec& x, const Vec& y, const Vec& u, const Vec& v,
                      const Vec& w);

/// Frame used for argument tuples: coordinate basis followed by ξ.
std::vector<Vec> argument_frame(const SigmaGeometry& s);

/// Index tuples into argument_frame: every tuple that contains the ξ
/// index, then `random_count` seeded tuples over the whole frame.
std::vector<std::vector<int>> frame_tuples(int frame_size, int arity, int xi_index, int random_count,
                                           std::uint64_t seed);

enum class ParallelismKind { Parallel, Semi, TwoSemi, Pseudo, RicciPseudo, ConcircularSemi, ConcircularTwoSemi };

/// parallel, semi, 2-semi, pseudo, ricci-pseudo, concircular-semi,
/// concircular-2-semi. Throws CatalogError for anything else.
ParallelismKind parse_parallelism_kind(std::string_view name);
std::string to_string(ParallelismKind kind);

struct ParallelismResidual {
  ParallelismKind kind = ParallelismKind::Parallel;
  double L1 = 0.0;
  double value = 0.0;    // max over points and frame tuples
  double xi_slot = 0.0;  // pseudo kinds: max over tuples with X = V = ξ
};

/// Left-minus-right of the defining expression of a parallelism class at
/// one point, over the given argument vectors.
Vec parallelism_expression(ParallelismKind kind, const SigmaGeometry& s, double l1, std::span<const Vec> args);
int parallelism_arity(ParallelismKind kind);

ParallelismResidual parallelism_residual(ParallelismKind kind, const SigmaField& sigma, double l1,
                                         int samples, std::uint64_t seed = 42,
                                         Execution exec = Execution::Parallel);
ParallelismResidual parallelism_residual(std::string_view kind, const SigmaField& sigma, double l1,
                                         int samples, std::uint64_t seed = 42,
                                         Execution exec = Execution::Parallel);

}  // namespace gssf
