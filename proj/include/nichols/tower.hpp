#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nichols/bialgebra.hpp"

namespace nichols {

struct StageReport {
  std::size_t index = 0;
  /// Hilbert series of the stage the step started from.
  std::vector<std::size_t> hilbert;
  /// Dimensions of the degree-d primitives found, d = 2..D.
  std::vector<std::size_t> new_relation_dims;
  /// The quotient map to the next stage is invertible up to D.
  bool iso = false;

  friend bool operator==(const StageReport&, const StageReport&) = default;
};

template <FieldScalar T>
struct StepResult {
  GradedQuotient<T> next;
  StageReport report;
};

/// One stage of the tower: divide out the ideal generated by the
/// primitives of degrees 2..D. When none exist the output equals the input.
template <FieldScalar T>
StepResult<T> step(const GradedQuotient<T>& s, std::size_t index = 0);

/// A finished step as stored by a cache: the report plus the relations of
/// the stage it produced.
template <FieldScalar T>
struct CachedStep {
  StageReport report;
  std::vector<Subspace<T>> next_relations;
};

/// Optional persistence for run(); load returns nullopt on a miss.
template <FieldScalar T>
class StageCache {
 public:
  virtual ~StageCache() = default;
  virtual std::optional<CachedStep<T>> load(std::size_t index) = 0;
  virtual void store(std::size_t index, const CachedStep<T>& entry) = 0;
};

template <FieldScalar T>
struct RankReport {
  std::vector<StageReport> stages;
  /// Index of the first stage whose step is an isomorphism up to D. This is
  /// relative to the cutoff and bounds the untruncated rank from below.
  std::optional<std::size_t> rank_le_cutoff;
  bool stabilized = false;
  /// The stabilized quotient, or the last stage reached.
  GradedQuotient<T> final;
  /// Stage k is quotients[k]; quotients.back() is `final`.
  std::vector<GradedQuotient<T>> quotients;
  std::optional<bool> oracle_match;
};

/// Iterate step() from the free object until a step is an isomorphism or
/// max_iter steps were taken. max_iter = 0 yields the free object,
/// unstabilized.
template <FieldScalar T>
RankReport<T> run(const BraidedSpace<T>& space, std::size_t cutoff, std::size_t max_iter,
                  StageCache<T>* cache = nullptr);

/// iso iff all new_relation_dims vanish, and no non-iso stage after an iso one.
bool stage_reports_consistent(const std::vector<StageReport>& stages);

/// The truncated primitive space of a stage, sum over 1 <= d <= D, in
/// quotient coordinates.
template <FieldScalar T>
struct PrimitiveSpace {
  /// Entry d - 1 for d = 1..D.
  std::vector<std::size_t> degree_dims;
  /// total_dimension x w: basis of the primitives.
  Matrix<T> inclusion;
  /// n x w: degree-one projection of primitives.
  Matrix<T> gamma;
  /// w x n: V into the degree-one primitives.
  Matrix<T> eta;

  std::size_t dim() const noexcept { return inclusion.cols(); }
};

template <FieldScalar T>
PrimitiveSpace<T> primitive_space(const GradedQuotient<T>& s);

/// gamma * eta = Id_V; holds iff R_1 = 0.
template <FieldScalar T>
bool gamma_retraction_check(const GradedQuotient<T>& s);

/// e = eta * gamma is idempotent on the primitive space.
template <FieldScalar T>
bool idempotent_check(const GradedQuotient<T>& s);

/// Unit law action * eta = Id_V for an action on the truncated primitives of
/// the free object. Associativity is not checked.
template <FieldScalar T>
bool em_unit_check(const BraidedSpace<T>& space, std::size_t cutoff, const Matrix<T>& action);

/// The two-layer monad data on V. W is the truncated primitive space of
/// T(V) (V-degree <= D_inner); MM is the primitive space of T(W) in
/// W-degree <= D_outer and V-degree <= D_inner.
template <FieldScalar T>
struct MonadLayers {
  /// V-degree of each W basis vector.
  std::vector<std::size_t> w_degrees;
  /// W basis vectors as elements of V^{(x)deg}.
  std::vector<std::vector<T>> w_basis;
  /// Braiding of T(V) restricted to W (x) W.
  Matrix<T> w_braiding;
  /// W-degree of each MM basis vector.
  std::vector<std::size_t> mm_degrees;
  /// MM basis vectors as elements of W^{(x)deg}.
  std::vector<std::vector<T>> mm_basis;
  /// w x mm: concatenation T(W) -> T(V) on primitives.
  Matrix<T> multiplication;
  /// w x mm: W-degree-one projection (gamma at MV).
  Matrix<T> gamma_outer;
  /// w x mm: T(gamma) restricted to primitives (M applied to gamma).
  Matrix<T> gamma_lifted;
  /// n x w.
  Matrix<T> gamma;
  /// w x n.
  Matrix<T> unit;
};

/// Throws EnvelopeExceeded beyond desk-scale sizes and InvariantViolation
/// if a structural fact the construction relies on fails.
template <FieldScalar T>
MonadLayers<T> monad_layers(const BraidedSpace<T>& space, std::size_t outer_cutoff, std::size_t inner_cutoff);

/// gamma * unit = Id, gamma * multiplication = gamma * gamma_outer and
/// gamma * gamma_lifted = gamma * gamma_outer.
template <FieldScalar T>
bool monad_augmentation_check(const BraidedSpace<T>& space, std::size_t outer_cutoff, std::size_t inner_cutoff);

#define NICHOLS_TOWER_EXTERN(T)                                                                                    \
  extern template StepResult<T> step(const GradedQuotient<T>&, std::size_t);                                       \
  extern template RankReport<T> run(const BraidedSpace<T>&, std::size_t, std::size_t, StageCache<T>*);             \
  extern template PrimitiveSpace<T> primitive_space(const GradedQuotient<T>&);                                     \
  extern template bool gamma_retraction_check(const GradedQuotient<T>&);                                           \
  extern template bool idempotent_check(const GradedQuotient<T>&);                                                 \
  extern template bool em_unit_check(const BraidedSpace<T>&, std::size_t, const Matrix<T>&);                       \
  extern template MonadLayers<T> monad_layers(const BraidedSpace<T>&, std::size_t, std::size_t);                   \
  extern template bool monad_augmentation_check(const BraidedSpace<T>&, std::size_t, std::size_t);

NICHOLS_TOWER_EXTERN(Rational)
NICHOLS_TOWER_EXTERN(ModP)
#undef NICHOLS_TOWER_EXTERN

}  // namespace nichols
