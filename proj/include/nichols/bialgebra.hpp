#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/exactlin/linalg.hpp"
#include "nichols/shuffle.hpp"

namespace nichols {

/// Every mixed coproduct component Delta_{i,j}, i, j >= 1, i + j <= D, of
/// the braided tensor bialgebra T(V, c); computed once per braiding.
template <FieldScalar T>
class CoproductTable {
 public:
  CoproductTable(BraidedSpace<T> space, std::size_t max_degree);

  const BraidedSpace<T>& space() const noexcept { return space_; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  const Matrix<T>& component(std::size_t i, std::size_t j) const;

 private:
  BraidedSpace<T> space_;
  std::size_t max_degree_;
  std::vector<Matrix<T>> components_;
};

/// T(V, c)/I truncated at degree D, with I given by its homogeneous pieces
/// R_d of V^{(x)d}. The quotient of degree d has as basis the non-pivot
/// coordinates of R_d.
template <FieldScalar T>
class GradedQuotient {
 public:
  /// relations[d - 1] is R_d for d = 1..D.
  GradedQuotient(std::shared_ptr<const CoproductTable<T>> coproduct, std::vector<Subspace<T>> relations);

  const BraidedSpace<T>& space() const noexcept { return coproduct_->space(); }
  const FieldSpec& field() const noexcept { return space().field(); }
  std::size_t dimension() const noexcept { return space().dimension(); }
  std::size_t cutoff() const noexcept { return relations_.size(); }

  /// R_d, 1 <= d <= cutoff().
  const Subspace<T>& relations(std::size_t d) const;
  const std::vector<Subspace<T>>& all_relations() const noexcept { return relations_; }

  const CoproductTable<T>& coproduct() const noexcept { return *coproduct_; }
  const std::shared_ptr<const CoproductTable<T>>& coproduct_ptr() const noexcept { return coproduct_; }

  /// dim of the degree-d quotient for d = 0..D (entry 0 is the unit).
  std::vector<std::size_t> hilbert_series() const;

  /// Total truncated space: sum over d <= D of V^{(x)d}/R_d.
  std::size_t total_dimension() const;
  /// First coordinate of the degree-d block in the total space.
  std::size_t degree_offset(std::size_t d) const;

  /// Quotient coordinates of v + R_d, v in V^{(x)d}.
  std::vector<T> to_quotient(std::size_t d, std::span<const T> v) const;
  /// Canonical representative in V^{(x)d} of quotient coordinates.
  std::vector<T> from_quotient(std::size_t d, std::span<const T> coords) const;

  friend bool operator==(const GradedQuotient& a, const GradedQuotient& b) {
    return a.space() == b.space() && a.relations_ == b.relations_;
  }

 private:
  std::shared_ptr<const CoproductTable<T>> coproduct_;
  std::vector<Subspace<T>> relations_;
};

template <FieldScalar T>
struct PrimitiveReport {
  std::size_t degree;
  /// Representatives in V^{(x)d}, meeting R_d trivially, whose classes span
  /// the primitives of degree d.
  Subspace<T> representatives;
};

template <FieldScalar T>
struct AugmentationSplit {
  /// Inclusion of the positive-degree part (the augmentation ideal).
  Matrix<T> zeta;
  /// Retraction with zeta * tau = Id - unit * counit.
  Matrix<T> tau;
};

/// R_i (x) V^{(x)(d-i)} + V^{(x)i} (x) R_{d-i}: the kernel of the projection
/// of V^{(x)i} (x) V^{(x)(d-i)} onto the quotient's degree (i, d-i) part.
template <FieldScalar T>
Subspace<T> mixed_relations(const GradedQuotient<T>& s, std::size_t d, std::size_t i);

template <FieldScalar T>
GradedQuotient<T> free_truncated(const BraidedSpace<T>& space, std::size_t cutoff);

/// Smallest ideal-closed family containing the old relations and the new
/// generators (degree, subspace). The result is re-verified; a failed
/// coideal containment throws InvariantViolation.
template <FieldScalar T>
GradedQuotient<T> ideal_saturate(const GradedQuotient<T>& s,
                                 const std::vector<std::pair<std::size_t, Subspace<T>>>& new_relations);

template <FieldScalar T>
PrimitiveReport<T> primitives(const GradedQuotient<T>& s, std::size_t d);

template <FieldScalar T>
std::vector<std::size_t> hilbert_series(const GradedQuotient<T>& s) {
  return s.hilbert_series();
}

/// (V^{(x)d} (x) R_d + R_d (x) V) within R_{d+1} for all d < D.
template <FieldScalar T>
bool is_ideal_closed(const GradedQuotient<T>& s);
/// Delta_{i,d-i}(R_d) within mixed_relations(s, d, i) for all 0 < i < d <= D.
template <FieldScalar T>
bool is_coideal(const GradedQuotient<T>& s);
/// Throws InvariantViolation naming the failed property.
template <FieldScalar T>
void verify_invariants(const GradedQuotient<T>& s);

/// Degree-one projection omega: total space -> V (n x total).
template <FieldScalar T>
Matrix<T> omega_projection(const GradedQuotient<T>& s);
/// Degree-one inclusion eta: V -> total space (total x n).
template <FieldScalar T>
Matrix<T> degree_one_inclusion(const GradedQuotient<T>& s);
/// Counit epsilon: total space -> k (1 x total), projection to degree 0.
template <FieldScalar T>
Matrix<T> counit(const GradedQuotient<T>& s);
/// Unit u: k -> total space (total x 1).
template <FieldScalar T>
Matrix<T> unit(const GradedQuotient<T>& s);

template <FieldScalar T>
AugmentationSplit<T> augmentation_split(const GradedQuotient<T>& s);

#define NICHOLS_BIALGEBRA_EXTERN(T)                                                                                 \
  extern template class CoproductTable<T>;                                                                          \
  extern template class GradedQuotient<T>;                                                                          \
  extern template Subspace<T> mixed_relations(const GradedQuotient<T>&, std::size_t, std::size_t);                  \
  extern template GradedQuotient<T> free_truncated(const BraidedSpace<T>&, std::size_t);                            \
  extern template GradedQuotient<T> ideal_saturate(const GradedQuotient<T>&,                                        \
                                                   const std::vector<std::pair<std::size_t, Subspace<T>>>&);        \
  extern template PrimitiveReport<T> primitives(const GradedQuotient<T>&, std::size_t);                             \
  extern template bool is_ideal_closed(const GradedQuotient<T>&);                                                   \
  extern template bool is_coideal(const GradedQuotient<T>&);                                                        \
  extern template void verify_invariants(const GradedQuotient<T>&);                                                 \
  extern template Matrix<T> omega_projection(const GradedQuotient<T>&);                                             \
  extern template Matrix<T> degree_one_inclusion(const GradedQuotient<T>&);                                         \
  extern template Matrix<T> counit(const GradedQuotient<T>&);                                                       \
  extern template Matrix<T> unit(const GradedQuotient<T>&);                                                         \
  extern template AugmentationSplit<T> augmentation_split(const GradedQuotient<T>&);

NICHOLS_BIALGEBRA_EXTERN(Rational)
NICHOLS_BIALGEBRA_EXTERN(ModP)
#undef NICHOLS_BIALGEBRA_EXTERN

}  // namespace nichols
