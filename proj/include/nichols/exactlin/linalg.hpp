#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nichols/exactlin/field.hpp"
#include "nichols/exactlin/matrix.hpp"

namespace nichols {

template <FieldScalar T>
struct RowEchelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row-echelon form, same shape as the input (zero rows last).
///
/// Rows are first grouped into blocks with disjoint column support and each
/// block is reduced on its own; since the reduced form is unique the result
/// is identical to eliminating the whole matrix at once. For braidings that
/// preserve a multigrading this keeps elimination inside the homogeneous
/// components. Throws FieldMismatch if an entry is not in m.field().
template <FieldScalar T>
RowEchelon<T> rref(Matrix<T> m);

/// Subspace of the coordinate space of dimension ambient_dim(), stored as its
/// unique reduced row-echelon basis. Equality is basis equality.
template <FieldScalar T>
class Subspace {
 public:
  static Subspace zero(const FieldSpec& field, std::size_t ambient);
  static Subspace full(const FieldSpec& field, std::size_t ambient);
  /// Span of the rows of `generators`.
  static Subspace span(Matrix<T> generators);
  static Subspace span(const FieldSpec& field, std::size_t ambient, const std::vector<std::vector<T>>& vectors);

  const FieldSpec& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  const Matrix<T>& basis() const noexcept { return basis_; }
  std::span<const T> basis_vector(std::size_t k) const { return basis_.row(k); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Non-pivot coordinates, ascending; they index a basis of the quotient
  /// ambient / *this.
  std::vector<std::size_t> complement_coordinates() const;

  /// Canonical representative of v modulo this subspace: zero on every pivot.
  std::vector<T> normal_form(std::span<const T> v) const;
  /// normal_form applied to every row of `rows`.
  Matrix<T> normal_form_rows(const Matrix<T>& rows) const;

  bool contains(std::span<const T> v) const;
  /// other is a subspace of *this.
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

  /// k^left (x) *this (x) k^right, built directly in reduced form.
  Subspace tensor_with_identity(std::size_t left, std::size_t right) const;

 private:
  Subspace(Matrix<T> basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix<T> basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : m x = 0} as a subspace of the column space.
template <FieldScalar T>
Subspace<T> kernel_basis(const Matrix<T>& m);

/// Throws AmbientMismatch when the ambient dimensions differ.
template <FieldScalar T>
Subspace<T> intersect(const Subspace<T>& a, const Subspace<T>& b);

template <FieldScalar T>
Subspace<T> sum(const Subspace<T>& a, const Subspace<T>& b);

template <FieldScalar T>
bool contains(const Subspace<T>& a, std::span<const T> v) {
  return a.contains(v);
}

extern template RowEchelon<Rational> rref(Matrix<Rational>);
extern template RowEchelon<ModP> rref(Matrix<ModP>);
extern template class Subspace<Rational>;
extern template class Subspace<ModP>;
extern template Subspace<Rational> kernel_basis(const Matrix<Rational>&);
extern template Subspace<ModP> kernel_basis(const Matrix<ModP>&);
extern template Subspace<Rational> intersect(const Subspace<Rational>&, const Subspace<Rational>&);
extern template Subspace<ModP> intersect(const Subspace<ModP>&, const Subspace<ModP>&);
extern template Subspace<Rational> sum(const Subspace<Rational>&, const Subspace<Rational>&);
extern template Subspace<ModP> sum(const Subspace<ModP>&, const Subspace<ModP>&);

}  // namespace nichols
