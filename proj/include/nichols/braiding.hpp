#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nichols/exactlin/linalg.hpp"
#include "nichols/exactlin/matrix.hpp"

namespace nichols {

inline constexpr std::size_t kMaxDimension = 8;
inline constexpr std::size_t kMaxDegree = 12;

/// n^d; throws DegreeCap when d exceeds kMaxDegree.
std::size_t tensor_dimension(std::size_t n, std::size_t d);

/// A braided vector space (V, c) with a validated braiding.
///
/// Basis conventions shared by every module: e_{i1} (x) ... (x) e_{id} has
/// index sum_k i_k n^{d-k} in V^{(x)d}, and c(row, col) is the coefficient of
/// e_k (x) e_l (row k*n + l) in c(e_i (x) e_j) (column i*n + j).
template <FieldScalar T>
class BraidedSpace {
 public:
  /// c(x (x) y) = y (x) x.
  static BraidedSpace flip(std::size_t n, const FieldSpec& field);
  /// c(e_i (x) e_j) = q_ij e_j (x) e_i; throws ZeroParameter if some q_ij = 0.
  static BraidedSpace diagonal(const Matrix<T>& q);
  /// Throws NotInvertible or YangBaxterViolation.
  static BraidedSpace from_matrix(std::size_t n, Matrix<T> c);

  const FieldSpec& field() const noexcept { return c_.field(); }
  std::size_t dimension() const noexcept { return n_; }
  const Matrix<T>& braiding() const noexcept { return c_; }

  /// Nonzero entries of c as (row, column, value).
  struct Entry {
    std::size_t row;
    std::size_t col;
    T value;
  };
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  friend bool operator==(const BraidedSpace& a, const BraidedSpace& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  BraidedSpace(std::size_t n, Matrix<T> c);

  std::size_t n_;
  Matrix<T> c_;
  std::vector<Entry> entries_;
};

/// Matrix of c_i = I^{(x)(i-1)} (x) c (x) I^{(x)(d-i-1)} on V^{(x)d}, 1 <= i <= d-1.
template <FieldScalar T>
Matrix<T> braid_generator(const BraidedSpace<T>& space, std::size_t degree, std::size_t index);

/// In place m <- c_i m, touching only nonzero entries.
template <FieldScalar T>
void apply_generator(const BraidedSpace<T>& space, std::size_t degree, std::size_t index, Matrix<T>& m);

/// c_{w1} c_{w2} ... c_{wk}; the last letter acts first.
template <FieldScalar T>
Matrix<T> braid_word(const BraidedSpace<T>& space, std::size_t degree, std::span<const std::size_t> word);

/// Sum of the lifts of several words, evaluated column by column on sparse
/// tensors.
template <FieldScalar T>
Matrix<T> braid_word_sum(const BraidedSpace<T>& space, std::size_t degree,
                         const std::vector<std::vector<std::size_t>>& words);

extern template class BraidedSpace<Rational>;
extern template class BraidedSpace<ModP>;
extern template Matrix<Rational> braid_generator(const BraidedSpace<Rational>&, std::size_t, std::size_t);
extern template Matrix<ModP> braid_generator(const BraidedSpace<ModP>&, std::size_t, std::size_t);
extern template void apply_generator(const BraidedSpace<Rational>&, std::size_t, std::size_t, Matrix<Rational>&);
extern template void apply_generator(const BraidedSpace<ModP>&, std::size_t, std::size_t, Matrix<ModP>&);
extern template Matrix<Rational> braid_word(const BraidedSpace<Rational>&, std::size_t, std::span<const std::size_t>);
extern template Matrix<ModP> braid_word(const BraidedSpace<ModP>&, std::size_t, std::span<const std::size_t>);
extern template Matrix<Rational> braid_word_sum(const BraidedSpace<Rational>&, std::size_t,
                                                const std::vector<std::vector<std::size_t>>&);
extern template Matrix<ModP> braid_word_sum(const BraidedSpace<ModP>&, std::size_t,
                                            const std::vector<std::vector<std::size_t>>&);

}  // namespace nichols
