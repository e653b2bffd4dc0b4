#include "nichols/braiding.hpp"

#include <map>
#include <string>
#include <utility>

namespace nichols {

std::size_t tensor_dimension(std::size_t n, std::size_t d) {
  if (d > kMaxDegree) {
    throw DegreeCap("degree " + std::to_string(d) + " exceeds the cap " + std::to_string(kMaxDegree));
  }
  std::size_t out = 1;
  for (std::size_t k = 0; k < d; ++k) out *= n;
  return out;
}

template <FieldScalar T>
BraidedSpace<T> BraidedSpace<T>::flip(std::size_t n, const FieldSpec& field) {
  const std::size_t n2 = n * n;
  Matrix<T> c(field, n2, n2);
  const T one(field, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c(j * n + i, i * n + j) = one;
  }
  return BraidedSpace(n, std::move(c));
}

template <FieldScalar T>
BraidedSpace<T> BraidedSpace<T>::diagonal(const Matrix<T>& q) {
  if (q.rows() != q.cols()) throw DimensionMismatch("diagonal braiding needs a square parameter matrix");
  if (!q.entries_in_field()) throw FieldMismatch("braiding parameters from more than one field");
  const std::size_t n = q.rows();
  Matrix<T> c(q.field(), n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (q(i, j).is_zero()) {
        throw ZeroParameter("diagonal braiding parameter q_" + std::to_string(i) + std::to_string(j) + " is zero");
      }
      c(j * n + i, i * n + j) = q(i, j);
    }
  }
  return BraidedSpace(n, std::move(c));
}

template <FieldScalar T>
BraidedSpace<T> BraidedSpace<T>::from_matrix(std::size_t n, Matrix<T> c) {
  return BraidedSpace(n, std::move(c));
}

template <FieldScalar T>
BraidedSpace<T>::BraidedSpace(std::size_t n, Matrix<T> c) : n_(n), c_(std::move(c)) {
  if (n_ == 0) throw DimensionMismatch("braided vector space of dimension 0");
  if (n_ > kMaxDimension) {
    throw EnvelopeExceeded("dimension " + std::to_string(n_) + " exceeds the cap " + std::to_string(kMaxDimension));
  }
  const std::size_t n2 = n_ * n_;
  if (c_.rows() != n2 || c_.cols() != n2) {
    throw DimensionMismatch("braiding of a " + std::to_string(n_) + "-dimensional space must be " +
                            std::to_string(n2) + "x" + std::to_string(n2));
  }
  if (!c_.entries_in_field()) throw FieldMismatch("braiding entries from more than one field");
  if (rref(c_).rank() != n2) throw NotInvertible("braiding matrix is singular");

  for (std::size_t r = 0; r < n2; ++r) {
    for (std::size_t k = 0; k < n2; ++k) {
      if (!c_(r, k).is_zero()) entries_.push_back({r, k, c_(r, k)});
    }
  }

  const std::size_t lhs_word[] = {1, 2, 1};
  const std::size_t rhs_word[] = {2, 1, 2};
  const Matrix<T> lhs = braid_word(*this, 3, lhs_word);
  const Matrix<T> rhs = braid_word(*this, 3, rhs_word);
  const std::size_t n3 = n2 * n_;
  for (std::size_t x = 0; x < n3; ++x) {
    for (std::size_t r = 0; r < n3; ++r) {
      if (lhs(r, x) == rhs(r, x)) continue;
      const std::array<std::size_t, 3> witness{x / n2, (x / n_) % n_, x % n_};
      throw YangBaxterViolation("braid equation fails on e" + std::to_string(witness[0]) + " (x) e" +
                                    std::to_string(witness[1]) + " (x) e" + std::to_string(witness[2]),
                                witness);
    }
  }
}

template <FieldScalar T>
void apply_generator(const BraidedSpace<T>& space, std::size_t degree, std::size_t index, Matrix<T>& m) {
  if (index < 1 || index + 1 > degree) {
    throw IndexOutOfRange("braid generator " + std::to_string(index) + " outside 1.." +
                          std::to_string(degree == 0 ? 0 : degree - 1));
  }
  const std::size_t n = space.dimension();
  const std::size_t total = tensor_dimension(n, degree);
  if (m.rows() != total) throw DimensionMismatch("operand does not live on V^(x)d");
  if (m.field() != space.field()) throw FieldMismatch("operand over a different field than the braiding");

  const std::size_t stride = tensor_dimension(n, degree - index - 1);
  const std::size_t block = n * n * stride;
  const std::size_t cols = m.cols();
  Matrix<T> out(m.field(), total, cols);
  for (std::size_t base_hi = 0; base_hi < total; base_hi += block) {
    for (std::size_t lo = 0; lo < stride; ++lo) {
      const std::size_t base = base_hi + lo;
      for (const auto& e : space.entries()) {
        const std::size_t src = base + e.col * stride;
        const std::size_t dst = base + e.row * stride;
        auto in = m.row(src);
        auto target = out.row(dst);
        for (std::size_t j = 0; j < cols; ++j) {
          if (!in[j].is_zero()) target[j].add_mul(e.value, in[j]);
        }
      }
    }
  }
  m = std::move(out);
}

template <FieldScalar T>
Matrix<T> braid_generator(const BraidedSpace<T>& space, std::size_t degree, std::size_t index) {
  Matrix<T> m = Matrix<T>::identity(space.field(), tensor_dimension(space.dimension(), degree));
  apply_generator(space, degree, index, m);
  return m;
}

template <FieldScalar T>
Matrix<T> braid_word_sum(const BraidedSpace<T>& space, std::size_t degree,
                         const std::vector<std::vector<std::size_t>>& words) {
  for (const auto& word : words) {
    for (std::size_t g : word) {
      if (g < 1 || g + 1 > degree) throw IndexOutOfRange("braid word letter " + std::to_string(g) + " out of range");
    }
  }
  const FieldSpec& field = space.field();
  const std::size_t n = space.dimension();
  const std::size_t n2 = n * n;
  const std::size_t total = tensor_dimension(n, degree);
  std::vector<std::size_t> strides(degree, 1);
  for (std::size_t i = 1; i < degree; ++i) strides[i] = tensor_dimension(n, degree - i - 1);

  // Column k of c as (row, value) pairs.
  std::vector<std::vector<std::pair<std::size_t, T>>> by_column(n2);
  for (const auto& e : space.entries()) by_column[e.col].emplace_back(e.row, e.value);

  // Each basis tensor is pushed through every word as a sparse vector, so
  // the cost follows the number of terms rather than total^2 per letter.
  Matrix<T> out(field, total, total);
  std::map<std::size_t, T> column;
  std::map<std::size_t, T> current;
  std::map<std::size_t, T> next;
  for (std::size_t w = 0; w < total; ++w) {
    column.clear();
    for (const auto& word : words) {
      current.clear();
      current.emplace(w, T(field, 1));
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const std::size_t stride = strides[*it];
        next.clear();
        for (const auto& [index, value] : current) {
          const std::size_t pair = (index / stride) % n2;
          const std::size_t base = index - pair * stride;
          for (const auto& [row, coefficient] : by_column[pair]) {
            auto slot = next.try_emplace(base + row * stride, field, 0).first;
            slot->second.add_mul(coefficient, value);
          }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        std::swap(current, next);
      }
      for (const auto& [index, value] : current) {
        auto slot = column.try_emplace(index, field, 0).first;
        slot->second += value;
      }
    }
    for (auto& [index, value] : column) {
      if (!value.is_zero()) out(index, w) = std::move(value);
    }
  }
  return out;
}

template <FieldScalar T>
Matrix<T> braid_word(const BraidedSpace<T>& space, std::size_t degree, std::span<const std::size_t> word) {
  return braid_word_sum(space, degree, {std::vector<std::size_t>(word.begin(), word.end())});
}

template class BraidedSpace<Rational>;
template class BraidedSpace<ModP>;
template Matrix<Rational> braid_generator(const BraidedSpace<Rational>&, std::size_t, std::size_t);
template Matrix<ModP> braid_generator(const BraidedSpace<ModP>&, std::size_t, std::size_t);
template void apply_generator(const BraidedSpace<Rational>&, std::size_t, std::size_t, Matrix<Rational>&);
template void apply_generator(const BraidedSpace<ModP>&, std::size_t, std::size_t, Matrix<ModP>&);
template Matrix<Rational> braid_word(const BraidedSpace<Rational>&, std::size_t, std::span<const std::size_t>);
template Matrix<ModP> braid_word(const BraidedSpace<ModP>&, std::size_t, std::span<const std::size_t>);
template Matrix<Rational> braid_word_sum(const BraidedSpace<Rational>&, std::size_t,
                                         const std::vector<std::vector<std::size_t>>&);
template Matrix<ModP> braid_word_sum(const BraidedSpace<ModP>&, std::size_t, const std::vector<std::vector<std::size_t>>&);

}  // namespace nichols
