#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nichols/exactlin/field.hpp"

namespace nichols {

/// Dense row-major matrix over one exact field.
template <FieldScalar T>
class Matrix {
 public:
  using value_type = T;

  Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, T(field, 0)) {}

  static Matrix identity(FieldSpec field, std::size_t n) {
    Matrix m(field, n, n);
    const T one(field, 1);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  /// Throws DimensionMismatch on ragged input and FieldMismatch if an entry
  /// lives in a different field.
  static Matrix from_rows(FieldSpec field, const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) {
        if (rows[i][j].field() != field) {
          throw FieldMismatch("entry over " + rows[i][j].field().to_string() + " in a matrix over " +
                              field.to_string());
        }
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  static Matrix from_integers(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionMismatch("ragged matrix rows");
      std::size_t j = 0;
      for (long long v : row) m(i, j++) = T(field, v);
      ++i;
    }
    return m;
  }

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
  }

  /// True if every entry belongs to field().
  bool entries_in_field() const {
    for (const T& x : data_) {
      if (x.field() != field_) return false;
    }
    return true;
  }

  bool is_zero() const {
    for (const T& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const T& x : data_) n += x.is_zero() ? 0 : 1;
    return n;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  /// Rows [first, first + count) as a new matrix.
  Matrix row_block(std::size_t first, std::size_t count) const {
    Matrix out(field_, count, cols_);
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
    }
    return out;
  }

  std::vector<T> apply(std::span<const T> x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<T> y(rows_, T(field_, 0));
    for (std::size_t i = 0; i < rows_; ++i) {
      const T* r = data_.data() + i * cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!r[j].is_zero()) y[i].add_mul(r[j], x[j]);
      }
    }
    return y;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
    }
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
    }
    return *this;
  }

  Matrix& operator*=(const T& s) {
    for (T& x : data_) {
      if (!x.is_zero()) x *= s;
    }
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }

  /// Product skipping zero entries on both sides; cost is proportional to the
  /// number of nonzero pairs rather than rows * cols * inner.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_) throw FieldMismatch("matrix product over different fields");
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    // Nonzero column lists of b's rows, computed once.
    std::vector<std::vector<std::size_t>> b_support(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k) {
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) b_support[k].push_back(j);
      }
    }
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j : b_support[k]) c(i, j).add_mul(aik, b(k, j));
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (field_ != o.field_) throw FieldMismatch("matrix sum over different fields");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  }

  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

/// Kronecker product; with the big-endian basis convention this is the
/// matrix of A (x) B on the tensor product of the domains.
template <FieldScalar T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.field() != b.field()) throw FieldMismatch("kronecker product over different fields");
  Matrix<T> out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const T& y = b(k, l);
          if (!y.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
      }
    }
  }
  return out;
}

template <FieldScalar T>
std::vector<T> kron(std::span<const T> a, std::span<const T> b) {
  std::vector<T> out;
  out.reserve(a.size() * b.size());
  for (const T& x : a) {
    for (const T& y : b) out.push_back(x * y);
  }
  return out;
}

template <FieldScalar T>
std::vector<T> zero_vector(const FieldSpec& field, std::size_t n) {
  return std::vector<T>(n, T(field, 0));
}

template <FieldScalar T>
std::vector<T> unit_vector(const FieldSpec& field, std::size_t n, std::size_t k) {
  std::vector<T> v(n, T(field, 0));
  v[k] = T(field, 1);
  return v;
}

template <FieldScalar T>
bool is_zero_vector(std::span<const T> v) {
  for (const T& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace nichols
