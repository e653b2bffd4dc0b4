#include "nichols/exactlin/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace nichols {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Plain Gauss-Jordan elimination in place.
template <FieldScalar T>
void eliminate(Matrix<T>& m, std::vector<std::size_t>& pivots) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> support;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Prefer the sparsest of the first few candidate rows to limit fill-in.
    std::size_t p = kNone;
    std::size_t best = kNone;
    std::size_t candidates = 0;
    for (std::size_t i = r; i < rows && candidates < 8; ++i) {
      if (m(i, c).is_zero()) continue;
      ++candidates;
      std::size_t nnz = 0;
      for (std::size_t j = c; j < cols && nnz < best; ++j) nnz += m(i, j).is_zero() ? 0 : 1;
      if (nnz < best) {
        best = nnz;
        p = i;
      }
      if (best == 1) break;
    }
    if (p == kNone) continue;
    m.swap_rows(p, r);

    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) support.push_back(j);
    }
    if (!m(r, c).is_one()) {
      const T inv = m(r, c).inverse();
      for (std::size_t j : support) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const T f = m(i, c);
      for (std::size_t j : support) m(i, j).sub_mul(f, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }

  std::vector<std::size_t> parent;
};

}  // namespace

template <FieldScalar T>
RowEchelon<T> rref(Matrix<T> m) {
  if (!m.entries_in_field()) throw FieldMismatch("matrix entries from more than one field");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  DisjointSets sets(cols);
  std::vector<std::size_t> lead(rows, kNone);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (m(i, j).is_zero()) continue;
      if (lead[i] == kNone) {
        lead[i] = j;
      } else {
        sets.unite(lead[i], j);
      }
    }
  }

  // Blocks are keyed by the root column; roots are the smallest column of
  // their block.
  std::vector<std::size_t> block_of_root(cols, kNone);
  std::vector<std::vector<std::size_t>> block_rows;
  for (std::size_t i = 0; i < rows; ++i) {
    if (lead[i] == kNone) continue;
    const std::size_t root = sets.find(lead[i]);
    if (block_of_root[root] == kNone) {
      block_of_root[root] = block_rows.size();
      block_rows.emplace_back();
    }
    block_rows[block_of_root[root]].push_back(i);
  }

  if (block_rows.size() <= 1) {
    RowEchelon<T> out{std::move(m), {}};
    eliminate(out.reduced, out.pivots);
    return out;
  }

  std::vector<std::vector<std::size_t>> block_cols(block_rows.size());
  for (std::size_t j = 0; j < cols; ++j) {
    const std::size_t b = block_of_root[sets.find(j)];
    if (b != kNone) block_cols[b].push_back(j);
  }

  // (global pivot, block, local row) for every nonzero reduced row.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> reduced_rows;
  std::vector<Matrix<T>> reduced_blocks;
  reduced_blocks.reserve(block_rows.size());
  for (std::size_t b = 0; b < block_rows.size(); ++b) {
    const auto& br = block_rows[b];
    const auto& bc = block_cols[b];
    Matrix<T> sub(m.field(), br.size(), bc.size());
    for (std::size_t i = 0; i < br.size(); ++i) {
      for (std::size_t j = 0; j < bc.size(); ++j) sub(i, j) = std::move(m(br[i], bc[j]));
    }
    std::vector<std::size_t> local_pivots;
    eliminate(sub, local_pivots);
    for (std::size_t k = 0; k < local_pivots.size(); ++k) reduced_rows.emplace_back(bc[local_pivots[k]], b, k);
    reduced_blocks.push_back(std::move(sub));
  }
  std::sort(reduced_rows.begin(), reduced_rows.end());

  RowEchelon<T> out{Matrix<T>(m.field(), rows, cols), {}};
  out.pivots.reserve(reduced_rows.size());
  for (std::size_t k = 0; k < reduced_rows.size(); ++k) {
    const auto& [pivot, b, local] = reduced_rows[k];
    const auto& bc = block_cols[b];
    Matrix<T>& sub = reduced_blocks[b];
    for (std::size_t j = 0; j < bc.size(); ++j) out.reduced(k, bc[j]) = std::move(sub(local, j));
    out.pivots.push_back(pivot);
  }
  return out;
}

// ---------------------------------------------------------------- Subspace

template <FieldScalar T>
Subspace<T> Subspace<T>::zero(const FieldSpec& field, std::size_t ambient) {
  return Subspace(Matrix<T>(field, 0, ambient), {});
}

template <FieldScalar T>
Subspace<T> Subspace<T>::full(const FieldSpec& field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  std::iota(pivots.begin(), pivots.end(), std::size_t{0});
  return Subspace(Matrix<T>::identity(field, ambient), std::move(pivots));
}

template <FieldScalar T>
Subspace<T> Subspace<T>::span(Matrix<T> generators) {
  RowEchelon<T> e = rref(std::move(generators));
  const std::size_t r = e.rank();
  if (r == e.reduced.rows()) return Subspace(std::move(e.reduced), std::move(e.pivots));
  return Subspace(e.reduced.row_block(0, r), std::move(e.pivots));
}

template <FieldScalar T>
Subspace<T> Subspace<T>::span(const FieldSpec& field, std::size_t ambient,
                              const std::vector<std::vector<T>>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw AmbientMismatch("spanning vector of wrong length");
  }
  if (vectors.empty()) return zero(field, ambient);
  return span(Matrix<T>::from_rows(field, vectors));
}

template <FieldScalar T>
std::vector<std::size_t> Subspace<T>::complement_coordinates() const {
  std::vector<std::size_t> out;
  out.reserve(ambient_dim() - dim());
  std::size_t k = 0;
  for (std::size_t j = 0; j < ambient_dim(); ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

template <FieldScalar T>
std::vector<T> Subspace<T>::normal_form(std::span<const T> v) const {
  if (v.size() != ambient_dim()) throw AmbientMismatch("vector length differs from ambient dimension");
  std::vector<T> w(v.begin(), v.end());
  for (std::size_t k = 0; k < dim(); ++k) {
    const T f = w[pivots_[k]];
    if (f.is_zero()) continue;
    auto row = basis_.row(k);
    for (std::size_t j = pivots_[k]; j < row.size(); ++j) {
      if (!row[j].is_zero()) w[j].sub_mul(f, row[j]);
    }
  }
  return w;
}

template <FieldScalar T>
Matrix<T> Subspace<T>::normal_form_rows(const Matrix<T>& rows) const {
  if (rows.cols() != ambient_dim()) throw AmbientMismatch("row length differs from ambient dimension");
  if (rows.field() != field()) throw FieldMismatch("normal form over a different field");
  std::vector<std::vector<std::size_t>> support(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    for (std::size_t j = pivots_[k]; j < ambient_dim(); ++j) {
      if (!basis_(k, j).is_zero()) support[k].push_back(j);
    }
  }
  Matrix<T> out = rows;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t k = 0; k < dim(); ++k) {
      const T f = out(i, pivots_[k]);
      if (f.is_zero()) continue;
      for (std::size_t j : support[k]) out(i, j).sub_mul(f, basis_(k, j));
    }
  }
  return out;
}

template <FieldScalar T>
bool Subspace<T>::contains(std::span<const T> v) const {
  const std::vector<T> w = normal_form(v);
  return is_zero_vector<T>(w);
}

template <FieldScalar T>
bool Subspace<T>::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw AmbientMismatch("subspaces of different ambient spaces");
  if (other.field() != field()) throw FieldMismatch("subspaces over different fields");
  if (other.dim() > dim()) return false;
  return normal_form_rows(other.basis_).is_zero();
}

template <FieldScalar T>
Subspace<T> Subspace<T>::tensor_with_identity(std::size_t left, std::size_t right) const {
  // Rows e_a (x) r_k (x) e_b in (a, k, b) order are already reduced: their
  // pivots increase strictly and each pivot column is zero in the others.
  const std::size_t n = ambient_dim();
  const std::size_t out_ambient = left * n * right;
  Matrix<T> basis(field(), left * dim() * right, out_ambient);
  std::vector<std::size_t> pivots;
  pivots.reserve(basis.rows());
  std::size_t row = 0;
  for (std::size_t a = 0; a < left; ++a) {
    for (std::size_t k = 0; k < dim(); ++k) {
      for (std::size_t b = 0; b < right; ++b) {
        for (std::size_t j = pivots_[k]; j < n; ++j) {
          const T& x = basis_(k, j);
          if (!x.is_zero()) basis(row, (a * n + j) * right + b) = x;
        }
        pivots.push_back((a * n + pivots_[k]) * right + b);
        ++row;
      }
    }
  }
  return Subspace(std::move(basis), std::move(pivots));
}

template <FieldScalar T>
Subspace<T> kernel_basis(const Matrix<T>& m) {
  RowEchelon<T> e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < cols; ++j) {
    if (!is_pivot[j]) free_cols.push_back(j);
  }
  Matrix<T> generators(m.field(), free_cols.size(), cols);
  const T one(m.field(), 1);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    generators(k, f) = one;
    for (std::size_t r = 0; r < e.rank(); ++r) {
      const T& x = e.reduced(r, f);
      if (!x.is_zero()) generators(k, e.pivots[r]) = -x;
    }
  }
  return Subspace<T>::span(std::move(generators));
}

template <FieldScalar T>
Subspace<T> intersect(const Subspace<T>& a, const Subspace<T>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("intersection of subspaces of different ambient spaces");
  if (a.field() != b.field()) throw FieldMismatch("intersection over different fields");
  if (a.is_zero() || b.is_zero()) return Subspace<T>::zero(a.field(), a.ambient_dim());
  // x in a with normal_form_b(x) = 0; normal forms are linear in x.
  const Matrix<T> reduced = b.normal_form_rows(a.basis());
  const Subspace<T> coefficients = kernel_basis(reduced.transpose());
  if (coefficients.is_zero()) return Subspace<T>::zero(a.field(), a.ambient_dim());
  return Subspace<T>::span(coefficients.basis() * a.basis());
}

template <FieldScalar T>
Subspace<T> sum(const Subspace<T>& a, const Subspace<T>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("sum of subspaces of different ambient spaces");
  if (a.field() != b.field()) throw FieldMismatch("sum over different fields");
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  Matrix<T> stacked(a.field(), a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) stacked(i, j) = a.basis()(i, j);
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.ambient_dim(); ++j) stacked(a.dim() + i, j) = b.basis()(i, j);
  }
  return Subspace<T>::span(std::move(stacked));
}

template RowEchelon<Rational> rref(Matrix<Rational>);
template RowEchelon<ModP> rref(Matrix<ModP>);
template class Subspace<Rational>;
template class Subspace<ModP>;
template Subspace<Rational> kernel_basis(const Matrix<Rational>&);
template Subspace<ModP> kernel_basis(const Matrix<ModP>&);
template Subspace<Rational> intersect(const Subspace<Rational>&, const Subspace<Rational>&);
template Subspace<ModP> intersect(const Subspace<ModP>&, const Subspace<ModP>&);
template Subspace<Rational> sum(const Subspace<Rational>&, const Subspace<Rational>&);
template Subspace<ModP> sum(const Subspace<ModP>&, const Subspace<ModP>&);

}  // namespace nichols
