#include "nichols/nichols_oracle.hpp"

#include <map>
#include <string>
#include <vector>

namespace nichols::oracle {

namespace {

template <FieldScalar T>
Matrix<T> generator(const BraidedSpace<T>& space, std::size_t d, std::size_t i) {
  const std::size_t n = space.dimension();
  const Matrix<T> left = Matrix<T>::identity(space.field(), tensor_dimension(n, i - 1));
  const Matrix<T> right = Matrix<T>::identity(space.field(), tensor_dimension(n, d - i - 1));
  return kron(kron(left, space.braiding()), right);
}

using Tensor = std::vector<std::size_t>;

// Sparse element of V^{(x)d}: basis words with coefficients.
template <FieldScalar T>
using Sparse = std::map<Tensor, T>;

// Apply c to slots (j, j+1) of every term.
template <FieldScalar T>
Sparse<T> cross(const BraidedSpace<T>& space, const Sparse<T>& x, std::size_t j) {
  const std::size_t n = space.dimension();
  const Matrix<T>& c = space.braiding();
  Sparse<T> out;
  for (const auto& [word, value] : x) {
    const std::size_t column = word[j] * n + word[j + 1];
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        const T& coefficient = c(k * n + l, column);
        if (coefficient.is_zero()) continue;
        Tensor moved = word;
        moved[j] = k;
        moved[j + 1] = l;
        auto slot = out.try_emplace(std::move(moved), space.field(), 0).first;
        slot->second.add_mul(coefficient, value);
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::size_t flatten(const Tensor& word, std::size_t n) {
  std::size_t index = 0;
  for (std::size_t letter : word) index = index * n + letter;
  return index;
}

// Delta_{i,d-i}(e_word) as a dense vector, summing one term per choice of
// the i positions that travel to the left block.
template <FieldScalar T>
std::vector<T> split(const BraidedSpace<T>& space, const Tensor& word, std::size_t i) {
  const std::size_t d = word.size();
  const std::size_t n = space.dimension();
  std::vector<T> out = zero_vector<T>(space.field(), tensor_dimension(n, d));
  std::vector<bool> chosen(d, false);
  std::fill(chosen.end() - static_cast<std::ptrdiff_t>(i), chosen.end(), true);
  do {
    Sparse<T> term;
    term.emplace(word, T(space.field(), 1));
    // Carry the chosen factors left, in order, one crossing at a time.
    std::size_t slot = 0;
    for (std::size_t p = 0; p < d; ++p) {
      if (!chosen[p]) continue;
      for (std::size_t j = p; j > slot; --j) term = cross(space, term, j - 1);
      ++slot;
    }
    for (const auto& [w, value] : term) out[flatten(w, n)] += value;
  } while (std::next_permutation(chosen.begin(), chosen.end()));
  return out;
}

// R_a (x) V^{(x)b} + V^{(x)a} (x) R_b from explicit tensor products of
// basis vectors.
template <FieldScalar T>
Subspace<T> mixed(const GradedQuotient<T>& s, std::size_t a, std::size_t b) {
  const FieldSpec& field = s.field();
  const std::size_t n = s.dimension();
  const std::size_t na = tensor_dimension(n, a);
  const std::size_t nb = tensor_dimension(n, b);
  std::vector<std::vector<T>> generators;
  const Subspace<T>& ra = s.relations(a);
  const Subspace<T>& rb = s.relations(b);
  for (std::size_t k = 0; k < ra.dim(); ++k) {
    for (std::size_t t = 0; t < nb; ++t) {
      const std::vector<T> e = unit_vector<T>(field, nb, t);
      generators.push_back(kron<T>(ra.basis_vector(k), e));
    }
  }
  for (std::size_t t = 0; t < na; ++t) {
    const std::vector<T> e = unit_vector<T>(field, na, t);
    for (std::size_t k = 0; k < rb.dim(); ++k) generators.push_back(kron<T>(e, rb.basis_vector(k)));
  }
  return Subspace<T>::span(field, na * nb, generators);
}

template <FieldScalar T>
void check_same_config(const GradedQuotient<T>& a, const GradedQuotient<T>& b) {
  if (!(a.space() == b.space())) throw ConfigMismatch("quotients of different braided spaces");
  if (a.cutoff() != b.cutoff()) {
    throw ConfigMismatch("cutoffs differ: " + std::to_string(a.cutoff()) + " vs " + std::to_string(b.cutoff()));
  }
}

}  // namespace

template <FieldScalar T>
Matrix<T> symmetrizer(const BraidedSpace<T>& space, std::size_t d) {
  const FieldSpec& field = space.field();
  const std::size_t n = space.dimension();
  Matrix<T> acc = Matrix<T>::identity(field, tensor_dimension(n, d));
  if (d <= 1) return acc;
  acc = Matrix<T>::identity(field, n);
  for (std::size_t m = 2; m <= d; ++m) {
    const std::size_t total = tensor_dimension(n, m);
    Matrix<T> coset = Matrix<T>::identity(field, total);
    Matrix<T> chain = Matrix<T>::identity(field, total);
    for (std::size_t k = m - 1; k >= 1; --k) {
      chain = chain * generator(space, m, k);
      coset += chain;
    }
    acc = kron(acc, Matrix<T>::identity(field, n)) * coset;
  }
  return acc;
}

template <FieldScalar T>
GradedQuotient<T> nichols_truncation(const BraidedSpace<T>& space, std::size_t cutoff) {
  const GradedQuotient<T> free = free_truncated(space, cutoff);
  std::vector<Subspace<T>> relations;
  for (std::size_t d = 1; d <= cutoff; ++d) relations.push_back(kernel_basis(oracle::symmetrizer(space, d)));
  GradedQuotient<T> out(free.coproduct_ptr(), std::move(relations));
  verify_invariants(out);
  return out;
}

template <FieldScalar T>
Subspace<T> brute_force_primitives(const BraidedSpace<T>& space, const GradedQuotient<T>& s, std::size_t d) {
  if (!(space == s.space())) throw ConfigMismatch("braiding differs from the quotient's");
  if (d < 1 || d > s.cutoff()) throw DegreeCap("degree " + std::to_string(d) + " outside 1.." + std::to_string(s.cutoff()));
  const FieldSpec& field = space.field();
  const std::size_t n = space.dimension();
  const std::size_t total = tensor_dimension(n, d);
  const Subspace<T>& r = s.relations(d);

  std::vector<Tensor> words(total, Tensor(d));
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rest = t;
    for (std::size_t p = d; p-- > 0;) {
      words[t][p] = rest % n;
      rest /= n;
    }
  }

  // Column t of the stacked constraint matrix is the image of e_t in every
  // mixed component, reduced modulo the mixed relations.
  Matrix<T> constraints(field, (d - 1) * total, total);
  for (std::size_t i = 1; i < d; ++i) {
    const Subspace<T> q = mixed(s, i, d - i);
    for (std::size_t t = 0; t < total; ++t) {
      const std::vector<T> image = q.normal_form(split(space, words[t], i));
      for (std::size_t j = 0; j < total; ++j) constraints((i - 1) * total + j, t) = image[j];
    }
  }
  const Subspace<T> kernel = kernel_basis(constraints);
  if (kernel.is_zero()) return kernel;
  return Subspace<T>::span(r.normal_form_rows(kernel.basis()));
}

template <FieldScalar T>
bool compare(const GradedQuotient<T>& final, const GradedQuotient<T>& reference) {
  check_same_config(final, reference);
  return final.all_relations() == reference.all_relations();
}

template <FieldScalar T>
bool relations_contained(const GradedQuotient<T>& s, const GradedQuotient<T>& reference) {
  check_same_config(s, reference);
  for (std::size_t d = 1; d <= s.cutoff(); ++d) {
    if (!reference.relations(d).contains(s.relations(d))) return false;
  }
  return true;
}

#define NICHOLS_ORACLE_INSTANTIATE(T)                                                                    \
  template Matrix<T> symmetrizer(const BraidedSpace<T>&, std::size_t);                                   \
  template GradedQuotient<T> nichols_truncation(const BraidedSpace<T>&, std::size_t);                    \
  template Subspace<T> brute_force_primitives(const BraidedSpace<T>&, const GradedQuotient<T>&, std::size_t); \
  template bool compare(const GradedQuotient<T>&, const GradedQuotient<T>&);                             \
  template bool relations_contained(const GradedQuotient<T>&, const GradedQuotient<T>&);

NICHOLS_ORACLE_INSTANTIATE(Rational)
NICHOLS_ORACLE_INSTANTIATE(ModP)

}  // namespace nichols::oracle
