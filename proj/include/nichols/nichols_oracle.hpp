#pragma once

#include <cstddef>

#include "nichols/bialgebra.hpp"

namespace nichols::oracle {

/// Quantum symmetrizer on V^{(x)d} assembled from its coset factorization
/// S_d = (S_{d-1} (x) Id)(1 + c_{d-1} + c_{d-1}c_{d-2} + ... + c_{d-1}...c_1),
/// with each c_i built as a Kronecker product.
template <FieldScalar T>
Matrix<T> symmetrizer(const BraidedSpace<T>& space, std::size_t d);

/// T(V, c) modulo R_d = ker S_d for d = 1..D, with both bialgebra invariants
/// verified.
template <FieldScalar T>
GradedQuotient<T> nichols_truncation(const BraidedSpace<T>& space, std::size_t cutoff);

/// Degree-d primitives of s, found by pushing every basis tensor through
/// each unshuffle one adjacent crossing at a time. Throws ConfigMismatch if
/// space is not the braiding of s.
template <FieldScalar T>
Subspace<T> brute_force_primitives(const BraidedSpace<T>& space, const GradedQuotient<T>& s, std::size_t d);

/// R_d equal for every d; ConfigMismatch on differing braiding or cutoff.
template <FieldScalar T>
bool compare(const GradedQuotient<T>& final, const GradedQuotient<T>& reference);

/// Every R_d of s lies in the matching R_d of reference.
template <FieldScalar T>
bool relations_contained(const GradedQuotient<T>& s, const GradedQuotient<T>& reference);

#define NICHOLS_ORACLE_EXTERN(T)                                                                      \
  extern template Matrix<T> symmetrizer(const BraidedSpace<T>&, std::size_t);                         \
  extern template GradedQuotient<T> nichols_truncation(const BraidedSpace<T>&, std::size_t);          \
  extern template Subspace<T> brute_force_primitives(const BraidedSpace<T>&, const GradedQuotient<T>&, \
                                                     std::size_t);                                    \
  extern template bool compare(const GradedQuotient<T>&, const GradedQuotient<T>&);                   \
  extern template bool relations_contained(const GradedQuotient<T>&, const GradedQuotient<T>&);

NICHOLS_ORACLE_EXTERN(Rational)
NICHOLS_ORACLE_EXTERN(ModP)
#undef NICHOLS_ORACLE_EXTERN

}  // namespace nichols::oracle
