#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nichols/braiding.hpp"

namespace nichols {

/// A permutation in one-line notation, values 1..d: slot k of the result
/// holds the tensor factor that started at position arrangement[k].
using Arrangement = std::vector<std::size_t>;

/// Lexicographically minimal reduced word (letters 1..d-1, leftmost acts
/// last) whose braid lift realizes `arrangement`.
std::vector<std::size_t> minimal_reduced_word(std::span<const std::size_t> arrangement);

/// All permutations of 1..d in lexicographic order.
std::vector<Arrangement> permutations(std::size_t d);

struct Unshuffle {
  Arrangement arrangement;
  std::vector<std::size_t> reduced_word;
};

/// The C(i+j, i) arrangements increasing on slots 1..i and on i+1..i+j,
/// lexicographic; these are the terms of the (i, j) coproduct component.
std::vector<Unshuffle> unshuffles(std::size_t i, std::size_t j);

/// Delta_{i,j}: V^{(x)(i+j)} -> V^{(x)i} (x) V^{(x)j}, the sum of the
/// positive braid lifts of the (i, j)-unshuffles.
template <FieldScalar T>
struct DeltaComponent {
  std::size_t left;
  std::size_t right;
  Matrix<T> matrix;
};

template <FieldScalar T>
DeltaComponent<T> delta_component(const BraidedSpace<T>& space, std::size_t i, std::size_t j);

/// Braiding c_{V^a, V^b}: V^{(x)a} (x) V^{(x)b} -> V^{(x)b} (x) V^{(x)a}.
template <FieldScalar T>
Matrix<T> block_braiding(const BraidedSpace<T>& space, std::size_t a, std::size_t b);

/// Quantum symmetrizer: sum over S_d of the lifts of minimal reduced words.
template <FieldScalar T>
Matrix<T> symmetrizer(const BraidedSpace<T>& space, std::size_t d);

/// Gaussian binomial [d choose i]_q by the q-Pascal rule.
template <FieldScalar T>
T gaussian_binomial(std::size_t d, std::size_t i, const T& q);

extern template DeltaComponent<Rational> delta_component(const BraidedSpace<Rational>&, std::size_t, std::size_t);
extern template DeltaComponent<ModP> delta_component(const BraidedSpace<ModP>&, std::size_t, std::size_t);
extern template Matrix<Rational> block_braiding(const BraidedSpace<Rational>&, std::size_t, std::size_t);
extern template Matrix<ModP> block_braiding(const BraidedSpace<ModP>&, std::size_t, std::size_t);
extern template Matrix<Rational> symmetrizer(const BraidedSpace<Rational>&, std::size_t);
extern template Matrix<ModP> symmetrizer(const BraidedSpace<ModP>&, std::size_t);
extern template Rational gaussian_binomial(std::size_t, std::size_t, const Rational&);
extern template ModP gaussian_binomial(std::size_t, std::size_t, const ModP&);

}  // namespace nichols
