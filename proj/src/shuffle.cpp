#include "nichols/shuffle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nichols {

std::vector<std::size_t> minimal_reduced_word(std::span<const std::size_t> arrangement) {
  const std::size_t d = arrangement.size();
  std::vector<bool> seen(d + 1, false);
  for (std::size_t v : arrangement) {
    if (v < 1 || v > d || seen[v]) throw IndexOutOfRange("arrangement is not a permutation of 1..d");
    seen[v] = true;
  }
  // Peel letters off the left end of the word: the leftmost letter acts
  // last, so it must undo a descent of the final arrangement.
  std::vector<std::size_t> current(arrangement.begin(), arrangement.end());
  std::vector<std::size_t> word;
  for (;;) {
    std::size_t k = 0;
    while (k + 1 < d && current[k] < current[k + 1]) ++k;
    if (k + 1 >= d) break;
    word.push_back(k + 1);
    std::swap(current[k], current[k + 1]);
  }
  return word;
}

std::vector<Arrangement> permutations(std::size_t d) {
  if (d > kMaxDegree) throw DegreeCap("permutations of more than " + std::to_string(kMaxDegree) + " letters");
  Arrangement a(d);
  std::iota(a.begin(), a.end(), std::size_t{1});
  std::vector<Arrangement> out;
  do {
    out.push_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

std::vector<Unshuffle> unshuffles(std::size_t i, std::size_t j) {
  const std::size_t d = i + j;
  if (d > kMaxDegree) throw DegreeCap("unshuffles of degree " + std::to_string(d) + " exceed the cap");
  std::vector<Unshuffle> out;
  // Left blocks as combinations of 1..d in lexicographic order.
  std::vector<std::size_t> left(i);
  std::iota(left.begin(), left.end(), std::size_t{1});
  for (;;) {
    Arrangement a = left;
    std::vector<bool> taken(d + 1, false);
    for (std::size_t v : left) taken[v] = true;
    for (std::size_t v = 1; v <= d; ++v) {
      if (!taken[v]) a.push_back(v);
    }
    std::vector<std::size_t> word = minimal_reduced_word(a);
    out.push_back({std::move(a), std::move(word)});

    std::size_t k = i;
    while (k > 0 && left[k - 1] == d - i + k) --k;
    if (k == 0) break;
    ++left[k - 1];
    for (std::size_t m = k; m < i; ++m) left[m] = left[m - 1] + 1;
  }
  return out;
}

template <FieldScalar T>
DeltaComponent<T> delta_component(const BraidedSpace<T>& space, std::size_t i, std::size_t j) {
  const std::size_t d = i + j;
  const std::size_t total = tensor_dimension(space.dimension(), d);
  if (i == 0 || j == 0) return {i, j, Matrix<T>::identity(space.field(), total)};
  std::vector<std::vector<std::size_t>> words;
  for (Unshuffle& u : unshuffles(i, j)) words.push_back(std::move(u.reduced_word));
  return {i, j, braid_word_sum(space, d, words)};
}

template <FieldScalar T>
Matrix<T> block_braiding(const BraidedSpace<T>& space, std::size_t a, std::size_t b) {
  Arrangement arrangement;
  for (std::size_t v = a + 1; v <= a + b; ++v) arrangement.push_back(v);
  for (std::size_t v = 1; v <= a; ++v) arrangement.push_back(v);
  const std::vector<std::size_t> word = minimal_reduced_word(arrangement);
  return braid_word(space, a + b, word);
}

template <FieldScalar T>
Matrix<T> symmetrizer(const BraidedSpace<T>& space, std::size_t d) {
  std::vector<std::vector<std::size_t>> words;
  for (const Arrangement& a : permutations(d)) words.push_back(minimal_reduced_word(a));
  return braid_word_sum(space, d, words);
}

template <FieldScalar T>
T gaussian_binomial(std::size_t d, std::size_t i, const T& q) {
  const FieldSpec field = q.field();
  if (i > d) return T(field, 0);
  // row[m] holds [k choose m]_q for the current k.
  std::vector<T> row(d + 1, T(field, 0));
  row[0] = T(field, 1);
  std::vector<T> q_powers(d + 1, T(field, 1));
  for (std::size_t m = 1; m <= d; ++m) q_powers[m] = q_powers[m - 1] * q;
  for (std::size_t k = 1; k <= d; ++k) {
    for (std::size_t m = std::min(k, i); m >= 1; --m) {
      T next = row[m - 1];
      next.add_mul(q_powers[m], row[m]);
      row[m] = std::move(next);
    }
  }
  return row[i];
}

template DeltaComponent<Rational> delta_component(const BraidedSpace<Rational>&, std::size_t, std::size_t);
template DeltaComponent<ModP> delta_component(const BraidedSpace<ModP>&, std::size_t, std::size_t);
template Matrix<Rational> block_braiding(const BraidedSpace<Rational>&, std::size_t, std::size_t);
template Matrix<ModP> block_braiding(const BraidedSpace<ModP>&, std::size_t, std::size_t);
template Matrix<Rational> symmetrizer(const BraidedSpace<Rational>&, std::size_t);
template Matrix<ModP> symmetrizer(const BraidedSpace<ModP>&, std::size_t);
template Rational gaussian_binomial(std::size_t, std::size_t, const Rational&);
template ModP gaussian_binomial(std::size_t, std::size_t, const ModP&);

}  // namespace nichols
