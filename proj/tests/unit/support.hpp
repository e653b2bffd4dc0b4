#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nichols/exactlin/linalg.hpp"
#include "nichols/tower.hpp"

namespace nichols::testing {

inline const FieldSpec kQ = FieldSpec::rationals();

template <FieldScalar T>
T scalar(const FieldSpec& field, long long v) {
  return T(field, v);
}

inline Rational frac(long long a, long long b) { return Rational(mpq_class(static_cast<long>(a), static_cast<long>(b))); }

/// Entries drawn from {-range..range}, zero with probability `zero_bias`.
template <FieldScalar T>
Matrix<T> random_matrix(std::mt19937_64& rng, const FieldSpec& field, std::size_t rows, std::size_t cols,
                        double zero_bias = 0.4, long long range = 3) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<long long> value(-range, range);
  Matrix<T> m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (coin(rng) >= zero_bias) m(i, j) = T(field, value(rng));
    }
  }
  return m;
}

template <FieldScalar T>
Subspace<T> random_subspace(std::mt19937_64& rng, const FieldSpec& field, std::size_t ambient) {
  std::uniform_int_distribution<std::size_t> count(0, ambient);
  return Subspace<T>::span(random_matrix<T>(rng, field, count(rng), ambient, 0.5, 2));
}

template <FieldScalar T>
Matrix<T> diagonal_q(const FieldSpec& field, std::vector<std::vector<long long>> q) {
  Matrix<T> m(field, q.size(), q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) m(i, j) = T(field, q[i][j]);
  }
  return m;
}

template <FieldScalar T>
struct Case {
  std::string name;
  BraidedSpace<T> space;
};

/// Flip over Q, q = -1 diagonal braidings over Q.
inline std::vector<Case<Rational>> rational_matrix() {
  std::vector<Case<Rational>> out;
  out.push_back({"flip n=1 Q", BraidedSpace<Rational>::flip(1, kQ)});
  out.push_back({"flip n=2 Q", BraidedSpace<Rational>::flip(2, kQ)});
  out.push_back({"diag q=-1 n=1 Q", BraidedSpace<Rational>::diagonal(diagonal_q<Rational>(kQ, {{-1}}))});
  out.push_back(
      {"diag [[-1,1],[1,-1]] Q", BraidedSpace<Rational>::diagonal(diagonal_q<Rational>(kQ, {{-1, 1}, {1, -1}}))});
  out.push_back(
      {"diag [[-1,-1],[1,-1]] Q", BraidedSpace<Rational>::diagonal(diagonal_q<Rational>(kQ, {{-1, -1}, {1, -1}}))});
  return out;
}

/// Flip over F_2 and F_3; diagonal q of order 3 over F_7 (q = 2) and of
/// orders 3 and 4 over F_13 (q = 3, 5). F_7 has no element of order 4.
inline std::vector<Case<ModP>> prime_matrix() {
  std::vector<Case<ModP>> out;
  for (std::uint64_t p : {2, 3}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (std::size_t n : {1, 2}) {
      out.push_back({"flip n=" + std::to_string(n) + " " + f.to_string(), BraidedSpace<ModP>::flip(n, f)});
    }
  }
  const std::vector<std::pair<std::uint64_t, long long>> roots = {{7, 2}, {13, 3}, {13, 5}};
  for (const auto& [p, q] : roots) {
    const FieldSpec f = FieldSpec::prime(p);
    const long long qinv = ModP(f, q).inverse().residue();
    const std::string tag = " q=" + std::to_string(q) + " " + f.to_string();
    out.push_back({"diag n=1" + tag, BraidedSpace<ModP>::diagonal(diagonal_q<ModP>(f, {{q}}))});
    out.push_back({"diag [[q,1],[1,q]]" + tag, BraidedSpace<ModP>::diagonal(diagonal_q<ModP>(f, {{q, 1}, {1, q}}))});
    out.push_back(
        {"diag [[q,1/q],[1,q]]" + tag, BraidedSpace<ModP>::diagonal(diagonal_q<ModP>(f, {{q, qinv}, {1, q}}))});
  }
  return out;
}

/// Braidings that are neither flips nor diagonal: conjugates of diagonal
/// braidings by a Jordan-type change of basis g (x) g.
inline Matrix<Rational> conjugated_diagonal(const std::vector<std::vector<long long>>& q) {
  const std::size_t n = q.size();
  const Matrix<Rational> d = BraidedSpace<Rational>::diagonal(diagonal_q<Rational>(kQ, q)).braiding();
  Matrix<Rational> g = Matrix<Rational>::identity(kQ, n);
  Matrix<Rational> ginv = Matrix<Rational>::identity(kQ, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g(i, i + 1) = Rational(kQ, 1);
  }
  // inverse of the unipotent Jordan block: alternating signs above the diagonal
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) ginv(i, j) = Rational(kQ, (j - i) % 2 ? -1 : 1);
  }
  return kron(g, g) * d * kron(ginv, ginv);
}

/// Jordan block braiding on n = 2: c(e_i (x) e_0) = e_0 (x) e_i and
/// c(e_i (x) e_1) = (e_1 + e_0) (x) e_i. Not diagonalizable.
inline Matrix<Rational> jordan_braiding() {
  Matrix<Rational> c(kQ, 4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    c(0 * 2 + i, i * 2 + 0) = Rational(kQ, 1);
    c(1 * 2 + i, i * 2 + 1) = Rational(kQ, 1);
    c(0 * 2 + i, i * 2 + 1) = Rational(kQ, 1);
  }
  return c;
}

}  // namespace nichols::testing
