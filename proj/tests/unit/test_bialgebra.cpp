#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nichols/bialgebra.hpp"
#include "nichols/nichols_oracle.hpp"
#include "support.hpp"

using namespace nichols;
using namespace nichols::testing;

using QM = Matrix<Rational>;
using QS = Subspace<Rational>;
using QB = BraidedSpace<Rational>;
using QQ = GradedQuotient<Rational>;

namespace {

QB sign_line() { return QB::diagonal(diagonal_q<Rational>(kQ, {{-1}})); }

std::vector<Rational> tensor(std::size_t n, std::vector<std::pair<std::vector<std::size_t>, long long>> terms) {
  const std::size_t d = terms.front().first.size();
  std::vector<Rational> v = zero_vector<Rational>(kQ, tensor_dimension(n, d));
  for (const auto& [word, c] : terms) {
    std::size_t index = 0;
    for (std::size_t letter : word) index = index * n + letter;
    v[index] += Rational(kQ, c);
  }
  return v;
}

QS line(std::size_t ambient, const std::vector<Rational>& v) { return QS::span(kQ, ambient, {v}); }

std::size_t mobius(std::size_t k) {
  std::size_t primes = 0;
  for (std::size_t p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    k /= p;
    if (k % p == 0) return 99;
    ++primes;
  }
  if (k > 1) ++primes;
  return primes;
}

// (1/d) sum_{k | d} mu(k) n^{d/k}
long long witt(std::size_t n, std::size_t d) {
  long long total = 0;
  for (std::size_t k = 1; k <= d; ++k) {
    if (d % k) continue;
    const std::size_t m = mobius(k);
    if (m == 99) continue;
    long long power = 1;
    for (std::size_t e = 0; e < d / k; ++e) power *= static_cast<long long>(n);
    total += (m % 2 ? -1 : 1) * power;
  }
  return total / static_cast<long long>(d);
}

Matrix<Rational> column(const std::vector<Rational>& v) {
  Matrix<Rational> m(kQ, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

}  // namespace

TEST_CASE("Witt oracle sanity") {
  CHECK(witt(2, 2) == 1);
  CHECK(witt(2, 3) == 2);
  CHECK(witt(2, 4) == 3);
  CHECK(witt(2, 5) == 6);
  CHECK(witt(2, 6) == 9);
  CHECK(witt(3, 2) == 3);
  CHECK(witt(3, 4) == 18);
}

TEST_CASE("free truncation") {
  CHECK(free_truncated(QB::flip(1, kQ), 3).hilbert_series() == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(free_truncated(QB::flip(2, kQ), 2).hilbert_series() == std::vector<std::size_t>{1, 2, 4});
  CHECK(hilbert_series(free_truncated(QB::flip(2, kQ), 2)) == std::vector<std::size_t>{1, 2, 4});
  CHECK_THROWS_AS(free_truncated(QB::flip(1, kQ), 0), DegreeCap);
  CHECK_THROWS_AS(free_truncated(QB::flip(1, kQ), 13), DegreeCap);
  const QQ s = free_truncated(QB::flip(2, kQ), 3);
  CHECK(s.total_dimension() == 15);
  CHECK(s.degree_offset(0) == 0);
  CHECK(s.degree_offset(2) == 3);
  CHECK_THROWS_AS(s.relations(4), DegreeCap);
  CHECK(is_ideal_closed(s));
  CHECK(is_coideal(s));
}

TEST_CASE("ideal_saturate examples") {
  const QQ free_flip1 = free_truncated(QB::flip(1, kQ), 4);
  CHECK(ideal_saturate(free_flip1, {}) == free_flip1);

  // x (x) x is not a coideal generator for the flip in characteristic 0
  CHECK_THROWS_AS(ideal_saturate(free_flip1, {{2, QS::full(kQ, 1)}}), InvariantViolation);

  const QQ sign = ideal_saturate(free_truncated(sign_line(), 4), {{2, QS::full(kQ, 1)}});
  CHECK(sign.hilbert_series() == std::vector<std::size_t>{1, 1, 0, 0, 0});

  const QQ sym2 = ideal_saturate(free_truncated(QB::flip(2, kQ), 3), {{2, line(4, tensor(2, {{{0, 1}, 1}, {{1, 0}, -1}}))}});
  CHECK(sym2.hilbert_series() == std::vector<std::size_t>{1, 2, 3, 4});

  std::vector<std::vector<Rational>> commutators;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) commutators.push_back(tensor(3, {{{a, b}, 1}, {{b, a}, -1}}));
  }
  const QQ sym3 = ideal_saturate(free_truncated(QB::flip(3, kQ), 3), {{2, QS::span(kQ, 9, commutators)}});
  CHECK(sym3.hilbert_series() == std::vector<std::size_t>{1, 3, 6, 10});

  CHECK_THROWS_AS(ideal_saturate(sign, {{5, QS::full(kQ, 1)}}), DegreeCap);
  CHECK_THROWS_AS(ideal_saturate(sign, {{2, QS::full(kQ, 2)}}), AmbientMismatch);
}

TEST_CASE("hilbert series of a hand-built quotient") {
  const QQ free = free_truncated(sign_line(), 2);
  const QQ q(free.coproduct_ptr(), {QS::zero(kQ, 1), QS::full(kQ, 1)});
  CHECK(q.hilbert_series() == std::vector<std::size_t>{1, 1, 0});
  CHECK_THROWS_AS(QQ(free.coproduct_ptr(), {QS::zero(kQ, 1)}), DimensionMismatch);
}

TEST_CASE("primitive examples") {
  for (std::size_t n : {1, 2, 3}) {
    const QQ free = free_truncated(QB::flip(n, kQ), 2);
    CHECK(primitives(free, 1).representatives.dim() == n);
  }
  const QQ f2 = free_truncated(QB::flip(2, kQ), 4);
  CHECK(primitives(f2, 2).representatives == line(4, tensor(2, {{{0, 1}, 1}, {{1, 0}, -1}})));
  CHECK(primitives(f2, 3).representatives.dim() == 2);
  CHECK(primitives(f2, 4).representatives.dim() == 3);
  CHECK_THROWS_AS(primitives(f2, 5), DegreeCap);

  const QQ sign = free_truncated(sign_line(), 3);
  CHECK(primitives(sign, 2).representatives == QS::full(kQ, 1));
  CHECK(primitives(sign, 2).degree == 2);
}

TEST_CASE("free flip primitives follow the Witt formula") {
  for (std::size_t n : {1, 2, 3}) {
    const std::size_t cutoff = n == 3 ? 4 : 6;
    const QQ free = free_truncated(QB::flip(n, kQ), cutoff);
    for (std::size_t d = 1; d <= cutoff; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(static_cast<long long>(primitives(free, d).representatives.dim()) == witt(n, d));
    }
  }
}

TEST_CASE("primitive representatives satisfy the mixed-component condition") {
  for (const auto& c : rational_matrix()) {
    const QQ free = free_truncated(c.space, 4);
    for (std::size_t d = 2; d <= 4; ++d) {
      const QS p = primitives(free, d).representatives;
      for (std::size_t k = 0; k < p.dim(); ++k) {
        for (std::size_t i = 1; i < d; ++i) {
          const auto image = free.coproduct().component(i, d - i).apply(p.basis_vector(k));
          CHECK(mixed_relations(free, d, i).contains(std::span<const Rational>(image)));
        }
      }
    }
  }
}

TEST_CASE("mixed relations match explicit Kronecker generators") {
  const QQ sym = ideal_saturate(free_truncated(QB::flip(2, kQ), 4), {{2, line(4, tensor(2, {{{0, 1}, 1}, {{1, 0}, -1}}))}});
  for (std::size_t d = 2; d <= 4; ++d) {
    for (std::size_t i = 1; i < d; ++i) {
      std::vector<std::vector<Rational>> gens;
      const QS& ri = sym.relations(i);
      const QS& rj = sym.relations(d - i);
      const std::size_t ni = tensor_dimension(2, i);
      const std::size_t nj = tensor_dimension(2, d - i);
      for (std::size_t k = 0; k < ri.dim(); ++k) {
        for (std::size_t t = 0; t < nj; ++t) {
          const auto e = unit_vector<Rational>(kQ, nj, t);
          gens.push_back(kron<Rational>(ri.basis_vector(k), e));
        }
      }
      for (std::size_t t = 0; t < ni; ++t) {
        const auto e = unit_vector<Rational>(kQ, ni, t);
        for (std::size_t k = 0; k < rj.dim(); ++k) gens.push_back(kron<Rational>(e, rj.basis_vector(k)));
      }
      CHECK(mixed_relations(sym, d, i) == QS::span(kQ, ni * nj, gens));
    }
  }
}

TEST_CASE("quotient coordinates round trip") {
  const QQ sym = ideal_saturate(free_truncated(QB::flip(2, kQ), 3), {{2, line(4, tensor(2, {{{0, 1}, 1}, {{1, 0}, -1}}))}});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const QM coords = random_matrix<Rational>(rng, kQ, 1, 4);
    const auto lifted = sym.from_quotient(3, coords.row(0));
    CHECK(sym.to_quotient(3, lifted) == std::vector<Rational>(coords.row(0).begin(), coords.row(0).end()));
  }
  // x0 x1 and x1 x0 have the same class
  const auto a = sym.to_quotient(2, tensor(2, {{{0, 1}, 1}}));
  const auto b = sym.to_quotient(2, tensor(2, {{{1, 0}, 1}}));
  CHECK(a == b);
}

TEST_CASE("omega, unit, counit and the augmentation split") {
  const QQ free = free_truncated(QB::flip(1, kQ), 2);
  const QM omega = omega_projection(free);
  const QM incl = degree_one_inclusion(free);
  CHECK(omega * incl == QM::identity(kQ, 1));
  // unit, x, x (x) x in total coordinates
  CHECK(omega.apply(unit_vector<Rational>(kQ, 3, 1))[0].is_one());
  CHECK(omega.apply(unit_vector<Rational>(kQ, 3, 0))[0].is_zero());
  CHECK(omega.apply(unit_vector<Rational>(kQ, 3, 2))[0].is_zero());
  CHECK(counit(free) * unit(free) == QM::identity(kQ, 1));

  const auto split = augmentation_split(free);
  CHECK(split.tau * split.zeta == QM::identity(kQ, 2));
  const QM zt = split.zeta * split.tau;
  CHECK(zt * unit(free) == QM(kQ, 3, 1));
  CHECK(zt * column(unit_vector<Rational>(kQ, 3, 1)) == column(unit_vector<Rational>(kQ, 3, 1)));
  // zeta tau = Id - u epsilon
  QM expected = QM::identity(kQ, 3);
  QM ue = unit(free) * counit(free);
  ue *= Rational(kQ, -1);
  expected += ue;
  CHECK(zt == expected);

  const QQ f2 = free_truncated(QB::flip(2, kQ), 3);
  CHECK(omega_projection(f2) * degree_one_inclusion(f2) == QM::identity(kQ, 2));
  const auto s2 = augmentation_split(f2);
  CHECK(s2.tau * s2.zeta == QM::identity(kQ, f2.total_dimension() - 1));
}

template <FieldScalar T>
void random_saturation(const BraidedSpace<T>& space, std::size_t cutoff, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> degree(2, cutoff);
  CAPTURE(seed);
  GradedQuotient<T> s = free_truncated(space, cutoff);
  for (int round = 0; round < 4; ++round) {
    const std::size_t d = degree(rng);
    CAPTURE(d);
    const Subspace<T> p = primitives(s, d).representatives;
    if (p.is_zero()) continue;
    // The whole degree-d primitive space is stable under the braiding, so it
    // generates a bi-ideal; an arbitrary subspace of it need not.
    const Subspace<T>& chosen = p;
    const GradedQuotient<T> next = ideal_saturate(s, {{d, chosen}});
    CHECK(is_ideal_closed(next));
    CHECK(is_coideal(next));
    const auto before = s.hilbert_series();
    const auto after = next.hilbert_series();
    for (std::size_t k = 0; k <= cutoff; ++k) CHECK(after[k] <= before[k]);
    CHECK(after[1] == space.dimension());
    // relations only grow, and stay inside the symmetrizer kernels
    for (std::size_t k = 1; k <= cutoff; ++k) CHECK(next.relations(k).contains(s.relations(k)));
    CHECK(oracle::relations_contained(next, oracle::nichols_truncation(space, cutoff)));
    s = next;
  }
}

TEST_CASE("saturation by random primitive subspaces keeps both invariants") {
  int seed = 100;
  for (const auto& c : rational_matrix()) random_saturation(c.space, 4, ++seed);
  for (const auto& c : prime_matrix()) random_saturation(c.space, 4, ++seed);
  random_saturation(QB::from_matrix(2, jordan_braiding()), 4, ++seed);
  random_saturation(QB::from_matrix(2, conjugated_diagonal({{-1, 2}, {3, -1}})), 4, ++seed);
}

TEST_CASE("non-coideal relations are rejected") {
  const QQ free = free_truncated(QB::flip(2, kQ), 3);
  // x0 (x) x0 is not primitive for the flip
  CHECK_THROWS_AS(ideal_saturate(free, {{2, line(4, tensor(2, {{{0, 0}, 1}}))}}), InvariantViolation);

  // a primitive that is not stable under the braiding: x0x1 - x1x0 - x1x1/2
  // for q = [[-1,1],[1,-1]]
  const QQ mixed = free_truncated(QB::diagonal(diagonal_q<Rational>(kQ, {{-1, 1}, {1, -1}})), 3);
  std::vector<Rational> p = tensor(2, {{{0, 1}, 1}, {{1, 0}, -1}});
  p[3] = frac(-1, 2);
  CHECK(primitives(mixed, 2).representatives.contains(std::span<const Rational>(p)));
  CHECK_THROWS_AS(ideal_saturate(mixed, {{2, line(4, p)}}), InvariantViolation);
}
