#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nichols/shuffle.hpp"
#include "support.hpp"

using namespace nichols;
using namespace nichols::testing;

using QM = Matrix<Rational>;
using QB = BraidedSpace<Rational>;

namespace {

template <FieldScalar T>
Matrix<T> delta(const BraidedSpace<T>& b, std::size_t i, std::size_t j) {
  return delta_component(b, i, j).matrix;
}

template <FieldScalar T>
Matrix<T> id(const BraidedSpace<T>& b, std::size_t d) {
  return Matrix<T>::identity(b.field(), tensor_dimension(b.dimension(), d));
}

template <FieldScalar T>
void check_coassociative(const BraidedSpace<T>& b, std::size_t max_total) {
  for (std::size_t i = 0; i <= max_total; ++i) {
    for (std::size_t j = 0; i + j <= max_total; ++j) {
      for (std::size_t k = 0; i + j + k <= max_total; ++k) {
        if (i + j + k == 0) continue;
        CAPTURE(i);
        CAPTURE(j);
        CAPTURE(k);
        const Matrix<T> lhs = kron(delta(b, i, j), id(b, k)) * delta(b, i + j, k);
        const Matrix<T> rhs = kron(id(b, i), delta(b, j, k)) * delta(b, i, j + k);
        CHECK(lhs == rhs);
      }
    }
  }
}

// Delta_{i, a+b-i} restricted to V^a (x) V^b, assembled from the components
// on each factor and the block braiding in the middle.
template <FieldScalar T>
void check_multiplicative(const BraidedSpace<T>& b, std::size_t max_total) {
  for (std::size_t a = 1; a < max_total; ++a) {
    for (std::size_t c = 1; a + c <= max_total; ++c) {
      const std::size_t d = a + c;
      for (std::size_t i = 0; i <= d; ++i) {
        Matrix<T> assembled(b.field(), tensor_dimension(b.dimension(), d), tensor_dimension(b.dimension(), d));
        for (std::size_t i1 = 0; i1 <= std::min(i, a); ++i1) {
          const std::size_t i2 = i - i1;
          if (i2 > c) continue;
          const Matrix<T> middle = kron(kron(id(b, i1), block_braiding(b, a - i1, i2)), id(b, c - i2));
          assembled += middle * kron(delta(b, i1, a - i1), delta(b, i2, c - i2));
        }
        CAPTURE(a);
        CAPTURE(c);
        CAPTURE(i);
        CHECK(delta(b, i, d - i) == assembled);
      }
    }
  }
}

std::vector<QB> rational_braidings() {
  std::vector<QB> out;
  for (const auto& c : rational_matrix()) out.push_back(c.space);
  out.push_back(QB::diagonal(diagonal_q<Rational>(kQ, {{2, 3}, {-1, 5}})));
  out.push_back(QB::from_matrix(2, jordan_braiding()));
  out.push_back(QB::from_matrix(2, conjugated_diagonal({{2, -1}, {3, 7}})));
  return out;
}

}  // namespace

TEST_CASE("unshuffle enumeration") {
  CHECK(unshuffles(1, 1).size() == 2);
  CHECK(unshuffles(1, 1)[0].arrangement == Arrangement{1, 2});
  CHECK(unshuffles(1, 1)[0].reduced_word.empty());
  CHECK(unshuffles(1, 1)[1].reduced_word == std::vector<std::size_t>{1});
  CHECK(unshuffles(0, 4).size() == 1);
  CHECK(unshuffles(2, 2).size() == 6);
  CHECK(unshuffles(3, 4).size() == 35);
  CHECK(permutations(4).size() == 24);
  CHECK(permutations(3).front() == Arrangement{1, 2, 3});
  CHECK(permutations(3).back() == Arrangement{3, 2, 1});
  CHECK(minimal_reduced_word(Arrangement{3, 2, 1}).size() == 3);
  CHECK_THROWS_AS(minimal_reduced_word(Arrangement{1, 1}), IndexOutOfRange);
}

TEST_CASE("reduced words have inversion length") {
  for (std::size_t d = 1; d <= 6; ++d) {
    for (const Arrangement& a : permutations(d)) {
      std::size_t inversions = 0;
      for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = x + 1; y < d; ++y) inversions += a[x] > a[y] ? 1 : 0;
      }
      CHECK(minimal_reduced_word(a).size() == inversions);
    }
  }
}

TEST_CASE("delta examples") {
  const QB f1 = QB::flip(1, kQ);
  CHECK(delta(f1, 1, 1) == QM::from_integers(kQ, {{2}}));
  const QB sign = QB::diagonal(diagonal_q<Rational>(kQ, {{-1}}));
  CHECK(delta(sign, 1, 1) == QM::from_integers(kQ, {{0}}));
}

TEST_CASE("Delta_{1,1} = Id + c") {
  for (const QB& b : rational_braidings()) {
    QM expected = id(b, 2);
    expected += b.braiding();
    CHECK(delta(b, 1, 1) == expected);
  }
  for (const auto& c : prime_matrix()) {
    Matrix<ModP> expected = id(c.space, 2);
    expected += c.space.braiding();
    CHECK(delta(c.space, 1, 1) == expected);
  }
}

TEST_CASE("symmetrizer examples") {
  const QB f1 = QB::flip(1, kQ);
  CHECK(symmetrizer(f1, 1) == QM::identity(kQ, 1));
  CHECK(symmetrizer(QB::flip(2, kQ), 1) == QM::identity(kQ, 2));
  CHECK(symmetrizer(f1, 3) == QM::from_integers(kQ, {{6}}));
  CHECK(symmetrizer(QB::diagonal(diagonal_q<Rational>(kQ, {{-1}})), 2) == QM::from_integers(kQ, {{0}}));
}

TEST_CASE("symmetrizer factors through Delta") {
  for (const QB& b : rational_braidings()) {
    if (b.dimension() > 2) continue;
    for (std::size_t d = 2; d <= 4; ++d) {
      for (std::size_t i = 1; i < d; ++i) {
        CHECK(symmetrizer(b, d) == kron(symmetrizer(b, i), symmetrizer(b, d - i)) * delta(b, i, d - i));
      }
    }
  }
}

TEST_CASE("gaussian binomial examples") {
  const Rational minus_one(kQ, -1);
  for (std::size_t d = 0; d <= 5; ++d) CHECK(gaussian_binomial(d, 0, minus_one).is_one());
  CHECK(gaussian_binomial(2, 1, minus_one).is_zero());
  CHECK(gaussian_binomial(3, 1, minus_one).is_one());
  CHECK(gaussian_binomial(4, 2, Rational(kQ, 1)) == Rational(kQ, 6));
  CHECK(gaussian_binomial(4, 2, Rational(kQ, 2)) == Rational(kQ, 35));
  CHECK(gaussian_binomial(2, 3, Rational(kQ, 2)).is_zero());
}

TEST_CASE("one-dimensional diagonal Delta equals the q-binomial") {
  std::vector<Rational> qs = {Rational(kQ, -1), Rational(kQ, 2), Rational(kQ, 1), frac(-1, 3), frac(5, 7)};
  for (const Rational& q : qs) {
    QM qm(kQ, 1, 1);
    qm(0, 0) = q;
    const QB b = QB::diagonal(qm);
    for (std::size_t d = 1; d <= 6; ++d) {
      for (std::size_t i = 0; i <= d; ++i) CHECK(delta(b, i, d - i)(0, 0) == gaussian_binomial(d, i, q));
    }
  }
  for (const auto& [p, q] : std::vector<std::pair<std::uint64_t, long long>>{{7, 2}, {13, 3}, {13, 5}, {2, 1}}) {
    const FieldSpec f = FieldSpec::prime(p);
    const BraidedSpace<ModP> b = BraidedSpace<ModP>::diagonal(diagonal_q<ModP>(f, {{q}}));
    for (std::size_t d = 1; d <= 6; ++d) {
      for (std::size_t i = 0; i <= d; ++i) CHECK(delta(b, i, d - i)(0, 0) == gaussian_binomial(d, i, ModP(f, q)));
    }
  }
}

TEST_CASE("coassociativity, total degree <= 5") {
  for (const QB& b : rational_braidings()) check_coassociative(b, b.dimension() == 1 ? 6 : 5);
  for (const auto& c : prime_matrix()) check_coassociative(c.space, 5);
}

TEST_CASE("multiplicativity, total degree <= 4") {
  for (const QB& b : rational_braidings()) check_multiplicative(b, 4);
  for (const auto& c : prime_matrix()) check_multiplicative(c.space, 4);
}

TEST_CASE("block braiding is a single lift of c for a = b = 1") {
  for (const QB& b : rational_braidings()) {
    CHECK(block_braiding(b, 1, 1) == b.braiding());
    CHECK(block_braiding(b, 0, 2) == id(b, 2));
  }
}
