#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nichols/shuffle.hpp"
#include "support.hpp"

using namespace nichols;
using namespace nichols::testing;

using QM = Matrix<Rational>;
using QB = BraidedSpace<Rational>;

namespace {

QM permutation_on_tensors(std::size_t n, const Arrangement& arrangement) {
  const std::size_t d = arrangement.size();
  const std::size_t total = tensor_dimension(n, d);
  QM p(kQ, total, total);
  for (std::size_t t = 0; t < total; ++t) {
    std::vector<std::size_t> word(d);
    std::size_t rest = t;
    for (std::size_t k = d; k-- > 0;) {
      word[k] = rest % n;
      rest /= n;
    }
    std::size_t image = 0;
    for (std::size_t k = 0; k < d; ++k) image = image * n + word[arrangement[k] - 1];
    p(image, t) = Rational(kQ, 1);
  }
  return p;
}

// Random braid and commutation moves; they preserve the permutation and the
// length of a reduced word.
std::vector<std::size_t> shake(std::vector<std::size_t> w, std::mt19937_64& rng, int moves) {
  if (w.size() < 2) return w;
  std::uniform_int_distribution<std::size_t> pos(0, w.size() - 2);
  for (int m = 0; m < moves; ++m) {
    const std::size_t p = pos(rng);
    const std::size_t a = w[p];
    const std::size_t b = w[p + 1];
    if (a + 1 < b || b + 1 < a) {
      std::swap(w[p], w[p + 1]);
    } else if (p + 2 < w.size() && w[p + 2] == a && (a + 1 == b || b + 1 == a)) {
      w[p] = b;
      w[p + 1] = a;
      w[p + 2] = b;
    }
  }
  return w;
}

std::vector<QB> braidings() {
  std::vector<QB> out;
  out.push_back(QB::flip(1, kQ));
  out.push_back(QB::flip(2, kQ));
  out.push_back(QB::flip(3, kQ));
  out.push_back(QB::diagonal(diagonal_q<Rational>(kQ, {{-1, 2}, {3, 5}})));
  out.push_back(QB::from_matrix(2, jordan_braiding()));
  out.push_back(QB::from_matrix(2, conjugated_diagonal({{2, -1}, {3, 7}})));
  out.push_back(QB::from_matrix(3, conjugated_diagonal({{-1, 1, 2}, {1, -1, 1}, {1, 3, -1}})));
  return out;
}

}  // namespace

TEST_CASE("flip examples") {
  CHECK(QB::flip(1, kQ).braiding() == QM::identity(kQ, 1));
  const QM c = QB::flip(2, kQ).braiding();
  CHECK(c == QM::from_integers(kQ, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  // e_0 (x) e_1 (column 1) goes to e_1 (x) e_0 (row 2)
  CHECK(c(2, 1).is_one());
}

TEST_CASE("diagonal examples") {
  CHECK(QB::diagonal(diagonal_q<Rational>(kQ, {{1}})) == QB::flip(1, kQ));
  CHECK(QB::diagonal(diagonal_q<Rational>(kQ, {{-1}})).braiding() == QM::from_integers(kQ, {{-1}}));
  const QB s = QB::diagonal(diagonal_q<Rational>(kQ, {{-1, 1}, {1, -1}}));
  CHECK(s.braiding() == QM::from_integers(kQ, {{-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}}));
  CHECK_THROWS_AS(QB::diagonal(diagonal_q<Rational>(kQ, {{1, 0}, {1, 1}})), ZeroParameter);
  CHECK_THROWS_AS(QB::diagonal(QM(kQ, 1, 2)), DimensionMismatch);
}

TEST_CASE("from_matrix validation") {
  const QM flip = QB::flip(2, kQ).braiding();
  CHECK_NOTHROW(QB::from_matrix(2, flip));
  CHECK_NOTHROW(QB::from_matrix(2, QM::identity(kQ, 4)));

  // Raising one of the four nonzero entries of the n = 2 flip to 2 gives a
  // diagonal braiding, which satisfies the braid equation.
  for (std::size_t col = 0; col < 4; ++col) {
    QM scaled = flip;
    for (std::size_t row = 0; row < 4; ++row) {
      if (scaled(row, col).is_one()) scaled(row, col) = Rational(kQ, 2);
    }
    CHECK_NOTHROW(QB::from_matrix(2, scaled));
  }
  // Turning a zero entry into 2 is rejected with a witness triple, except at
  // the corners (0,3) and (3,0); counts cross-checked with numpy.
  std::size_t rejected = 0;
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col < 4; ++col) {
      if (!flip(row, col).is_zero()) continue;
      QM perturbed = flip;
      perturbed(row, col) = Rational(kQ, 2);
      try {
        QB::from_matrix(2, perturbed);
      } catch (const YangBaxterViolation& e) {
        ++rejected;
        for (std::size_t k : e.witness()) CHECK(k < 2);
      } catch (const NotInvertible&) {
        ++rejected;
      }
    }
  }
  CHECK(rejected == 10);

  CHECK_THROWS_AS(QB::from_matrix(2, QM(kQ, 4, 4)), NotInvertible);
  CHECK_THROWS_AS(QB::from_matrix(2, QM::identity(kQ, 3)), DimensionMismatch);
  CHECK_THROWS_AS(QB::flip(9, kQ), EnvelopeExceeded);

  // a braiding that is invertible but not Yang-Baxter
  QM twisted = QM::identity(kQ, 4);
  twisted(0, 1) = Rational(kQ, 1);
  CHECK_THROWS_AS(QB::from_matrix(2, twisted * flip), YangBaxterViolation);
}

TEST_CASE("braid generators and words") {
  const QB f2 = QB::flip(2, kQ);
  CHECK(braid_generator(f2, 2, 1) == f2.braiding());
  CHECK(braid_generator(f2, 3, 2) == permutation_on_tensors(2, {1, 3, 2}));
  CHECK(braid_word(f2, 3, std::vector<std::size_t>{}) == QM::identity(kQ, 8));
  CHECK(braid_word(f2, 2, std::vector<std::size_t>{1}) == f2.braiding());
  CHECK_THROWS_AS(braid_generator(f2, 3, 3), IndexOutOfRange);
  CHECK_THROWS_AS(braid_generator(f2, 13, 1), DegreeCap);
}

TEST_CASE("braid relation and far commutation") {
  for (const QB& b : braidings()) {
    CAPTURE(b.dimension());
    const QM c1 = braid_generator(b, 3, 1);
    const QM c2 = braid_generator(b, 3, 2);
    CHECK(c1 * c2 * c1 == c2 * c1 * c2);
    CHECK(braid_word(b, 3, std::vector<std::size_t>{1, 2, 1}) == braid_word(b, 3, std::vector<std::size_t>{2, 1, 2}));
    if (b.dimension() <= 2) {
      const QM d1 = braid_generator(b, 4, 1);
      const QM d3 = braid_generator(b, 4, 3);
      CHECK(d1 * d3 == d3 * d1);
    }
  }
}

TEST_CASE("flip lifts are permutation matrices") {
  for (std::size_t n : {1, 2, 3}) {
    const QB f = QB::flip(n, kQ);
    for (std::size_t d = 1; d <= 4; ++d) {
      if (tensor_dimension(n, d) > 81) continue;
      for (const Arrangement& a : permutations(d)) {
        CHECK(braid_word(f, d, minimal_reduced_word(a)) == permutation_on_tensors(n, a));
      }
    }
  }
}

TEST_CASE("lifts do not depend on the reduced word") {
  std::mt19937_64 rng(21);
  for (const QB& b : braidings()) {
    if (b.dimension() > 2) continue;
    for (const Arrangement& a : permutations(4)) {
      const auto w = minimal_reduced_word(a);
      const QM lift = braid_word(b, 4, w);
      for (int k = 0; k < 3; ++k) {
        const auto other = shake(w, rng, 12);
        CHECK(braid_word(b, 4, other) == lift);
      }
    }
  }
}

TEST_CASE("sparse and dense evaluation agree") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> letter(1, 3);
  for (const QB& b : braidings()) {
    if (b.dimension() > 2) continue;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::size_t> w(1 + trial % 6);
      for (auto& x : w) x = letter(rng);
      QM dense = QM::identity(kQ, tensor_dimension(b.dimension(), 4));
      for (std::size_t k = w.size(); k-- > 0;) dense = braid_generator(b, 4, w[k]) * dense;
      CHECK(braid_word(b, 4, w) == dense);
    }
  }
}
