#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

using namespace cfree;
using namespace cfree::testutil;

namespace {
NcSeries z(int d, int n, int i) { return NcSeries::variable(d, n, i); }
}  // namespace

TEST_CASE("addition is coefficient-wise with min truncation") {
  NcSeries a = NcSeries::one(2, 5) + z(2, 5, 1);
  NcSeries b = NcSeries::one(2, 5) + z(2, 5, 2);
  NcSeries sum = a + b;
  CHECK(sum.coeff(Word{}) == 2);
  CHECK(sum.coeff(Word{1}) == 1);
  CHECK(sum.coeff(Word{2}) == 1);

  NcSeries zero(2, 5);
  CHECK(a + zero == a);

  NcSeries m = NcSeries::monomial(2, 5, Word{1, 2}, 1);
  CHECK((m + m).coeff(Word{1, 2}) == 2);

  CHECK((a + NcSeries::one(2, 3)).truncation() == 3);
  CHECK_THROWS_AS(a + NcSeries::one(3, 5), std::invalid_argument);
}

TEST_CASE("multiplication is word concatenation, noncommutative") {
  NcSeries z1 = z(2, 4, 1), z2 = z(2, 4, 2);
  CHECK((z1 * z2).coeff(Word{1, 2}) == 1);
  CHECK((z2 * z1).coeff(Word{2, 1}) == 1);
  CHECK((z1 * z2).coeff(Word{2, 1}) == 0);
  CHECK_FALSE(z1 * z2 == z2 * z1);

  NcSeries one = NcSeries::one(1, 4);
  NcSeries x = z(1, 4, 1);
  CHECK((one + x) * (one - x) == one - x * x);
}

TEST_CASE("multiplication truncates at the smaller degree") {
  NcSeries x = z(1, 2, 1);
  NcSeries product = (x + x * x) * (NcSeries::one(1, 2) + x);
  CHECK(product.truncation() == 2);
  CHECK(product.coeff(Word{1}) == 1);
  CHECK(product.coeff(pow_word(1, 2)) == 2);  // degree-3 term dropped
}

TEST_CASE("reciprocal of 1 - z is the geometric series") {
  NcSeries x = z(1, 6, 1);
  NcSeries r = reciprocal(NcSeries::one(1, 6) - x);
  for (int k = 0; k <= 6; ++k) CHECK(r.coeff(pow_word(1, k)) == 1);
  CHECK(reciprocal(NcSeries::one(1, 6)) == NcSeries::one(1, 6));
}

TEST_CASE("reciprocal of 1 + z1 + z2 at degree 2") {
  NcSeries a = NcSeries::one(2, 2) + z(2, 2, 1) + z(2, 2, 2);
  NcSeries r = reciprocal(a);
  CHECK(r.coeff(Word{}) == 1);
  CHECK(r.coeff(Word{1}) == -1);
  CHECK(r.coeff(Word{2}) == -1);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(r.coeff(Word{i, j}) == 1);
  CHECK(a * r == NcSeries::one(2, 2));
  CHECK(r * a == NcSeries::one(2, 2));
}

TEST_CASE("reciprocal rejects zero constant term") {
  CHECK_THROWS_AS(reciprocal(z(1, 3, 1)), std::domain_error);
}

TEST_CASE("left derivative peels a matching first letter") {
  NcSeries s = NcSeries::monomial(2, 5, Word{1, 2, 1}, 1);
  CHECK(left_derivative(s, 1) == NcSeries::monomial(2, 5, Word{2, 1}, 1));
  CHECK(left_derivative(NcSeries::monomial(2, 5, Word{1, 2}, 1), 2)
            .is_zero());
  CHECK(left_derivative(z(2, 5, 1), 1) == NcSeries::one(2, 5));
  CHECK(left_derivative(NcSeries::one(2, 5), 1).is_zero());
  CHECK_THROWS_AS(left_derivative(s, 3), std::out_of_range);
}

TEST_CASE("substitution expands words left to right") {
  NcSeries target = NcSeries::monomial(2, 3, Word{1, 1}, 1);
  NcSeries s1 = z(2, 3, 1) + z(2, 3, 2);
  NcSeries s2 = z(2, 3, 2);
  NcSeries out = substitute(target, {s1, s2});
  CHECK(out.coeff(Word{1, 1}) == 1);
  CHECK(out.coeff(Word{1, 2}) == 1);
  CHECK(out.coeff(Word{2, 1}) == 1);
  CHECK(out.coeff(Word{2, 2}) == 1);

  // identity substitution
  RatRng rng(7);
  NcSeries a = random_functional(rng, 2, 4).moments();
  CHECK(substitute(a, {z(2, 4, 1), z(2, 4, 2)}) == a);

  // z1 z2 under z1 -> w1(1 + w1), z2 -> w2
  NcSeries w1 = z(2, 3, 1);
  NcSeries w2 = z(2, 3, 2);
  NcSeries composed = substitute(NcSeries::monomial(2, 3, Word{1, 2}, 1),
                                 {w1 * (NcSeries::one(2, 3) + w1), w2});
  CHECK(composed ==
        series_of(2, 3, {{Word{1, 2}, q(1)}, {Word{1, 1, 2}, q(1)}}));

  CHECK_THROWS_AS(
      substitute(target, {NcSeries::one(2, 3) + z(2, 3, 1), s2}),
      std::domain_error);
}

TEST_CASE("multiplication is associative on random triples") {
  RatRng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    NcSeries a = random_functional(rng, 2, 5).moments();
    NcSeries b = random_functional(rng, 2, 5).moments();
    NcSeries c = random_functional(rng, 2, 5).moments();
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("reciprocal is an involution on unit series") {
  RatRng rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    NcSeries a = random_functional(rng, 2, 5).moments();
    CHECK(reciprocal(reciprocal(a)) == a);
  }
}

TEST_CASE("substitution distributes over sums and products") {
  RatRng rng(17);
  for (int trial = 0; trial < 3; ++trial) {
    NcSeries a = random_functional(rng, 2, 4).moments();
    NcSeries b = random_functional(rng, 2, 4).moments();
    std::vector<NcSeries> subs = {
        z(2, 4, 1) + z(2, 4, 2) * z(2, 4, 1),
        z(2, 4, 2).scaled(q(1, 2)),
    };
    CHECK(substitute(a + b, subs) ==
          substitute(a, subs) + substitute(b, subs));
    CHECK(substitute(a * b, subs) ==
          substitute(a, subs) * substitute(b, subs));
  }
}

TEST_CASE("series reconstruct from their left derivatives") {
  RatRng rng(19);
  for (int trial = 0; trial < 5; ++trial) {
    const int d = 1 + trial % 3;
    NcSeries a = random_functional(rng, d, 5).moments();
    NcSeries rebuilt = NcSeries::constant(d, 5, a.constant_term());
    for (int i = 1; i <= d; ++i)
      rebuilt = rebuilt + z(d, 5, i) * left_derivative(a, i);
    CHECK(rebuilt == a);
  }
}

TEST_CASE("equality compares up to the common truncation degree") {
  NcSeries a = NcSeries::one(1, 4) + z(1, 4, 1);
  NcSeries b = NcSeries::one(1, 2) + z(1, 2, 1) ;
  CHECK(a == b);  // degree <= 2 agrees
  NcSeries c = b + NcSeries::monomial(1, 2, Word{1, 1}, 1);
  CHECK_FALSE(a == c);
}
