#include <doctest.h>

#include "laurent.hpp"

using namespace qtqft;

TEST_CASE("basic construction and queries") {
  const LaurentInt zero;
  CHECK(zero.is_zero());
  CHECK(zero.coeff(0) == 0);

  const LaurentInt q = LaurentInt::monomial(1, 1);
  CHECK(q.is_monomial());
  CHECK(q.coeff(1) == 1);
  CHECK(q.min_exponent() == 1);

  CHECK(LaurentInt::monomial(0, 5).is_zero());
}

TEST_CASE("no zero coefficients survive arithmetic") {
  LaurentInt x = LaurentInt::monomial(3, 2);
  x.add_term(2, BigInt(-3));
  CHECK(x.is_zero());
  CHECK(x.terms().empty());

  LaurentInt a = LaurentInt::one() + LaurentInt::monomial(1, 1);
  LaurentInt b = LaurentInt::one() - LaurentInt::monomial(1, 1);
  const LaurentInt prod = a * b;  // 1 - q^2
  CHECK(prod.terms().size() == 2);
  CHECK(prod.coeff(0) == 1);
  CHECK(prod.coeff(1) == 0);
  CHECK(prod.coeff(2) == -1);
}

TEST_CASE("shift and negate") {
  const LaurentInt x = LaurentInt::monomial(2, -1) + LaurentInt::monomial(3, 0);
  const LaurentInt shifted = x.shifted(2);
  CHECK(shifted.coeff(1) == 2);
  CHECK(shifted.coeff(2) == 3);
  CHECK(x.negated().coeff(-1) == -2);
  CHECK((x + x.negated()).is_zero());
}

TEST_CASE("exact big coefficients") {
  // 3^100 via repeated multiplication against GMP's own power.
  LaurentInt acc = LaurentInt::one();
  const LaurentInt three = LaurentInt::monomial(3, 0);
  for (int i = 0; i < 100; ++i) acc *= three;
  BigInt expect;
  mpz_ui_pow_ui(expect.get_mpz_t(), 3, 100);
  CHECK(acc.coeff(0) == expect);
  CHECK(acc.is_monomial());
}

TEST_CASE("q = 1 specialization") {
  LaurentInt x = LaurentInt::monomial(2, -1);
  x += LaurentInt::monomial(3, 0);
  x += LaurentInt::monomial(1, 1);
  CHECK(x.at_one() == 6);
  CHECK(x.at_one_double() == doctest::Approx(6.0));
}

TEST_CASE("rendering") {
  CHECK(LaurentInt().to_string() == "0");
  CHECK(LaurentInt::one().to_string() == "1");
  CHECK(LaurentInt::monomial(1, 1).to_string() == "q");
  CHECK(LaurentInt::monomial(2, -1).to_string() == "2*q^-1");
  const LaurentInt mix = LaurentInt::monomial(-1, 2) + LaurentInt::one();
  CHECK(mix.to_string() == "1 - q^2");
}
