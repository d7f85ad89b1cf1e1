#include <doctest.h>

#include <random>

#include "cuboid/rat.hpp"

using cuboid::BigInt;
using cuboid::BigRat;

TEST_CASE("BigRat canonical form") {
  BigRat r(BigInt(6), BigInt(-8));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 4);
  CHECK(BigRat(0, 5) == BigRat(0));
  CHECK_THROWS_AS(BigRat(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("BigRat parse and to_string round trip") {
  CHECK(BigRat::parse("22/7").to_string() == "22/7");
  CHECK(BigRat::parse("-45/9").to_string() == "-5");
  CHECK(BigRat::parse("12") == BigRat(12));
}

TEST_CASE("BigRat floor") {
  CHECK(BigRat(7, 2).floor() == 3);
  CHECK(BigRat(-7, 2).floor() == -4);
  CHECK(BigRat(-4, 2).floor() == -2);
  CHECK(BigRat(100).floor() == 100);
}

TEST_CASE("BigRat pow with negative exponents") {
  CHECK(BigRat(2, 3).pow(3) == BigRat(8, 27));
  CHECK(BigRat(2, 3).pow(-2) == BigRat(9, 4));
  CHECK(BigRat(5).pow(0) == BigRat(1));
  CHECK_THROWS_AS(BigRat(0).pow(-1), std::domain_error);
}

TEST_CASE("BigRat decimal rendering truncates") {
  CHECK(BigRat(1, 3).to_decimal(5) == "0.33333");
  CHECK(BigRat(-1, 3).to_decimal(5) == "-0.33333");
  CHECK(BigRat(10006).to_decimal(2) == "10006.00");
}

TEST_CASE("BigRat arithmetic keeps canonical form (randomized)") {
  std::mt19937 rng(20150519);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int i = 0; i < 500; ++i) {
    BigRat a(num(rng), den(rng)), b(num(rng), den(rng));
    for (BigRat v : {a + b, a - b, a * b}) {
      CHECK(v.denominator() > 0);
      BigInt g;
      BigInt n = v.numerator(), d = v.denominator();
      mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      CHECK(g == 1);
    }
    if (!b.is_zero()) {
      BigRat q = a / b;
      CHECK(q * b == a);
    }
  }
}
