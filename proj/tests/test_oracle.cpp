#include <doctest.h>

#include <random>

#include "cuboid/oracle.hpp"

using namespace cuboid;

TEST_CASE("t^2 - 2: two intervals, one bracketing sqrt(2)") {
  auto roots = sturm_isolate({BigRat(-2), BigRat(0), BigRat(1)}, BigRat(1, 10000));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].hi < BigRat(0));
  CHECK(roots[1].lo > BigRat(0));
  // 1.4142 < sqrt2 < 1.4143
  CHECK(roots[1].lo < BigRat(14143, 10000));
  CHECK(roots[1].hi > BigRat(14142, 10000));
  CHECK(roots[1].hi - roots[1].lo < BigRat(1, 10000));
  // interval squares bracket 2 exactly
  CHECK(roots[1].lo * roots[1].lo < BigRat(2));
  CHECK(roots[1].hi * roots[1].hi > BigRat(2));
}

TEST_CASE("C^4 + 6 C^2 + 1 has no real roots") {
  auto roots = sturm_isolate({BigRat(1), BigRat(0), BigRat(6), BigRat(0), BigRat(1)}, BigRat(1));
  CHECK(roots.empty());
}

TEST_CASE("the p=q=1 polynomial isolates its exact root t = 1") {
  // t^10 + 3 t^8 + 2 t^6 - 2 t^4 - 3 t^2 - 1
  std::vector<BigRat> coeffs{BigRat(-1), BigRat(0), BigRat(-3), BigRat(0), BigRat(-2), BigRat(0),
                             BigRat(2),  BigRat(0), BigRat(3),  BigRat(0), BigRat(1)};
  auto roots = sturm_isolate(coeffs, BigRat(1, 100));
  REQUIRE(roots.size() == 2);  // +-1 (the other roots are complex)
  CHECK(roots[0].lo < BigRat(-1));
  CHECK(roots[0].hi > BigRat(-1));
  CHECK(roots[1].lo < BigRat(1));
  CHECK(roots[1].hi > BigRat(1));
  ZPoly z = zpoly_from_rational(coeffs);
  CHECK(zpoly_eval(z, BigRat(1)).is_zero());
}

TEST_CASE("planted rational roots are recovered exactly") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  for (int trial = 0; trial < 25; ++trial) {
    // product of up to three distinct linear factors (d x - n) and one
    // irreducible quadratic x^2 + 1
    std::vector<BigRat> planted;
    std::vector<BigRat> poly{BigRat(1)};  // 1
    auto mul_linear = [&](long n, long d) {
      std::vector<BigRat> next(poly.size() + 1, BigRat(0));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i] * BigRat(d);
        next[i] -= poly[i] * BigRat(n);
      }
      poly = next;
    };
    int nroots = 1 + trial % 3;
    for (int k = 0; k < nroots; ++k) {
      long n = num(rng), d = den(rng);
      BigRat r(n, d);
      bool dup = false;
      for (const auto& pr : planted) dup = dup || pr == r;
      if (dup) continue;
      planted.push_back(r);
      mul_linear(n, d);
    }
    {  // x^2 + 1
      std::vector<BigRat> next(poly.size() + 2, BigRat(0));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 2] += poly[i];
        next[i] += poly[i];
      }
      poly = next;
    }
    auto roots = sturm_isolate(poly, BigRat(1, 1000000));
    CHECK(roots.size() == planted.size());
    for (const auto& r : planted) {
      bool found = false;
      for (const auto& iso : roots) found = found || (iso.lo < r && r < iso.hi);
      CHECK(found);
    }
  }
}

TEST_CASE("Sturm count at the Cauchy bound equals the number of isolated roots") {
  std::vector<BigRat> coeffs{BigRat(-6), BigRat(1), BigRat(7), BigRat(-3), BigRat(1)};
  ZPoly p = zpoly_from_rational(coeffs);
  ZPoly sf = squarefree_part(p);
  SturmChain chain(sf);
  BigRat bound = cauchy_bound(sf);
  auto roots = sturm_isolate(coeffs, BigRat(1, 100));
  CHECK(chain.count(-bound, bound) == static_cast<int>(roots.size()));
}

TEST_CASE("squarefree decomposition accounts for the full degree") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> num(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    // (x - a)^2 (x - b) (x^2 + c^2 + 1)
    long a = num(rng), b = num(rng), c = num(rng);
    if (a == b) b += 1;
    std::vector<BigRat> poly{BigRat(1)};
    auto mul = [&](std::vector<BigRat> factor) {
      std::vector<BigRat> next(poly.size() + factor.size() - 1, BigRat(0));
      for (std::size_t i = 0; i < poly.size(); ++i)
        for (std::size_t j = 0; j < factor.size(); ++j) next[i + j] += poly[i] * factor[j];
      poly = next;
    };
    mul({BigRat(-a), BigRat(1)});
    mul({BigRat(-a), BigRat(1)});
    mul({BigRat(-b), BigRat(1)});
    mul({BigRat(c * c + 1), BigRat(0), BigRat(1)});
    ZPoly z = zpoly_from_rational(poly);
    auto decomp = squarefree_decomposition(z);
    int total = 0;
    for (const auto& [factor, mult] : decomp) total += zpoly_degree(factor) * mult;
    CHECK(total == zpoly_degree(z));
    // and the squarefree part has degree 4 (a, b and the quadratic)
    CHECK(zpoly_degree(squarefree_part(z)) == 4);
  }
}

TEST_CASE("axis split: no negative roots means no imaginary list") {
  // t^4 - 5 t^2 + 4 = (t^2-1)(t^2-4): x-roots 1, 4 both positive
  auto split = axis_split_even({BigRat(4), BigRat(0), BigRat(-5), BigRat(0), BigRat(1)},
                               BigRat(1, 1000));
  CHECK(split.imaginary_positive.empty());
  REQUIRE(split.real_positive.size() == 2);
  CHECK(split.real_positive[0].lo < BigRat(1));
  CHECK(split.real_positive[0].hi > BigRat(1));
  CHECK(split.real_positive[1].lo < BigRat(2));
  CHECK(split.real_positive[1].hi > BigRat(2));
}

TEST_CASE("axis split rejects odd powers") {
  CHECK_THROWS_AS(axis_split_even({BigRat(1), BigRat(1), BigRat(1)}, BigRat(1)),
                  std::invalid_argument);
}

TEST_CASE("axis split of the transformed polynomial at a small point") {
  // p=0, B=1, q=1 is the p=q=1 polynomial: roots +-1 and +-i (multiple)
  auto split = axis_split_roots(1, BigInt(0), BigInt(1), BigRat(1, 1000));
  REQUIRE(split.real_positive.size() == 1);
  REQUIRE(split.imaginary_positive.size() == 1);
  CHECK(split.real_positive[0].lo < BigRat(1));
  CHECK(split.real_positive[0].hi > BigRat(1));
  CHECK(split.imaginary_positive[0].lo < BigRat(1));
  CHECK(split.imaginary_positive[0].hi > BigRat(1));
}

TEST_CASE("isolated t-intervals carry a Sturm proof in x-space") {
  auto split = axis_split_roots(2, BigInt(1), BigInt(20), BigRat(1, 1000));
  for (const auto& r : split.real_positive) {
    CHECK(r.variations_lo - r.variations_hi == 1);
    CHECK(r.hi - r.lo < BigRat(1, 1000));
  }
  for (const auto& r : split.imaginary_positive)
    CHECK(r.variations_lo - r.variations_hi == 1);
}

TEST_CASE("zero polynomial is rejected") {
  CHECK_THROWS_AS(sturm_isolate({BigRat(0)}, BigRat(1)), std::domain_error);
}
