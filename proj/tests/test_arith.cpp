#include <random>

#include "doctest.h"
#include "oreforge/arith.hpp"
#include "support/sylvester.hpp"

using namespace oreforge;

namespace {
IntPoly random_poly(std::mt19937_64& rng, int max_deg, long coeff_bound) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<long> dc(-coeff_bound, coeff_bound);
  int d = dd(rng);
  std::vector<BigInt> c(d + 1);
  for (auto& v : c) v = dc(rng);
  return IntPoly(std::move(c));
}
}  // namespace

TEST_CASE("extended naturals order and arithmetic") {
  auto inf = ExtNat::infinity();
  auto two = ExtNat::finite(2);
  CHECK(inf > two);
  CHECK(min(inf, two) == two);
  CHECK((inf + two).is_infinity());
  CHECK((two + ExtNat::finite(3)).value() == 5);
  CHECK((two * 7).value() == 14);
  CHECK((inf * 3).is_infinity());
  CHECK(inf == ExtNat::infinity());
}

TEST_CASE("p-adic valuation on certified primes") {
  Valuation v2(2), v3(3);
  CHECK(v2(BigInt(84)).value() == 2);
  CHECK(v3(BigInt(419904)).value() == 8);
  CHECK(v2(BigInt(0)).is_infinity());
  CHECK(v2(BigInt(-8)).value() == 3);
  CHECK(v3(BigInt(1)).value() == 0);
  auto [k, cof] = v2.split(BigInt(84));
  CHECK(k == 2);
  CHECK(cof == 21);
  CHECK_THROWS_AS(Valuation(BigInt(6)), std::invalid_argument);
  CHECK_THROWS_AS(Valuation(BigInt(1)), std::invalid_argument);
}

TEST_CASE("deterministic primality certificates") {
  CHECK(is_certified_prime(BigInt(2)));
  CHECK(is_certified_prime(BigInt(13)));
  CHECK(is_certified_prime(BigInt(104729)));
  CHECK_FALSE(is_certified_prime(BigInt(1)));
  CHECK_FALSE(is_certified_prime(BigInt(561)));         // Carmichael
  CHECK_FALSE(is_certified_prime(BigInt("3215031751")));  // strong pseudoprime, small bases
  CHECK(is_certified_prime(BigInt("1000000000000000009")));
  CHECK(is_certified_prime(BigInt("2305843009213693951")));  // 2^61 - 1
  CHECK_THROWS_AS(is_certified_prime(BigInt("3317044064679887385961981")),
                  std::domain_error);
}

TEST_CASE("polynomial ring basics") {
  IntPoly F = IntPoly::trinomial(12, 1, 84, 147);
  CHECK(F.degree() == 12);
  CHECK(F.is_monic());
  CHECK(F.coeff(0) == 147);
  CHECK(F.coeff(1) == 84);
  CHECK(F.coeff(5) == 0);
  CHECK(F.str() == "x^12 + 84*x + 147");
  CHECK(IntPoly().str() == "0");
  CHECK((IntPoly::monomial(-3, 2) + IntPoly::constant(5)).str() == "-3*x^2 + 5");

  std::mt19937_64 rng(0xa11ce);
  for (int t = 0; t < 50; t++) {
    IntPoly a = random_poly(rng, 7, 40), b = random_poly(rng, 7, 40);
    CHECK((a + b) - b == a);
    BigInt x0(3);
    CHECK((a * b).eval(x0) == a.eval(x0) * b.eval(x0));
  }
}

TEST_CASE("monic division is exact euclidean division") {
  std::mt19937_64 rng(0xbead);
  for (int t = 0; t < 60; t++) {
    IntPoly q = random_poly(rng, 5, 30);
    IntPoly r = random_poly(rng, 2, 30);
    IntPoly d = IntPoly::monomial(1, 3) + random_poly(rng, 2, 30);  // monic cubic
    IntPoly f = q * d + r;
    auto [Q, R] = f.divrem_monic(d);
    CHECK(Q == q);
    CHECK(R == r);
  }
  CHECK_THROWS_AS(IntPoly::x().divrem_monic(IntPoly::monomial(2, 1)),
                  std::invalid_argument);
}

TEST_CASE("argument shift: frozen coefficients and identity") {
  IntPoly F = IntPoly::trinomial(12, 1, 84, 147);
  IntPoly G1 = F.shift_arg(1);
  CHECK(G1.coeff(0) == 232);  // a + b + 1
  CHECK(G1.coeff(1) == 96);   // a + 12
  CHECK(G1.coeff(2) == 66);
  CHECK(G1.coeff(3) == 220);
  CHECK(G1.coeff(4) == 495);
  CHECK(G1.coeff(12) == 1);
  IntPoly G3 = F.shift_arg(3);
  CHECK(G3.coeff(0) == 531840);
  CHECK(G3.coeff(1) == 2125848);

  std::mt19937_64 rng(0xfeed);
  for (int t = 0; t < 40; t++) {
    IntPoly f = random_poly(rng, 8, 50);
    std::uniform_int_distribution<long> ds(-6, 6);
    BigInt s(ds(rng)), x0(ds(rng));
    CHECK(f.shift_arg(s).eval(x0) == f.eval(x0 + s));
  }
}

TEST_CASE("subresultant resultant matches Sylvester determinant oracle") {
  std::mt19937_64 rng(0x5e1f);
  int done = 0;
  while (done < 200) {
    IntPoly a = random_poly(rng, 6, 50), b = random_poly(rng, 6, 50);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(resultant(a, b) == testsupport::sylvester_resultant(a, b));
    done++;
  }
  /* degenerate shapes */
  CHECK(resultant(IntPoly::constant(5), IntPoly::constant(7)) == 1);
  CHECK(resultant(IntPoly(), IntPoly::x()) == 0);
  IntPoly f = IntPoly::x() * IntPoly::x() - IntPoly::constant(1);
  CHECK(resultant(f, f) == 0);
}

TEST_CASE("discriminant of degree-12 single-tail trinomials") {
  IntPoly F = IntPoly::trinomial(12, 1, 0, 1);  // x^12 + 1
  BigInt d = discriminant(F);
  CHECK(d == BigInt("8916100448256"));
  CHECK(d == pow_bigint(2, 24) * pow_bigint(3, 12));
  CHECK(trinomial_disc_deg12_m1(0, 1) == d);
  CHECK(trinomial_disc_deg12_m1(1, 0) == BigInt("-285311670611"));

  std::mt19937_64 rng(0xd15c);
  std::uniform_int_distribution<long> dc(-1000000, 1000000);
  for (int t = 0; t < 50; t++) {
    BigInt a(dc(rng)), b(dc(rng));
    CHECK(trinomial_disc_deg12_m1(a, b) ==
          discriminant(IntPoly::trinomial(12, 1, a, b)));
  }
}
