#include "doctest.h"

#include <random>

#include "oreforge/arith.hpp"
#include "oreforge/intfactor.hpp"

using namespace oreforge;

namespace {

IntPoly poly(std::vector<long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

void check_proper_factor(const IntPoly& F, const IntPoly& G) {
  CHECK(G.degree() >= 1);
  CHECK(G.degree() < F.degree());
  CHECK(G.leading() == 1);
  auto [q, r] = F.divrem_monic(G);
  CHECK(r.is_zero());
}

}  // namespace

TEST_CASE("zero constant term gives the factor x") {
  IntPoly F = IntPoly::trinomial(12, 3, 5, 0);
  auto g = find_monic_factor(F);
  REQUIRE(g.has_value());
  CHECK(g->degree() == 1);
  CHECK(g->coeff(0) == 0);
  check_proper_factor(F, *g);
}

TEST_CASE("linear roots are found") {
  // x^12 + 2x + 1 vanishes at -1
  IntPoly F = IntPoly::trinomial(12, 1, 2, 1);
  REQUIRE(F.eval(-1) == 0);
  auto g = find_monic_factor(F);
  REQUIRE(g.has_value());
  check_proper_factor(F, *g);
  CHECK_FALSE(is_irreducible_z(F));
}

TEST_CASE("x^12 + 1 factors") {
  IntPoly F = poly({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
  auto g = find_monic_factor(F);
  REQUIRE(g.has_value());
  check_proper_factor(F, *g);
}

TEST_CASE("repeated-factor split via vanishing discriminant") {
  IntPoly base = poly({2, 2, 0, 0, 1});  // x^4 + 2x + 2
  IntPoly F = base * base * base;
  REQUIRE(F.degree() == 12);
  auto g = find_monic_factor(F);
  REQUIRE(g.has_value());
  check_proper_factor(F, *g);
}

TEST_CASE("Eisenstein trinomials are irreducible") {
  for (int m = 1; m <= 11; ++m) {
    IntPoly F = IntPoly::trinomial(12, m, 2, 2);
    CAPTURE(m);
    CHECK(is_irreducible_z(F));
  }
}

TEST_CASE("irreducible with no irreducible reduction anywhere") {
  // minimal polynomial of sqrt(2)+sqrt(3): reducible mod every prime,
  // so the answer must come from lift-and-recombine
  IntPoly F = poly({1, 0, -10, 0, 1});
  CHECK(is_irreducible_z(F));
  CHECK_FALSE(find_monic_factor(F).has_value());
}

TEST_CASE("recombination finds the genuine split of a hard product") {
  IntPoly A = poly({1, 0, -10, 0, 1});  // x^4 - 10x^2 + 1
  IntPoly B = poly({1, 0, 0, 0, 1});    // x^4 + 1
  IntPoly F = A * B;
  auto g = find_monic_factor(F);
  REQUIRE(g.has_value());
  check_proper_factor(F, *g);
  CHECK((g->degree() % 4) == 0);  // only degree-4 factors exist
}

TEST_CASE("random monic products always split") {
  std::mt19937_64 rng(20260816);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<long> ca(5), cb(7);
    for (auto& x : ca) x = coeff(rng);
    for (auto& x : cb) x = coeff(rng);
    ca.push_back(1);  // monic degree 5
    cb.push_back(1);  // monic degree 7
    IntPoly F = poly(ca) * poly(cb);
    if (F.coeff(0) == 0) continue;
    auto g = find_monic_factor(F);
    REQUIRE(g.has_value());
    check_proper_factor(F, *g);
  }
}

TEST_CASE("linear root implies reducible across a trinomial sweep") {
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) {
      if (b == 0) continue;
      IntPoly F = IntPoly::trinomial(12, 1, a, b);
      if (F.eval(1) == 0 || F.eval(-1) == 0) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(find_monic_factor(F).has_value());
      }
    }
  }
}

TEST_CASE("known number-field trinomials pass the gate") {
  CHECK(is_irreducible_z(IntPoly::trinomial(12, 1, 72, 51)));
  CHECK(is_irreducible_z(IntPoly::trinomial(12, 1, 84, 147)));
  CHECK(is_irreducible_z(IntPoly::trinomial(12, 1, 336, 5195)));
  CHECK(is_irreducible_z(IntPoly::trinomial(12, 6, 60, 15)));
}
