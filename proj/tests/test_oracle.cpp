#include <doctest.h>

#include <random>

#include "oreforge/arith.hpp"
#include "oreforge/finitefield.hpp"
#include "oreforge/oracle.hpp"
#include "oreforge/ore.hpp"

using namespace oreforge;

namespace {

IntPoly tri(const BigInt& a, const BigInt& b, int m = 1) {
  return IntPoly::trinomial(12, m, a, b);
}

std::string oracle_shape_str(const IntPoly& F, long p) {
  return shape_str(oracle_splitting_shape(F, p));
}

std::string sorted_shape_str(Shape s) {
  std::sort(s.begin(), s.end());
  return shape_str(s);
}

}  // namespace

TEST_CASE("maximal order index valuations") {
  CHECK(p_maximal_index(tri(84, 147), 2) == 8);
  CHECK(p_maximal_index(tri(84, 147), 3) == 0);
  CHECK(p_maximal_index(tri(8, 3), 2) == 6);
  CHECK(p_maximal_index(tri(1, 1), 7) == 0);

  /* x^12 + 1 generates Q(zeta_8) x Q(zeta_24); comparing discriminants gives
   * module index exactly 3^4 */
  IntPoly c(std::vector<BigInt>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(p_maximal_index(c, 2) == 0);
  CHECK(p_maximal_index(c, 3) == 4);
}

TEST_CASE("maximal order basis invariants") {
  PMaximalOrder pm = p_maximal_order(tri(84, 147), 2);
  CHECK(pm.n == 12);
  CHECK(pm.index_vp == 8);
  /* determinant of the upper-triangular basis accounts for the full index:
   * det(M) / p^(n e) = p^(-index) */
  BigInt det = 1;
  for (int i = 0; i < 12; i++) det *= pm.basis[i][i];
  BigInt expect = pow_bigint(2, static_cast<unsigned long>(12 * pm.denom_exp - pm.index_vp));
  CHECK(det == expect);
}

TEST_CASE("splitting shapes from the maximal order") {
  CHECK(oracle_shape_str(tri(8, 3), 2) == "{(2,2), (2,2), (2,2)}");
  CHECK(oracle_shape_str(tri(84, 147), 2) == "{(1,1), (1,1), (2,1), (2,4)}");
  CHECK(oracle_shape_str(tri(120, -610), 3) == "{(1,1), (1,1), (1,1), (3,1), (3,2)}");
  CHECK(oracle_shape_str(tri(24576, 216128), 2) == "{(2,1), (2,1), (2,2), (2,2)}");

  /* at an unramified prime the shape is the mod-p factorization pattern */
  {
    IntPoly F = tri(1, 1);
    Shape expect;
    for (const auto& [g, mult] : factor_mod_p(F, 7)) {
      CHECK(mult == 1);
      expect.push_back({1, g.degree()});
    }
    CHECK(oracle_shape_str(F, 7) == sorted_shape_str(expect));
  }

  IntPoly quartic(std::vector<BigInt>{100, 0, -4, 0, 1});
  CHECK(oracle_shape_str(quartic, 2) == "{(4,1)}");
}

TEST_CASE("oracle agrees with regular one-level analysis") {
  std::mt19937_64 rng(0x5eedf00dULL);
  std::uniform_int_distribution<long> coeff(-2000, 2000);
  const long primes[] = {2, 3, 5};
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 40; trial++) {
    BigInt a = coeff(rng), b = coeff(rng);
    int m = (trial % 2 == 0) ? 1 : 5;
    IntPoly F = tri(a, b, m);
    if (discriminant(F) == 0) continue;
    long p = primes[trial % 3];
    Valuation vp((BigInt(p)));
    OreAnalysis oa = ore_analyze(F, vp);
    if (!oa.p_regular) continue;
    CHECK(p_maximal_index(F, p) == oa.index_lower_bound);
    CHECK(oracle_shape_str(F, p) == sorted_shape_str(ore_split(oa).branches));
    checked++;
  }
  CHECK(checked == 40);
}

TEST_CASE("index valuation fits inside the discriminant") {
  std::mt19937_64 rng(0xfeedbeefULL);
  std::uniform_int_distribution<long> coeff(-500, 500);
  for (int trial = 0; trial < 25; trial++) {
    BigInt a = coeff(rng), b = coeff(rng);
    IntPoly F = tri(a, b);
    BigInt d = discriminant(F);
    if (d == 0) continue;
    for (long p : {2L, 3L}) {
      Valuation vp((BigInt(p)));
      long long nu_disc = vp(d).value();
      long long nu_ind = p_maximal_index(F, p);
      CHECK(nu_disc - 2 * nu_ind >= 0);
      /* lower bound from the one-level analysis never exceeds the true value */
      CHECK(ore_analyze(F, vp).index_lower_bound <= nu_ind);
    }
  }
}
