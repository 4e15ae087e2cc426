#include <random>

#include "doctest.h"
#include "oreforge/ore.hpp"

using namespace oreforge;

namespace {
const Valuation V2(2), V3(3), V5(5), V7(7);

bool phi_divides_over_Z(const IntPoly& F) {
  // any residual factor dividing F over Z makes the expansion tail vanish
  for (long p : {2L, 3L, 5L}) {
    for (const auto& fac : factor_mod_p(F, p))
      if (F.divrem_monic(canonical_lift(fac.f)).second.is_zero()) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("canonical lifts of residual factors") {
  FpPoly xp1(2, {1, 1});
  CHECK(canonical_lift(xp1) == IntPoly({-1, 1}));  // root 1 -> x - 1
  FpPoly xp2(3, {1, 1});                           // root -1 = 2
  CHECK(canonical_lift(xp2) == IntPoly({-2, 1}));
  FpPoly quad(2, {1, 1, 1});
  CHECK(canonical_lift(quad) == IntPoly({1, 1, 1}));
  FpPoly xonly(5, {0, 1});
  CHECK(canonical_lift(xonly) == IntPoly::x());
}

TEST_CASE("index divisibility criterion") {
  /* x^12 + 1 factors as two cyclotomic fields; only 3 divides the index */
  IntPoly C = IntPoly::trinomial(12, 1, 0, 1);
  CHECK_FALSE(dedekind_index_divides(C, V2));
  CHECK(dedekind_index_divides(C, V3));

  CHECK(dedekind_index_divides(IntPoly::trinomial(12, 1, 84, 147), V2));
  CHECK_FALSE(dedekind_index_divides(IntPoly::trinomial(12, 1, 84, 147), V3));
  CHECK(dedekind_index_divides(IntPoly::trinomial(12, 1, 8, 3), V2));
}

TEST_CASE("regular analysis and splitting shapes") {
  /* both residual branches squarefree: three primes e=2, f=2 */
  IntPoly F83 = IntPoly::trinomial(12, 1, 8, 3);
  OreAnalysis oa = ore_analyze(F83, V2);
  CHECK(oa.p_regular);
  CHECK(oa.index_lower_bound == 6);
  SplittingShape sp = ore_split(oa);
  CHECK(sp.conclusive);
  CHECK(shape_str(sp.branches) == "{(2,2), (2,2), (2,2)}");

  /* repeated residual root at the linear branch: not regular, split refuses */
  IntPoly F84 = IntPoly::trinomial(12, 1, 84, 147);
  OreAnalysis bad = ore_analyze(F84, V2);
  CHECK_FALSE(bad.p_regular);
  CHECK(bad.index_lower_bound == 7);  // strict: the exact value after repair is 8
  CHECK_THROWS_AS((void)ore_split(bad), std::domain_error);

  /* unramified prime: all branches multiplicity one, e = 1 */
  IntPoly F11 = IntPoly::trinomial(12, 1, 1, 1);
  OreAnalysis ua = ore_analyze(F11, V7);
  CHECK(ua.p_regular);
  CHECK(ua.index_lower_bound == 0);
  long deg_total = 0;
  for (const auto& br : ore_split(ua).branches) {
    CHECK(br.e == 1);
    deg_total += br.f;
  }
  CHECK(deg_total == 12);
}

TEST_CASE("argument shifts repairing irregular linear branches") {
  IntPoly F84 = IntPoly::trinomial(12, 1, 84, 147);
  auto s2 = find_regular_shift(F84, V2);
  REQUIRE(s2.has_value());
  CHECK(*s2 == 3);

  IntPoly G = F84.shift_arg(*s2);
  OreAnalysis oa = ore_analyze(G, V2);
  CHECK(oa.p_regular);
  CHECK(oa.index_lower_bound == 8);
  CHECK(shape_str(ore_split(oa).branches) == "{(1,1), (1,1), (2,1), (2,4)}");

  IntPoly F24 = IntPoly::trinomial(12, 1, 24576, 216128);
  auto s3 = find_regular_shift(F24, V3);
  REQUIRE(s3.has_value());
  CHECK(*s3 == -2);
  OreAnalysis oa3 = ore_analyze(F24.shift_arg(*s3), V3);
  CHECK(oa3.p_regular);

  /* polynomials already regular report shift zero via the search order */
  auto s0 = find_regular_shift(IntPoly::trinomial(12, 1, 8, 3), V2);
  REQUIRE(s0.has_value());
  CHECK(*s0 == 0);
  OreAnalysis oa0 = ore_analyze(IntPoly::trinomial(12, 1, 8, 3).shift_arg(*s0), V2);
  CHECK(oa0.p_regular);
}

TEST_CASE("index criterion agrees with polygon lower bound") {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> dc(-300, 300);
  Valuation const* vs[] = {&V2, &V3, &V5};
  int done = 0;
  while (done < 120) {
    BigInt a = dc(rng), b = dc(rng);
    if (b == 0) continue;
    IntPoly F = IntPoly::trinomial(12, 1 + (done % 2) * 4, a, b);  // m = 1 or 5
    if (phi_divides_over_Z(F)) continue;
    for (auto* v : vs) {
      OreAnalysis oa = ore_analyze(F, *v);
      bool dd = dedekind_index_divides(F, *v);
      CHECK(dd == (oa.index_lower_bound >= 1));
      if (oa.p_regular) {
        long tot = 0;
        for (const auto& br : ore_split(oa).branches) tot += br.e * br.f;
        CHECK(tot == 12);
      }
    }
    done++;
  }
}
