#include "doctest.h"
#include "oreforge/order2.hpp"

using namespace oreforge;

namespace {
Order2Type mk(long p, long long h1, long long e1, std::vector<long> psi, long mult,
              IntPoly phi1 = IntPoly::x()) {
  return Order2Type{phi1, h1, e1, FpPoly(p, std::move(psi)), mult};
}
const Valuation V2(2), V3(3);
}  // namespace

TEST_CASE("weighted valuations") {
  auto t = mk(2, 1, 2, {1, 1}, 2);  // slope -1/2, psi = y + 1
  CHECK(omega2(t, V2, IntPoly({-2, 0, 1})) == ExtNat::finite(2));
  CHECK(omega2(t, V2, IntPoly({0, 4})) == ExtNat::finite(5));
  CHECK(omega2(t, V2, IntPoly::constant(2)) == ExtNat::finite(2));
  CHECK(omega2(t, V2, IntPoly::x()) == ExtNat::finite(1));
  CHECK(omega2(t, V2, IntPoly()) == ExtNat::infinity());

  /* shifted branch variable */
  auto ts = mk(2, 1, 2, {1, 1}, 2, IntPoly({-1, 1}));
  CHECK(omega2(ts, V2, IntPoly({-1, 1})) == ExtNat::finite(1));
  CHECK(omega2(ts, V2, IntPoly({1, 1})) == ExtNat::finite(1));  // x+1 = (x-1)+2
}

TEST_CASE("leading residuals along the slope") {
  auto t = mk(2, 1, 2, {1, 1}, 2);
  CHECK(leading_residual(t, V2, IntPoly({-2, 0, 1})) == FpPoly(2, {1, 1}));
  CHECK(leading_residual(t, V2, IntPoly({-6, -2, 1})) == FpPoly(2, {1, 1}));
  CHECK(leading_residual(t, V2, IntPoly::constant(6)) == FpPoly(2, {1}));

  auto tq = mk(2, 1, 2, {1, 1, 1}, 2);  // psi = y^2 + y + 1
  CHECK(leading_residual(tq, V2, IntPoly({-4, 0, -2, 0, 1})) == FpPoly(2, {1, 1, 1}));
}

TEST_CASE("key admissibility and construction") {
  auto t = mk(2, 1, 2, {1, 1}, 2);
  CHECK(key_admissible(t, V2, IntPoly({-2, 0, 1})));
  CHECK(key_admissible(t, V2, IntPoly({-2, -2, 1})));
  CHECK(key_admissible(t, V2, IntPoly({-6, -2, 1})));
  CHECK_FALSE(key_admissible(t, V2, IntPoly({-4, 0, 1})));   // weight 4, too deep
  CHECK_FALSE(key_admissible(t, V2, IntPoly({-2, 0, 0, 1})));  // degree 3
  CHECK(key_admissible(t, V2, construct_key(t, V2)));
  CHECK(construct_key(t, V2) == IntPoly({2, 0, 1}));

  auto t13 = mk(2, 1, 3, {1, 1}, 2);
  CHECK(key_admissible(t13, V2, IntPoly({-2, 0, 0, 1})));
  CHECK(key_admissible(t13, V2, IntPoly({-2, -2, 0, 1})));
  CHECK(key_admissible(t13, V2, IntPoly({-2, 0, -2, 1})));

  auto t43 = mk(2, 4, 3, {1, 1}, 2);
  CHECK(key_admissible(t43, V2, IntPoly({-16, 0, 0, 1})));
  CHECK_FALSE(key_admissible(mk(2, 2, 3, {1, 1}, 2), V2, IntPoly({-16, 0, 0, 1})));

  auto tq = mk(2, 1, 2, {1, 1, 1}, 2);
  CHECK(key_admissible(tq, V2, IntPoly({-4, 0, -2, 0, 1})));
  CHECK(key_admissible(tq, V2, IntPoly({-12, -4, -2, -2, 1})));
  CHECK(key_admissible(tq, V2, construct_key(tq, V2)));
  CHECK(construct_key(tq, V2) == IntPoly({4, 0, 2, 0, 1}));

  auto t3 = mk(3, 1, 2, {1, 1}, 2);  // psi = y + 1 over F_3
  CHECK(key_admissible(t3, V3, IntPoly({3, 0, 1})));
  CHECK_FALSE(key_admissible(t3, V3, IntPoly({-3, 0, 1})));  // represents y + 2
  CHECK(key_admissible(mk(3, 1, 2, {2, 1}, 2), V3, IntPoly({-3, 0, 1})));
}

TEST_CASE("full second-order analysis with one refinement") {
  /* x^4 - 4x^2 + 100 at p = 2: first-order residual (y+1)^2 along slope -1/2;
   * the first key x^2 - 2 sees (Y+1)^2 on an integer slope, one refinement to
   * x^2 + 2x - 2 ... x^2 + 4x - 2 separates: single side of slope -9/2,
   * residual Y + 1, so one totally ramified prime e = 4, f = 1 */
  IntPoly F({100, 0, -4, 0, 1});
  auto t = mk(2, 1, 2, {1, 1}, 2);
  Order2Outcome oc = order2_analyze(F, t, V2);
  CHECK(oc.conclusive);
  REQUIRE(oc.branches.size() == 1);
  CHECK(oc.branches[0] == Branch{4, 1});
  CHECK(oc.refinements == 1);
  CHECK(oc.key == IntPoly({-2, 4, 1}));
  REQUIRE(oc.np.sides.size() == 1);
  CHECK(oc.np.sides[0].hr == 9);
  CHECK(oc.np.sides[0].er == 2);
  FqCtx fq(FpPoly(2, {1, 1}));
  CHECK(oc.sides[0].residual.str(fq) == "y + 1");
}

TEST_CASE("second-order splitting of a sextic residual power") {
  /* x^12 + 24576x + 216128 at p = 2: single first-order side of slope -1/2
   * with residual (y+1)^2 (y^2+y+1)^2; each square resolves at order two */
  IntPoly F = IntPoly::trinomial(12, 1, 24576, 216128);

  Order2Outcome lin = order2_analyze(F, mk(2, 1, 2, {1, 1}, 2), V2);
  CHECK(lin.conclusive);
  CHECK(shape_str(lin.branches) == "{(2,1), (2,1)}");

  Order2Outcome quad = order2_analyze(F, mk(2, 1, 2, {1, 1, 1}, 2), V2);
  CHECK(quad.conclusive);
  CHECK(shape_str(quad.branches) == "{(2,2), (2,2)}");
}
