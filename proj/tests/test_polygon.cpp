#include <random>

#include "doctest.h"
#include "oreforge/polygon.hpp"

using namespace oreforge;

namespace {
NewtonPolygon np_of(std::vector<std::pair<long, long long>> finite_pts,
                    std::vector<long> inf_at = {}) {
  std::vector<PolygonPoint> pts;
  for (auto [i, u] : finite_pts) pts.push_back({i, ExtNat::finite(u)});
  for (long i : inf_at) pts.push_back({i, ExtNat::infinity()});
  std::sort(pts.begin(), pts.end(),
            [](const PolygonPoint& a, const PolygonPoint& b) { return a.i < b.i; });
  return principal_polygon(pts);
}

/* independent lattice enumerator: rational floor per column */
long long brute_index(const NewtonPolygon& np) {
  if (np.sides.empty()) return 0;
  long long n = 0;
  for (long x = std::max<long>(np.start(), 1); x <= np.end(); x++) {
    for (const auto& s : np.sides) {
      if (x < s.x0 || x > s.x1) continue;
      long long ymax = (s.y0 * s.length() - (x - s.x0) * s.height());
      ymax = ymax >= 0 ? ymax / s.length() : -((-ymax + s.length() - 1) / s.length());
      if (ymax > 0) n += ymax;
      break;
    }
  }
  return n;
}
}  // namespace

TEST_CASE("phi-adic expansion digits") {
  IntPoly F = IntPoly::trinomial(12, 1, 84, 147);
  auto base_x = phi_expansion(F, IntPoly::x());
  REQUIRE(base_x.size() == 13);
  CHECK(base_x[0] == IntPoly::constant(147));
  CHECK(base_x[1] == IntPoly::constant(84));
  CHECK(base_x[5] == IntPoly());
  CHECK(base_x[12] == IntPoly::constant(1));

  IntPoly phi2({1, 1, 1});  // x^2 + x + 1
  auto d2 = phi_expansion(F, phi2);
  REQUIRE(d2.size() == 7);
  CHECK(d2[0] == IntPoly({148, 84}));  // a x + b + 1
  CHECK(d2[1] == IntPoly({-4, 4}));    // 4x - 4
  CHECK(d2[2] == IntPoly({0, -18}));   // -18x

  /* m = 2 tail: a_0 = -a x - a + b + 1 */
  auto d22 = phi_expansion(IntPoly::trinomial(12, 2, 5, 3), phi2);
  CHECK(d22[0] == IntPoly({-1, -5}));

  std::mt19937_64 rng(0x9a9a);
  std::uniform_int_distribution<long> dc(-60, 60);
  for (int t = 0; t < 30; t++) {
    std::vector<BigInt> fc(13);
    for (auto& v : fc) v = dc(rng);
    fc[12] = 1;
    IntPoly G(std::move(fc));
    for (int dphi : {2, 3, 5}) {
      std::vector<BigInt> pc(dphi + 1);
      for (auto& v : pc) v = dc(rng);
      pc[dphi] = 1;
      IntPoly phi(std::move(pc));
      auto digits = phi_expansion(G, phi);
      IntPoly acc, pw = IntPoly::constant(1);
      for (const auto& dgt : digits) {
        CHECK(dgt.degree() < phi.degree());
        acc = acc + dgt * pw;
        pw = pw * phi;
      }
      CHECK(acc == G);
    }
  }
}

TEST_CASE("principal polygon: hulls, slopes, degrees") {
  /* collinear cloud merges into one side */
  auto np1 = np_of({{0, 2}, {1, 2}, {2, 1}, {3, 1}, {4, 0}});
  REQUIRE(np1.sides.size() == 1);
  CHECK(np1.sides[0].x0 == 0);
  CHECK(np1.sides[0].x1 == 4);
  CHECK(np1.sides[0].hr == 1);
  CHECK(np1.sides[0].er == 2);
  CHECK(np1.sides[0].d == 2);

  /* three sides, steepest first */
  auto np2 = np_of({{0, 7}, {1, 3}, {2, 1}, {3, 2}, {4, 0}});
  REQUIRE(np2.sides.size() == 3);
  CHECK(np2.sides[0].hr == 4);
  CHECK(np2.sides[0].er == 1);
  CHECK(np2.sides[1].hr == 2);
  CHECK(np2.sides[1].er == 1);
  CHECK(np2.sides[2].hr == 1);
  CHECK(np2.sides[2].er == 2);
  CHECK(np2.length() == 4);

  /* height-1 side */
  auto np3 = np_of({{0, 1}, {5, 0}});
  REQUIRE(np3.sides.size() == 1);
  CHECK(np3.sides[0].d == 1);

  /* infinite points are omitted from the cloud */
  auto np4 = np_of({{0, 5}, {2, 1}, {3, 0}}, {1});
  REQUIRE(np4.sides.size() == 2);
  CHECK(np4.sides[0].x1 == 2);
  CHECK(np4.sides[0].d == 2);  // height 4, length 2

  /* no negative slopes at all */
  auto np5 = np_of({{0, 0}, {1, 2}});
  CHECK(np5.sides.empty());
}

TEST_CASE("polygon lattice index") {
  CHECK(polygon_index(np_of({{0, 3}, {3, 0}})) == 3);
  CHECK(polygon_index(np_of({{0, 2}, {4, 0}})) == 2);
  CHECK(polygon_index(np_of({{0, 1}, {7, 0}})) == 0);
  CHECK(polygon_index(np_of({{0, 4}, {12, 0}})) == 18);
  CHECK(polygon_index(np_of({{0, 7}, {1, 3}, {2, 1}, {4, 0}})) == 4);

  std::mt19937_64 rng(0x1a77);
  std::uniform_int_distribution<long> dx(1, 12), dy(0, 9);
  for (int t = 0; t < 200; t++) {
    std::vector<std::pair<long, long long>> pts;
    long x = 0;
    int k = std::uniform_int_distribution<int>(2, 6)(rng);
    for (int i = 0; i < k; i++) {
      pts.push_back({x, dy(rng)});
      x += dx(rng);
    }
    auto np = np_of(pts);
    CHECK(polygon_index(np) == brute_index(np));
  }
}

TEST_CASE("first-order residual polynomials") {
  Valuation v2(2);

  /* single side at the quadratic branch, coefficients in F_4 */
  IntPoly F1 = IntPoly::trinomial(12, 1, 84, 147);
  PhiData pd1 = phi_newton_polygon(F1, IntPoly({1, 1, 1}), v2);
  REQUIRE(pd1.np.sides.size() == 1);
  CHECK(pd1.index_contribution == 4);
  FqPoly r1 = side_residual(pd1, pd1.np.sides[0], v2);
  CHECK(r1.str(pd1.rf) == "(u + 1)*y^2 + u*y + u + 1");
  CHECK(fq_is_irreducible(pd1.rf, r1));

  /* same branch, class with constant term 1: splits into distinct linear factors */
  IntPoly F2 = IntPoly::trinomial(12, 1, 8, 3);
  PhiData pd2 = phi_newton_polygon(F2, IntPoly({1, 1, 1}), v2);
  REQUIRE(pd2.np.sides.size() == 1);
  FqPoly r2 = side_residual(pd2, pd2.np.sides[0], v2);
  CHECK(r2.str(pd2.rf) == "(u + 1)*y^2 + u*y + 1");
  auto fs2 = fq_factor(pd2.rf, r2);
  REQUIRE(fs2.size() == 2);
  CHECK(fs2[0].f.str(pd2.rf) == "y + 1");
  CHECK(fs2[1].f.str(pd2.rf) == "y + u");

  /* linear branch x - 1 of the same polynomial */
  PhiData pd3 = phi_newton_polygon(F2, IntPoly({-1, 1}), v2);
  REQUIRE(pd3.np.sides.size() == 1);
  FqPoly r3 = side_residual(pd3, pd3.np.sides[0], v2);
  CHECK(r3.str(pd3.rf) == "y^2 + y + 1");

  /* repeated residual: valuation-4 constant tail */
  IntPoly F4 = IntPoly::trinomial(12, 1, 16, 16);
  PhiData pd4 = phi_newton_polygon(F4, IntPoly::x(), v2);
  REQUIRE(pd4.np.sides.size() == 1);
  CHECK(pd4.np.sides[0].d == 4);
  CHECK(pd4.index_contribution == 18);
  FqPoly r4 = side_residual(pd4, pd4.np.sides[0], v2);
  auto fs4 = fq_factor(pd4.rf, r4);
  REQUIRE(fs4.size() == 1);
  CHECK(fs4[0].mult == 4);  // (y+1)^4
}
