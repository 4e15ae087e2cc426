#include "oreforge/polygon.hpp"

#include <numeric>
#include <stdexcept>

namespace oreforge {

std::vector<IntPoly> phi_expansion(const IntPoly& F, const IntPoly& phi) {
  if (!phi.is_monic() || phi.degree() < 1)
    throw std::invalid_argument("phi_expansion: phi must be monic, degree >= 1");
  std::vector<IntPoly> digits;
  IntPoly rest = F;
  while (!rest.is_zero()) {
    auto [q, r] = rest.divrem_monic(phi);
    digits.push_back(r);
    rest = std::move(q);
  }
  if (digits.empty()) digits.push_back(IntPoly());
  return digits;
}

NewtonPolygon principal_polygon(const std::vector<PolygonPoint>& pts) {
  /* lower convex hull of the finite points, then keep negative slopes only */
  std::vector<PolygonPoint> fin;
  for (const auto& pt : pts)
    if (!pt.u.is_infinity()) fin.push_back(pt);
  NewtonPolygon np;
  if (fin.size() < 2) return np;

  std::vector<std::pair<long, long long>> hull;  // monotone chain, lower hull
  for (const auto& pt : fin) {
    long x = pt.i;
    long long y = pt.u.value();
    while (hull.size() >= 2) {
      auto [x1, y1] = hull[hull.size() - 2];
      auto [x2, y2] = hull[hull.size() - 1];
      /* drop middle point unless it turns strictly left (convex from below) */
      __int128 cross = static_cast<__int128>(x2 - x1) * (y - y1) -
                       static_cast<__int128>(y2 - y1) * (x - x1);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.emplace_back(x, y);
  }

  for (size_t k = 0; k + 1 < hull.size(); k++) {
    auto [x0, y0] = hull[k];
    auto [x1, y1] = hull[k + 1];
    if (y1 >= y0) break;  // principal part = negative slopes only
    Side s;
    s.x0 = x0;
    s.x1 = x1;
    s.y0 = y0;
    s.y1 = y1;
    long long g = std::gcd(static_cast<long long>(x1 - x0), y0 - y1);
    s.d = static_cast<long>(g);
    s.er = (x1 - x0) / g;
    s.hr = (y0 - y1) / g;
    np.sides.push_back(s);
  }
  return np;
}

long long polygon_index(const NewtonPolygon& np) {
  long long count = 0;
  for (const auto& s : np.sides) {
    /* floor of the side's value at integer x, summed over x in (x0, x1] plus
     * the left endpoint of the first side; points at or below y=0 drop out */
    long from = (&s == &np.sides.front()) ? s.x0 : s.x0 + 1;
    for (long x = std::max<long>(from, 1); x <= s.x1; x++) {
      long long num = static_cast<long long>(x - s.x0) * s.height();
      long long drop = (num + s.length() - 1) / s.length();  // ceil
      long long ymax = s.y0 - drop;
      if (x == s.x0) ymax = s.y0;
      if (ymax > 0) count += ymax;
    }
  }
  return count;
}

PhiData phi_newton_polygon(const IntPoly& F, const IntPoly& phi, const Valuation& vp) {
  long p = vp.prime().get_si();
  FpPoly phibar = FpPoly::from_int_poly(phi, p);
  if (phibar.degree() != phi.degree())
    throw std::invalid_argument("phi_newton_polygon: phi not monic mod p");
  PhiData pd{phi, FqCtx(phibar), phi_expansion(F, phi), {}, {}, 0};
  for (size_t i = 0; i < pd.digits.size(); i++)
    pd.pts.push_back({static_cast<long>(i), vp.gauss(pd.digits[i])});
  pd.np = principal_polygon(pd.pts);
  pd.index_contribution = static_cast<long long>(phi.degree()) * polygon_index(pd.np);
  return pd;
}

FqPoly side_residual(const PhiData& pd, const Side& s, const Valuation& vp) {
  const FqCtx& rf = pd.rf;
  long p = vp.prime().get_si();
  std::vector<FqCtx::Elem> t(s.d + 1, rf.zero());
  for (long j = 0; j <= s.d; j++) {
    long i = s.x0 + j * static_cast<long>(s.er);
    long long need = s.y0 - j * s.hr;
    const auto& u = pd.pts[i].u;
    if (u.is_infinity() || u.value() > need) continue;
    if (u.value() < need) throw std::logic_error("side_residual: point below side");
    IntPoly reduced = pd.digits[i].exact_div(pow_bigint(vp.prime(), need));
    t[j] = rf.reduce(FpPoly::from_int_poly(reduced, p));
  }
  return FqPoly(std::move(t));
}

}  // namespace oreforge
