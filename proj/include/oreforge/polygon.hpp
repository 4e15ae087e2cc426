#pragma once
/* phi-adic Newton polygons at a prime p: expansion digits, principal part
 * (strictly negative slopes of the lower hull), lattice-point index count,
 * and first-order residual polynomials over the residue field F_p[u]/(phibar). */

#include <vector>

#include "oreforge/arith.hpp"
#include "oreforge/finitefield.hpp"

namespace oreforge {

/* digits a_i with F = sum a_i phi^i, deg a_i < deg phi; phi monic */
std::vector<IntPoly> phi_expansion(const IntPoly& F, const IntPoly& phi);

struct PolygonPoint {
  long i;
  ExtNat u;
};

struct Side {
  long x0, x1;       // horizontal extent, x0 < x1
  long long y0, y1;  // y0 > y1
  long long hr, er;  // slope = -hr/er in lowest terms
  long d;            // gcd(length, height): residual degree

  long length() const { return x1 - x0; }
  long long height() const { return y0 - y1; }
};

struct NewtonPolygon {
  std::vector<Side> sides;  // steepest (leftmost) first; empty if no negative slopes
  long start() const { return sides.empty() ? 0 : sides.front().x0; }
  long end() const { return sides.empty() ? 0 : sides.back().x1; }
  long length() const { return sides.empty() ? 0 : end() - start(); }
};

NewtonPolygon principal_polygon(const std::vector<PolygonPoint>& pts);

/* integer points on or below the polygon, strictly above the horizontal axis,
 * strictly right of the vertical axis */
long long polygon_index(const NewtonPolygon& np);

struct PhiData {
  IntPoly phi;
  FqCtx rf;  // residue field at phi
  std::vector<IntPoly> digits;
  std::vector<PolygonPoint> pts;
  NewtonPolygon np;
  long long index_contribution;  // deg(phi) * polygon_index
};

PhiData phi_newton_polygon(const IntPoly& F, const IntPoly& phi, const Valuation& vp);

/* residual coefficients t_j = digit(x0 + j*er) / p^(y0 - j*hr) mod (p, phi) */
FqPoly side_residual(const PhiData& pd, const Side& s, const Valuation& vp);

}  // namespace oreforge
