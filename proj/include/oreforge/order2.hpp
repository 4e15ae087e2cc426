#pragma once
/* Second-order analysis of a linear branch whose first-order side carries a
 * repeated irreducible residual factor: weighted valuations, key polynomials,
 * second-order polygons/residuals, and refinement of keys that are not yet
 * close enough to the local factors. */

#include "oreforge/ore.hpp"

namespace oreforge {

/* data of the unresolved first-order situation at a monic linear phi1:
 * side of slope -h1/e1 (gcd(h1, e1) = 1) whose residual polynomial is
 * divisible by psi^mult, psi monic irreducible over F_p, mult >= 2 */
struct Order2Type {
  IntPoly phi1;
  long long h1 = 1;
  long long e1 = 1;
  FpPoly psi;
  long mult = 0;
};

/* weighted valuation: e1 * v_p on constants, h1 per power of phi1;
 * infinite only on the zero polynomial */
ExtNat omega2(const Order2Type& t, const Valuation& vp, const IntPoly& g);

/* leading residual of g along the slope: coefficients of the minimal-weight
 * digits, one per lattice step e1, as a polynomial in y over F_p
 * (NOT reduced mod psi; degree < f1 for phi1-digits of keys) */
FpPoly leading_residual(const Order2Type& t, const Valuation& vp, const IntPoly& g);

/* a key polynomial represents the branch: monic of degree e1*deg(psi),
 * minimal weight e1*deg(psi)*h1, leading residual equal to psi */
bool key_admissible(const Order2Type& t, const Valuation& vp, const IntPoly& key);

/* p-power weighted lift of psi along the slope; admissible by construction */
IntPoly construct_key(const Order2Type& t, const Valuation& vp);

/* frozen candidate keys, written as polynomials in the branch variable
 * (transplanted onto phi1 by composition before use) */
std::vector<IntPoly> key_poly_catalog(long p);

/* an unresolved part: the primes it accounts for have ramification index
 * divisible by e_multiple, residue degree divisible by f_multiple, and their
 * e*f sum to degree */
struct Order2Constraint {
  long long degree;
  long e_multiple;
  long f_multiple;
};

struct Order2SideAnalysis {
  Side side;  // in weighted coordinates; slope -h2/e2, e2 = side.er
  FqPoly residual;
  std::vector<FqFactor> factors;
  bool squarefree;
};

struct Order2Outcome {
  bool conclusive = false;
  Shape branches;                            // fully resolved primes (e, f)
  std::vector<Order2Constraint> constraints; // what remains open
  IntPoly key;
  int refinements = 0;
  long long key_value = 0;                // omega2(key)
  std::vector<PolygonPoint> points;       // (i, omega2(a_i) + i*key_value)
  NewtonPolygon np;
  std::vector<Order2SideAnalysis> sides;
};

/* full second-order analysis: try catalog keys (admissible ones) and the
 * constructed key, refine repeated-linear integer-slope sides up to
 * refine_cap times, return the first conclusive outcome or the one with the
 * least unresolved degree */
Order2Outcome order2_analyze(const IntPoly& F, const Order2Type& t,
                             const Valuation& vp, int refine_cap = 4);

}  // namespace oreforge
