#pragma once
/* First-order analysis at a prime p: Dedekind index criterion, per-factor
 * polygon regularity, splitting shapes of regular polynomials, and the
 * shifted-argument search that repairs irregular linear branches. */

#include <optional>
#include <string>
#include <vector>

#include "oreforge/polygon.hpp"

namespace oreforge {

struct Branch {
  long e, f;
  bool operator==(const Branch&) const = default;
  bool operator<(const Branch& o) const { return e != o.e ? e < o.e : f < o.f; }
};
using Shape = std::vector<Branch>;  // kept sorted: a multiset of (e, f)

std::string shape_str(const Shape& s);

struct SplittingShape {
  BigInt p;
  Shape branches;
  bool conclusive;
  std::string method;
};

struct SideAnalysis {
  Side side;
  FqPoly residual;
  std::vector<FqFactor> factors;
  bool squarefree;
};

struct PhiAnalysis {
  PhiData data;
  long mult;  // multiplicity of phibar in Fbar
  std::vector<SideAnalysis> sides;
  bool regular;
};

struct OreAnalysis {
  BigInt p;
  std::vector<PhiAnalysis> phis;
  long long index_lower_bound;  // sum of deg(phi) * polygon_index
  bool p_regular;
};

/* canonical monic lift: linear factors lift to x - r with the root r in [0, p);
 * higher degrees lift coefficients to [0, p) */
IntPoly canonical_lift(const FpPoly& g);

PhiAnalysis analyze_phi(const IntPoly& F, const IntPoly& phi, long mult,
                        const Valuation& vp);
OreAnalysis ore_analyze(const IntPoly& F, const Valuation& vp);

/* p divides the index (Z_K : Z[x]/(F))? */
bool dedekind_index_divides(const IntPoly& F, const Valuation& vp);

/* splitting shape of a regular analysis; throws std::domain_error otherwise */
SplittingShape ore_split(const OreAnalysis& oa);

/* smallest-k shift s = r + p*(0, 1, -1, 2, -2, ...) making the first irregular
 * linear branch regular; candidates per branch capped at `bound` */
std::optional<BigInt> find_regular_shift(const IntPoly& F, const Valuation& vp,
                                         long bound = 64);

}  // namespace oreforge
