#pragma once
/* Independent cross-check machinery: p-maximal orders by radical/multiplier
 * iteration and splitting shapes read off the F_p-algebra O/pO.  Exact
 * rational linear algebra throughout; no Newton polygon code is involved. */

#include <vector>

#include "oreforge/arith.hpp"
#include "oreforge/ore.hpp"

namespace oreforge {

struct PMaximalOrder {
  int n;                                  // degree
  std::vector<std::vector<BigInt>> basis; // rows: numerators over the power basis
  long long denom_exp;                    // common denominator p^denom_exp
  long long index_vp;                     // v_p([O_K : Z[x]/(F)])
};

/* F monic and separable (nonzero discriminant); F may be reducible, in which
 * case the maximal order of the product algebra Q[x]/(F) is computed.
 * Construction: repeated p-radical / ring-of-multipliers steps. */
PMaximalOrder p_maximal_order(const IntPoly& F, const BigInt& p);

long long p_maximal_index(const IntPoly& F, const BigInt& p);

/* multiset of (ramification index, residue degree) of the primes above p,
 * from the local component decomposition of O/pO at the p-maximal order */
Shape oracle_splitting_shape(const IntPoly& F, const BigInt& p);

}  // namespace oreforge
