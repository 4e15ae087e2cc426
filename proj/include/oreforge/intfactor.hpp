#pragma once
/* Complete irreducibility decision for monic integer polynomials of small
 * degree: squarefree split, modular degree sieve, and Hensel-lifted factor
 * recombination finished by an exact divisibility check. */

#include <optional>

#include "oreforge/arith.hpp"

namespace oreforge {

/* A monic proper factor (1 <= deg < deg F) of the monic polynomial F, or
 * nullopt when F is irreducible over the integers.  Deterministic and
 * complete; throws std::invalid_argument unless F is monic of degree >= 1. */
std::optional<IntPoly> find_monic_factor(const IntPoly& F);

/* True iff the monic polynomial F (degree >= 1) is irreducible over the
 * integers.  Constants are never irreducible. */
bool is_irreducible_z(const IntPoly& F);

}  // namespace oreforge
