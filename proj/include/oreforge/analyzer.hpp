#pragma once
/* End-to-end index analysis of the degree-12 trinomial fields
 * K = Q[x]/(x^12 + a x^m + b): per-prime splitting shapes, common index
 * divisors with their exact multiplicity where known, and the monogenity
 * verdict, with every congruence criterion double-checked against the
 * polygon engine. */

#include <optional>
#include <string>
#include <vector>

#include "oreforge/arith.hpp"
#include "oreforge/ore.hpp"

namespace oreforge {

enum class Trivalent { No, Yes, Unknown };
std::string trivalent_str(Trivalent t);

/* x^n + a x^m + b, 0 < m < n, b != 0, reduced so that no prime q has
 * q^(n-m) | a and q^n | b */
struct TrinomialField {
  int n = 12;
  int m = 1;
  BigInt a;
  BigInt b;
};

/* validates and applies the reduction (a, b) -> (a/q^(n-m), b/q^n);
 * throws std::invalid_argument on malformed input */
TrinomialField make_field(int n, int m, const BigInt& a, const BigInt& b);
IntPoly field_poly(const TrinomialField& K);

/* ---- counting criterion on a splitting shape ---- */

struct IndexVerdict {
  BigInt p;
  Trivalent divides_iK = Trivalent::Unknown;
  std::optional<long long> nu_iK;   // exact nu_p(i(K)) when tabulated
  Shape witness_shape;              // empty when the shape is not fully known
  bool shape_known = false;
  std::optional<long> witness_f;    // residue degree with more primes than
                                    // monic irreducibles of that degree
  std::string method;
};

/* more primes of residue degree f than monic irreducibles of degree f over
 * F_p, for some f?  Exact for every p; p >= 13 can never divide for n = 12. */
IndexVerdict engstrom_divides(const BigInt& p, const Shape& shape);

/* exact nu_p(i(K)) for the splitting shapes whose multiplicity is tabulated */
std::optional<long long> nu_iK_table(const BigInt& p, const Shape& shape);

/* ---- congruence criteria (checked, then trusted, never guessed) ---- */

struct CongruenceHit {
  long p;
  std::optional<long long> nu;  // exact nu_p(i(K)) when the criterion states it
};

/* any m in 1..11: (a,b) in {(0,3),(0,7)} mod 8 gives 2 | i(K) (nu_2 = 2 for
 * (0,3)); (a,b) == (0,+-1) mod 9 gives 3 | i(K).  2-adic hit preferred. */
std::optional<CongruenceHit> thm1_predicate(const TrinomialField& K);

/* m in {3,4,8,9} with (a,b) in {(2,1),(6,5)} mod 8, or m in {3,6,9} with
 * (a,b) == (4,7) mod 8: returns the common index divisor 2 */
std::optional<long> thm2_predicate(const TrinomialField& K);

/* x^n + a x^(2k) + b at an odd prime p with p not dividing 2k(n-2k),
 * (p-1) | (n-2k), nu_p(b) even and positive, a == -1 and b/p^nu == 1 mod p:
 * p is a common index divisor */
bool thm3_predicate(int n, int k, const BigInt& a, const BigInt& b, long p);

/* m = 1: is Z[alpha] the maximal order?  Unknown only when a squarefreeness
 * test exhausts its factoring budget. */
Trivalent mong_predicate(const BigInt& a, const BigInt& b);

/* m = 1: no prime >= 5 divides i(K) */
bool pge5_nondivisor(const BigInt& a, const BigInt& b, long p);

/* complete m = 1 classifications of 2 | i(K) and 3 | i(K) by congruence
 * classes, with the exact multiplicity where the criterion states it */
struct ClassifyResult {
  Trivalent divides = Trivalent::No;
  std::optional<long long> nu;
  int condition = 0;  // 1-based index of the matched class, 0 if none
};
ClassifyResult thmp2_classify(const BigInt& a, const BigInt& b);
ClassifyResult thmp3_classify(const BigInt& a, const BigInt& b);

/* bounded deterministic squarefreeness (trial division, perfect-power check,
 * Pollard rho with a fixed budget); Unknown when the budget runs out */
Trivalent squarefree_check(const BigInt& n);

/* ---- the full pipeline ---- */

enum class Monogenity { NotMonogenic, MonogenicViaAlpha, Unknown };
std::string monogenity_str(Monogenity m);

struct PrimeReport {
  BigInt p;
  long long nu_disc = 0;
  std::optional<long long> nu_index;  // exact nu_p((Z_K : Z[alpha])) if known
  long long nu_index_lower = 0;       // proven lower bound (lattice count)
  bool index_divisible = false;       // p | (Z_K : Z[alpha])
  SplittingShape shape;               // conclusive flag mirrors verdict basis
  IndexVerdict verdict;
  std::string method;
};

struct AnalysisReport {
  TrinomialField field;
  BigInt disc;
  std::vector<PrimeReport> primes;  // ascending p
  Monogenity monogenity = Monogenity::Unknown;
  std::string monogenity_reason;
  bool complete = true;  // false if some prime with p^2 | disc was not settled
};

struct AnalyzeOptions {
  /* false: examine only the primes that can divide i(K) (p < n), skip
   * discriminant factoring; used by bulk scans */
  bool examine_disc_primes = true;
};

/* throws std::domain_error when the trinomial is reducible,
 * std::logic_error when a congruence criterion contradicts the engine */
AnalysisReport analyze(const TrinomialField& K, const AnalyzeOptions& opt = {});

/* single-prime pipeline: unramified shortcut, first-order polygons, shifted
 * regeneration, second-order analysis, possibility closure */
PrimeReport analyze_prime(const TrinomialField& K, long p);

}  // namespace oreforge
