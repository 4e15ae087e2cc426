#pragma once
/* Exact integer arithmetic layer: big integers, naturals extended by +infinity,
 * dense integer polynomials, certified p-adic valuations, resultants. */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oreforge {

using BigInt = mpz_class;

BigInt pow_bigint(const BigInt& base, unsigned long e);

/* Natural number extended with +infinity (valuation codomain).
 * infinity absorbs addition and dominates every finite value. */
class ExtNat {
 public:
  ExtNat() : v_(0), inf_(false) {}
  static ExtNat finite(long long v);
  static ExtNat infinity() { ExtNat e; e.inf_ = true; return e; }

  bool is_infinity() const { return inf_; }
  long long value() const;  // throws on infinity

  ExtNat operator+(const ExtNat& o) const;
  ExtNat operator*(long long k) const;
  friend ExtNat min(const ExtNat& a, const ExtNat& b) { return a <= b ? a : b; }

  bool operator==(const ExtNat& o) const { return inf_ == o.inf_ && (inf_ || v_ == o.v_); }
  std::strong_ordering operator<=>(const ExtNat& o) const;

  std::string str() const;

 private:
  long long v_;
  bool inf_;
};

/* Dense univariate polynomial over Z, coefficients lowest-degree first,
 * no trailing zeros (zero polynomial = empty coefficient vector).
 * Value semantics; all operations exact. */
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(BigInt c);
  static IntPoly x();
  static IntPoly monomial(BigInt c, int k);
  /* x^n + a x^m + b */
  static IntPoly trinomial(int n, int m, const BigInt& a, const BigInt& b);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // zero -> -1
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  const BigInt& coeff(int i) const;  // 0 outside support
  const BigInt& leading() const;     // throws on zero
  const std::vector<BigInt>& coeffs() const { return c_; }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const BigInt& k) const;

  IntPoly derivative() const;
  BigInt eval(const BigInt& x) const;
  /* coefficients of F(x+s) — exact Taylor rebase */
  IntPoly shift_arg(const BigInt& s) const;
  /* quotient+remainder by a monic divisor (exact in Z) */
  std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& divisor) const;
  /* division by an integer that must divide every coefficient */
  IntPoly exact_div(const BigInt& k) const;
  BigInt content() const;  // gcd of coefficients, 0 for zero poly

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<BigInt> c_;
  void normalize();
};

/* p-adic valuation bound to a certified prime.  Construction proves primality
 * (deterministic Miller-Rabin, valid below 3.317e24) and throws otherwise. */
class Valuation {
 public:
  explicit Valuation(BigInt p);
  const BigInt& prime() const { return p_; }

  ExtNat operator()(const BigInt& n) const;       // v_p(n), v_p(0) = +inf
  ExtNat gauss(const IntPoly& f) const;           // min over coefficients
  /* largest k with p^k | n, n != 0, plus cofactor n/p^k */
  std::pair<long long, BigInt> split(const BigInt& n) const;

 private:
  BigInt p_;
};

/* deterministic primality for |n| < 3.317e24; throws std::domain_error above */
bool is_certified_prime(const BigInt& n);

/* same test, but nullopt instead of throwing beyond the certified range */
std::optional<bool> try_certified_prime(const BigInt& n);

/* g(h): polynomial composition, exact over Z */
IntPoly compose(const IntPoly& g, const IntPoly& h);

BigInt resultant(const IntPoly& A, const IntPoly& B);
BigInt discriminant(const IntPoly& F);
/* disc(x^12 + a x + b) = 2^24 3^12 b^11 - 11^11 a^12 */
BigInt trinomial_disc_deg12_m1(const BigInt& a, const BigInt& b);

}  // namespace oreforge
