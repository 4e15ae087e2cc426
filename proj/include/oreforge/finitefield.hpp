#pragma once
/* Arithmetic and factorization over F_p and F_q = F_p[t]/(h), p a small prime.
 * Coefficients live in [0, p); p is carried by every polynomial.  Factorization
 * is squarefree decomposition + distinct-degree + equal-degree splitting; the
 * randomized splitting draws from a stream seeded by ORE_FORGE_SEED and the
 * input itself, so results are reproducible and independent of call order. */

#include <cstdint>
#include <string>
#include <vector>

#include "oreforge/arith.hpp"

namespace oreforge {

uint64_t global_seed();  // ORE_FORGE_SEED env override, constant default

class FpPoly {
 public:
  FpPoly() : p_(0) {}
  explicit FpPoly(long p) : p_(p) { check_p(); }
  FpPoly(long p, std::vector<long> coeffs);
  static FpPoly from_int_poly(const IntPoly& f, long p);
  static FpPoly xpoly(long p) { return FpPoly(p, {0, 1}); }
  static FpPoly constant(long p, long c) { return FpPoly(p, {c}); }
  static FpPoly monomial(long p, long c, int k);

  long p() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  long coeff(int i) const { return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[i]; }
  long leading() const;
  const std::vector<long>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  /* canonical order: degree, then coefficients from the top */
  bool operator<(const FpPoly& o) const;

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(long k) const;
  FpPoly monic() const;  // divide by leading coeff
  FpPoly derivative() const;
  long eval(long x) const;
  IntPoly lift() const;  // coefficients as integers in [0,p)

  std::string str(const std::string& var = "x") const;

 private:
  long p_;
  std::vector<long> c_;
  void normalize();
  void check_p() const;
  friend std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly&, const FpPoly&);
};

std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(FpPoly a, FpPoly b);  // monic
FpPoly fp_powmod(const FpPoly& base, const BigInt& e, const FpPoly& mod);

struct FpFactor {
  FpPoly f;  // monic irreducible
  int mult;
};

/* monic irreducible factors with multiplicity, canonically sorted;
 * the unit (leading coefficient of the input) is dropped */
std::vector<FpFactor> fp_factor(const FpPoly& f);
std::vector<FpFactor> factor_mod_p(const IntPoly& F, long p);
bool fp_is_irreducible(const FpPoly& f);
bool fp_is_squarefree(const FpPoly& f);

/* number of monic irreducible polynomials of degree f over F_p
 * (necklace count: (1/f) sum_{d | f} mu(d) p^{f/d}) */
BigInt count_monic_irreducibles(long p, int f);

/* ---- F_q = F_p[t]/(h), h monic irreducible ---- */

class FqCtx {
 public:
  using Elem = FpPoly;  // reduced mod h

  explicit FqCtx(FpPoly modulus);
  long p() const { return mod_.p(); }
  int f() const { return mod_.degree(); }
  const FpPoly& modulus() const { return mod_; }
  BigInt q() const;  // p^f

  Elem zero() const { return FpPoly(p()); }
  Elem one() const { return FpPoly(p(), {1}); }
  Elem gen() const;                 // class of t
  Elem gen_pow(long k) const;       // t^k mod h, k may be negative
  Elem from_int(long c) const { return FpPoly(p(), {c}); }
  Elem reduce(const FpPoly& a) const { return fp_mod(a, mod_); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return zero() - a; }
  Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, const BigInt& e) const;
  bool is_zero(const Elem& a) const { return a.is_zero(); }

  std::string elem_str(const Elem& a, const std::string& var = "u") const;

 private:
  FpPoly mod_;
};

class FqPoly {
 public:
  FqPoly() = default;
  explicit FqPoly(std::vector<FqCtx::Elem> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const FqCtx::Elem& coeff(int i) const;
  const FqCtx::Elem& leading() const;
  const std::vector<FqCtx::Elem>& coeffs() const { return c_; }
  bool operator==(const FqPoly& o) const { return c_ == o.c_; }
  bool is_monic() const;

  std::string str(const FqCtx& F, const std::string& var = "y",
                  const std::string& gen = "u") const;

 private:
  std::vector<FqCtx::Elem> c_;
  void normalize();
};

FqPoly fq_add(const FqCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly fq_sub(const FqCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly fq_mul(const FqCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly fq_scale(const FqCtx& F, const FqCtx::Elem& k, const FqPoly& a);
std::pair<FqPoly, FqPoly> fq_divrem(const FqCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly fq_mod(const FqCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly fq_gcd(const FqCtx& F, FqPoly a, FqPoly b);  // monic
FqPoly fq_powmod(const FqCtx& F, const FqPoly& base, const BigInt& e, const FqPoly& mod);
FqPoly fq_monic(const FqCtx& F, const FqPoly& a);
FqPoly fq_derivative(const FqCtx& F, const FqPoly& a);
bool fq_less(const FqPoly& a, const FqPoly& b);  // canonical order

struct FqFactor {
  FqPoly f;  // monic irreducible
  int mult;
};

std::vector<FqFactor> fq_factor(const FqCtx& F, const FqPoly& g);
bool fq_is_squarefree(const FqCtx& F, const FqPoly& g);
bool fq_is_irreducible(const FqCtx& F, const FqPoly& g);

}  // namespace oreforge
