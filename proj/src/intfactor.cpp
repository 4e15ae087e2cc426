#include "oreforge/intfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oreforge/finitefield.hpp"

namespace oreforge {
namespace {

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  IntPoly g = f.exact_div(f.content());
  if (g.leading() < 0) g = -g;
  return g;
}

/* lead(B)^t * A mod B for some t >= 0; enough for a gcd chain with content
 * stripping after every step. */
IntPoly pseudo_rem(IntPoly A, const IntPoly& B) {
  const BigInt& lb = B.leading();
  int db = B.degree();
  while (!A.is_zero() && A.degree() >= db) {
    IntPoly cancel = B * IntPoly::monomial(A.leading(), A.degree() - db);
    A = A * lb - cancel;
  }
  return A;
}

/* gcd over the rationals, returned primitive with positive leading
 * coefficient.  For monic f this is a monic integer factor of f. */
IntPoly z_gcd(IntPoly A, IntPoly B) {
  A = primitive_part(A);
  B = primitive_part(B);
  if (A.is_zero()) return B;
  if (B.is_zero()) return A;
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    IntPoly R = primitive_part(pseudo_rem(A, B));
    A = std::move(B);
    B = std::move(R);
  }
  return A;
}

IntPoly reduce_mod(const IntPoly& f, const BigInt& M) {
  std::vector<BigInt> c = f.coeffs();
  for (BigInt& x : c) {
    x %= M;
    if (x < 0) x += M;
  }
  return IntPoly(std::move(c));
}

IntPoly symmetric_mod(const IntPoly& f, const BigInt& M) {
  std::vector<BigInt> c = f.coeffs();
  BigInt half = M / 2;
  for (BigInt& x : c) {
    x %= M;
    if (x < 0) x += M;
    if (x > half) x -= M;
  }
  return IntPoly(std::move(c));
}

struct Bezout {
  FpPoly s, t;  // s*a + t*b == 1
};

Bezout fp_bezout(const FpPoly& a, const FpPoly& b) {
  long p = a.p();
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = FpPoly::constant(p, 1), s1(p);
  FpPoly t0(p), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r2] = fp_divrem(r0, r1);
    FpPoly s2 = s0 - q * s1;
    FpPoly t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.degree() != 0)
    throw std::logic_error("fp_bezout: inputs not coprime");
  // scale so that s*a + t*b == 1 exactly
  long c = r0.coeff(0);
  long inv = 1;
  for (long k = 1; k < p; ++k)
    if ((k * c) % p == 1) { inv = k; break; }
  return {s0.scaled(inv), t0.scaled(inv)};
}

/* Lift the coprime monic split T == g0*h0 (mod p) to G*H == T (mod p^K),
 * G == g0, H == h0 (mod p), G and H monic.  Linear steps with the Bezout
 * pair fixed mod p. */
std::pair<IntPoly, IntPoly> pair_lift(const IntPoly& T, const FpPoly& g0,
                                      const FpPoly& h0, long p, int K) {
  Bezout bz = fp_bezout(g0, h0);
  IntPoly G = g0.lift();
  IntPoly H = h0.lift();
  BigInt Mk(p);
  for (int k = 1; k < K; ++k) {
    BigInt Mnext = Mk * p;
    IntPoly delta = reduce_mod(T - G * H, Mnext);
    if (!delta.is_zero()) {
      IntPoly cpoly = delta.exact_div(Mk);
      FpPoly c = FpPoly::from_int_poly(cpoly, p);
      // solve u*h0 + w*g0 = c with deg u < deg g0, deg w < deg h0
      auto [q, u] = fp_divrem(c * bz.t, g0);
      FpPoly w = c * bz.s + q * h0;
      G = reduce_mod(G + u.lift() * Mk, Mnext);
      H = reduce_mod(H + w.lift() * Mk, Mnext);
    }
    Mk = std::move(Mnext);
  }
  return {std::move(G), std::move(H)};
}

/* Lift every factor in fac[lo..hi) to a monic integer polynomial mod p^K
 * whose product is T mod p^K. */
void lift_tree(const IntPoly& T, const std::vector<FpPoly>& fac, size_t lo,
               size_t hi, long p, const BigInt& MK, int K,
               std::vector<IntPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(reduce_mod(T, MK));
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  FpPoly g0 = FpPoly::constant(p, 1);
  for (size_t i = lo; i < mid; ++i) g0 = g0 * fac[i];
  FpPoly h0 = FpPoly::constant(p, 1);
  for (size_t i = mid; i < hi; ++i) h0 = h0 * fac[i];
  auto [G, H] = pair_lift(T, g0, h0, p, K);
  lift_tree(G, fac, lo, mid, p, MK, K, out);
  lift_tree(H, fac, mid, hi, p, MK, K, out);
}

bool small_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::optional<IntPoly> find_monic_factor(const IntPoly& F) {
  if (F.is_zero() || F.leading() != 1 || F.degree() < 1)
    throw std::invalid_argument("find_monic_factor: monic polynomial of degree >= 1 required");
  int n = F.degree();
  if (n == 1) return std::nullopt;
  if (F.coeff(0) == 0) return IntPoly::x();

  BigInt disc = discriminant(F);
  if (disc == 0) return z_gcd(F, F.derivative());

  /* Degree sieve over primes of squarefree reduction.  disc != 0 means only
   * finitely many primes are excluded, so the walk below terminates. */
  struct ModFactorization {
    long p;
    std::vector<FpPoly> factors;
  };
  std::vector<ModFactorization> good;
  const uint64_t proper_mask = ((uint64_t{1} << n) - 2);  // bits 1..n-1
  uint64_t intersect = ~uint64_t{0};
  for (long p = 3; good.size() < 6; p += 2) {
    if (!small_prime(p)) continue;
    FpPoly fp = FpPoly::from_int_poly(F, p);
    if (!fp_is_squarefree(fp)) continue;
    auto fac = fp_factor(fp);
    if (fac.size() == 1) return std::nullopt;  // irreducible mod p
    uint64_t reach = 1;
    for (const FpFactor& ff : fac) reach |= reach << ff.f.degree();
    intersect &= reach;
    if ((intersect & proper_mask) == 0) return std::nullopt;
    std::vector<FpPoly> fs;
    fs.reserve(fac.size());
    for (const FpFactor& ff : fac) fs.push_back(ff.f);
    good.push_back({p, std::move(fs)});
  }

  /* Hensel lift at the reduction with the fewest factors, past twice a
   * coefficient bound for monic factors, then exact subset recombination. */
  const ModFactorization* best = &good.front();
  for (const auto& g : good)
    if (g.factors.size() < best->factors.size()) best = &g;

  BigInt H = 0;
  for (const BigInt& c : F.coeffs()) {
    BigInt a = abs(c);
    if (a > H) H = a;
  }
  BigInt bound = pow_bigint(2, static_cast<unsigned long>(n)) * (n + 1) * (H + 1);
  BigInt target = 2 * bound + 1;
  int K = 1;
  BigInt MK(best->p);
  while (MK < target) {
    MK *= best->p;
    ++K;
  }

  std::vector<IntPoly> lifted;
  lift_tree(reduce_mod(F, MK), best->factors, 0, best->factors.size(),
            best->p, MK, K, lifted);

  const int r = static_cast<int>(lifted.size());
  const BigInt& F0 = F.coeff(0);
  for (int mask = 1; mask < (1 << r) - 1; ++mask) {
    int d = 0;
    for (int i = 0; i < r; ++i)
      if (mask & (1 << i)) d += lifted[i].degree();
    if (2 * d > n || d == 0) continue;
    IntPoly G = IntPoly::constant(1);
    for (int i = 0; i < r; ++i)
      if (mask & (1 << i)) G = reduce_mod(G * lifted[i], MK);
    G = symmetric_mod(G, MK);
    const BigInt& c0 = G.coeff(0);
    if (c0 == 0 || F0 % c0 != 0) continue;
    auto [q, rem] = F.divrem_monic(G);
    if (rem.is_zero()) return G;
  }
  return std::nullopt;
}

bool is_irreducible_z(const IntPoly& F) {
  if (F.is_zero() || F.degree() < 1) return false;
  return !find_monic_factor(F).has_value();
}

}  // namespace oreforge
