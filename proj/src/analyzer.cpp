#include "oreforge/analyzer.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "oreforge/finitefield.hpp"
#include "oreforge/intfactor.hpp"
#include "oreforge/order2.hpp"

namespace oreforge {
namespace {

long mod_long(const BigInt& x, unsigned long M) {
  return static_cast<long>(mpz_fdiv_ui(x.get_mpz_t(), M));
}

bool pair_mod(const BigInt& a, const BigInt& b, unsigned long M,
              std::initializer_list<std::pair<long, long>> classes) {
  long ra = mod_long(a, M), rb = mod_long(b, M);
  for (const auto& [ca, cb] : classes)
    if (ra == ca && rb == cb) return true;
  return false;
}

const std::vector<long>& small_primes_to(long limit) {
  static std::vector<long> primes = [] {
    const long N = 100000;
    std::vector<bool> comp(N + 1, false);
    std::vector<long> ps;
    for (long i = 2; i <= N; ++i) {
      if (!comp[i]) {
        ps.push_back(i);
        for (long j = 2 * i; j <= N; j += i) comp[j] = true;
      }
    }
    return ps;
  }();
  (void)limit;
  return primes;
}

/* deterministic Brent rho; budget counts modular multiplications */
bool rho_split(const BigInt& n, BigInt& out, long long& budget) {
  for (long c = 1; c <= 24 && budget > 0; ++c) {
    BigInt y = 2, g = 1, q = 1, x, ys;
    long long r = 1;
    while (g == 1 && budget > 0) {
      x = y;
      for (long long i = 0; i < r && budget > 0; ++i) {
        y = (y * y + c) % n;
        --budget;
      }
      long long k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        long long lim = std::min<long long>(128, r - k);
        for (long long i = 0; i < lim && budget > 0; ++i) {
          y = (y * y + c) % n;
          BigInt d = x - y;
          if (d < 0) d = -d;
          q = (q * d) % n;
          budget -= 2;
        }
        g = gcd(q, n);
        k += lim;
      }
      r *= 2;
    }
    if (g == n) {
      /* backtrack one step at a time */
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        BigInt d = x - ys;
        if (d < 0) d = -d;
        g = gcd(d, n);
      }
    }
    if (g > 1 && g < n) {
      out = g;
      return true;
    }
  }
  return false;
}

Trivalent squarefree_rec(const BigInt& n, long long& budget) {
  if (n == 1) return Trivalent::Yes;
  if (try_certified_prime(n) == std::optional<bool>(true)) return Trivalent::Yes;
  if (mpz_perfect_power_p(n.get_mpz_t())) return Trivalent::No;
  BigInt d;
  if (!rho_split(n, d, budget)) return Trivalent::Unknown;
  BigInt e = n / d;
  if (gcd(d, e) > 1) return Trivalent::No;
  Trivalent left = squarefree_rec(d, budget);
  if (left == Trivalent::No) return Trivalent::No;
  Trivalent right = squarefree_rec(e, budget);
  if (right == Trivalent::No) return Trivalent::No;
  if (left == Trivalent::Unknown || right == Trivalent::Unknown)
    return Trivalent::Unknown;
  return Trivalent::Yes;
}

/* factor |n| by trial division over the sieved primes; the unfactored
 * cofactor (coprime to all of them) is returned in cof */
std::map<long, long long> trial_factor(const BigInt& n, BigInt& cof) {
  std::map<long, long long> out;
  cof = abs(n);
  if (cof <= 1) return out;
  for (long p : small_primes_to(100000)) {
    if (!mpz_divisible_ui_p(cof.get_mpz_t(), static_cast<unsigned long>(p)))
      continue;
    BigInt rem;
    long long e = static_cast<long long>(mpz_remove(
        rem.get_mpz_t(), cof.get_mpz_t(), BigInt(p).get_mpz_t()));
    out[p] = e;
    cof = rem;
    if (cof == 1) break;
  }
  return out;
}

/* valuation of x at p together with the unit digit (x / p^v) mod p; x != 0 */
std::pair<long long, long> val_unit(const BigInt& x, long p) {
  BigInt rem;
  long long v = static_cast<long long>(mpz_remove(
      rem.get_mpz_t(), x.get_mpz_t(), BigInt(p).get_mpz_t()));
  return {v, mod_long(rem, static_cast<unsigned long>(p))};
}

/* Splitting of the triple linear factor x - sigma (sigma = +-1) of
 * x^12 + a x + b modulo 3.
 *
 * Around any integer s == sigma (mod 3) the Taylor coefficients of
 * F(x) = x^12 + a x + b satisfy nu_3(F''(s)/2) = nu_3(66 s^10) = 1 and
 * nu_3(F'''(s)/6) = nu_3(220 s^9) = 0, so the factor's Newton polygon is
 * the lower hull of (0, A), (1, B), (2, 1), (3, 0) with A = nu_3(F(s)) and
 * B = nu_3(F'(s)).  The hull and its residual polynomials either decide
 * the factor's splitting outright or exhibit a repeated residual root, in
 * which case s is moved towards that root and the hull re-read at the new
 * s.  Each move strictly deepens the contact with the chased roots, so the
 * 3-valuation of the discriminant bounds the number of iterations.
 *
 * Returns true exactly when the factor splits into three primes of
 * residue degree 1. */
bool cubic_branch_splits_3(const BigInt& a, const BigInt& b, int sigma) {
  BigInt disc = trinomial_disc_deg12_m1(a, b);
  if (disc == 0) throw std::invalid_argument("cubic_branch_splits_3: repeated roots");
  long long cap = val_unit(disc, 3).first + 16;
  BigInt s(sigma);
  for (long long iter = 0; iter <= cap; ++iter) {
    BigInt s11 = pow_bigint(s, 11);
    BigInt fs = b + a * s + s11 * s;
    BigInt ds = a + 12 * s11;
    if (fs == 0)
      throw std::invalid_argument("cubic_branch_splits_3: rational root");
    auto [A, w] = val_unit(fs, 3);
    if (A <= 2) return false;  // a slope of -2/3 or -1/3: ramification only
    bool dinf = (ds == 0);
    long long B = 0;
    long r = 0;
    if (!dinf) std::tie(B, r) = val_unit(ds, 3);
    if (!dinf && B == 1) return false;  // {(1,1),(2,1)}: only one new root
    long sig3 = sigma == 1 ? 1 : 2;
    if (A == 3) {
      /* single side of slope -1 carrying a cubic residual */
      if (dinf || B >= 3) return false;  // sigma y^3 + y^2 + w is squarefree
      /* residual sigma y^3 + y^2 + r y + w; its derivative 2y + r has the
       * lone root y = r, so a repeated root exists iff the value there
       * vanishes -- and three distinct roots are impossible (root sum -1/sigma
       * is nonzero), so a squarefree residual never splits completely */
      if ((sigma * r * r * r + 2 * r * r + w) % 3 == 0) {
        s += BigInt(3 * (r == 1 ? 1 : -1));
        continue;
      }
      return false;
    }
    /* A >= 4 */
    if (!dinf && B == 2) {
      /* vertex at (1,2); side (1,2)-(3,0) of slope -1 carries the residual
       * sigma y^2 + y + r: repeated root at y = sigma iff r == sigma,
       * irreducible otherwise */
      if (r == sig3) {
        s += BigInt(3 * sigma);
        continue;
      }
      return false;  // {(1,1),(1,2)}
    }
    /* B >= 3 or F'(s) = 0 */
    if (!dinf && A > 2 * B - 1) return true;  // three unit-length sides
    if (!dinf && A == 2 * B - 1) {
      /* side (0,A)-(2,1) of slope -(B-1) through (1,B): residual
       * y^2 + r y + w; repeated root at y = r iff w == 1 */
      if (w == 1) {
        BigInt step = pow_bigint(BigInt(3), static_cast<unsigned long>(B - 1));
        s += (r == 1 ? step : -step);
        continue;
      }
      return false;  // y^2 + r y - 1 is irreducible over F_3
    }
    /* A < 2B - 1: side (0,A)-(2,1) with (1,B) strictly above; residual
     * y^2 + w when the slope -(A-1)/2 is integral, one ramified prime
     * otherwise; y^2 + w splits iff -w is a nonzero square, i.e. w == -1 */
    return (A % 2) == 1 && w == 2;
  }
  throw std::logic_error("cubic_branch_splits_3: refinement did not terminate");
}

/* Splitting of the quadruple factor x + 1 of x^12 + a x + b modulo 2 when
 * a is even and b is odd.  Around odd s the coefficients give
 * nu_2(66 s^10) = 1, nu_2(220 s^9) = 2, nu_2(495 s^8) = 0, so the factor's
 * Newton polygon is the lower hull of (0, A), (1, B), (2, 1), (3, 2), (4, 0);
 * the tail side (2,1)-(4,0) of slope -1/2 always contributes one ramified
 * prime of residue degree 1.  Same refinement scheme as at 3; the residual
 * on an integral-slope side of length 2 is y^2 + 1 = (y + 1)^2 when (1, B)
 * lies strictly above it (always a repeated root, move s) and the
 * irreducible y^2 + y + 1 when (1, B) lies on it.
 *
 * Returns true exactly when the factor splits as {(1,1),(1,1),(2,1)},
 * i.e. contributes three primes of residue degree 1. */
bool quartic_branch_splits_2(const BigInt& a, const BigInt& b) {
  BigInt disc = trinomial_disc_deg12_m1(a, b);
  if (disc == 0) throw std::invalid_argument("quartic_branch_splits_2: repeated roots");
  long long cap = val_unit(disc, 2).first + 16;
  BigInt s(1);
  for (long long iter = 0; iter <= cap; ++iter) {
    BigInt s11 = pow_bigint(s, 11);
    BigInt fs = b + a * s + s11 * s;
    BigInt ds = a + 12 * s11;
    if (fs == 0)
      throw std::invalid_argument("quartic_branch_splits_2: rational root");
    long long A = val_unit(fs, 2).first;
    if (A <= 2) return false;  // {(4,1)} or {(2,2)} or {(1,1),(3,1)}
    bool dinf = (ds == 0);
    long long B = dinf ? 0 : val_unit(ds, 2).first;
    if (!dinf && B == 1) return false;  // {(1,1),(3,1)}
    if (!dinf && A > 2 * B - 1) return true;  // {(1,1),(1,1),(2,1)}
    if (!dinf && A == 2 * B - 1) return false;  // y^2 + y + 1: {(1,2),(2,1)}
    /* A < 2B - 1 or F'(s) = 0 */
    if (A % 2 == 0) return false;  // {(2,1),(2,1)}
    s += pow_bigint(BigInt(2), static_cast<unsigned long>((A - 1) / 2));
  }
  throw std::logic_error("quartic_branch_splits_2: refinement did not terminate");
}

/* ---- possibility closure over unresolved branch constraints ---- */

void completions_rec(long long rem, long emul, long fmul, Branch minb,
                     Shape& cur, std::vector<Shape>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  for (long e = emul; e <= rem; e += emul) {
    for (long f = fmul; static_cast<long long>(e) * f <= rem; f += fmul) {
      Branch br{e, f};
      if (br < minb) continue;
      cur.push_back(br);
      completions_rec(rem - static_cast<long long>(e) * f, emul, fmul, br, cur, out);
      cur.pop_back();
    }
  }
}

std::vector<Shape> constraint_completions(const Order2Constraint& c) {
  std::vector<Shape> out;
  Shape cur;
  completions_rec(c.degree, c.e_multiple, c.f_multiple, Branch{1, 1}, cur, out);
  return out;
}

/* all residue degrees f with more primes than monic irreducibles over F_p */
std::vector<long> engstrom_witnesses(const BigInt& p, const Shape& shape) {
  std::vector<long> out;
  long total = 0;
  std::map<long, long> Pf;
  for (const Branch& b : shape) {
    Pf[b.f]++;
    total += b.e * b.f;
  }
  if (p > total) return out;  // N_f >= p > total >= P_f for every f
  long pl = static_cast<long>(p.get_si());
  for (const auto& [f, cnt] : Pf)
    if (BigInt(cnt) > count_monic_irreducibles(pl, static_cast<int>(f)))
      out.push_back(f);
  return out;
}

struct ClosureVerdict {
  Trivalent divides;
  std::optional<long long> nu;
  std::optional<long> witness_f;
};

ClosureVerdict closure_verdict(const BigInt& p, const Shape& base,
                               const std::vector<Order2Constraint>& cons) {
  std::vector<Shape> shapes = {base};
  for (const Order2Constraint& c : cons) {
    std::vector<Shape> grown;
    for (const Shape& comp : constraint_completions(c))
      for (const Shape& s : shapes) {
        Shape u = s;
        u.insert(u.end(), comp.begin(), comp.end());
        std::sort(u.begin(), u.end());
        grown.push_back(std::move(u));
      }
    shapes = std::move(grown);
  }
  if (shapes.empty()) throw std::logic_error("closure: no completions");
  bool all_yes = true, all_no = true;
  std::optional<long> common_f;
  std::optional<long long> common_nu;
  bool first = true, nu_ok = true;
  for (const Shape& s : shapes) {
    auto wits = engstrom_witnesses(p, s);
    if (wits.empty()) {
      all_yes = false;
    } else {
      all_no = false;
      auto nu = nu_iK_table(p, s);
      if (first) {
        common_f = wits.front();
        common_nu = nu;
        first = false;
      } else {
        if (common_f && std::find(wits.begin(), wits.end(), *common_f) == wits.end())
          common_f.reset();
        if (!nu || !common_nu || *nu != *common_nu) nu_ok = false;
      }
    }
  }
  if (all_yes)
    return {Trivalent::Yes, nu_ok ? common_nu : std::nullopt, common_f};
  if (all_no) return {Trivalent::No, std::nullopt, std::nullopt};
  return {Trivalent::Unknown, std::nullopt, std::nullopt};
}

FpPoly fq_constant_coeffs_to_fp(const FqPoly& psi, long p) {
  std::vector<long> c;
  c.reserve(psi.degree() + 1);
  for (int i = 0; i <= psi.degree(); ++i) c.push_back(psi.coeff(i).coeff(0));
  return FpPoly(p, std::move(c));
}

PrimeReport analyze_prime_impl(const IntPoly& F, long p, long long nu_disc) {
  PrimeReport rep;
  rep.p = p;
  rep.nu_disc = nu_disc;
  Valuation vp{BigInt(p)};

  if (nu_disc == 0) {
    Shape sh;
    for (const auto& [g, mult] : factor_mod_p(F, p)) {
      if (mult != 1) throw std::logic_error("unramified prime with repeated factor");
      sh.push_back({1, g.degree()});
    }
    std::sort(sh.begin(), sh.end());
    rep.shape = SplittingShape{BigInt(p), sh, true, "unramified"};
    rep.nu_index = 0;
    rep.nu_index_lower = 0;
    rep.index_divisible = false;
    rep.method = "unramified";
    rep.verdict = engstrom_divides(BigInt(p), sh);
    return rep;
  }

  OreAnalysis oa = ore_analyze(F, vp);
  rep.nu_index_lower = oa.index_lower_bound;
  rep.index_divisible = oa.index_lower_bound >= 1;

  if (oa.p_regular) {
    rep.shape = ore_split(oa);
    rep.nu_index = oa.index_lower_bound;
    rep.method = "ore";
    rep.verdict = engstrom_divides(BigInt(p), rep.shape.branches);
    return rep;
  }

  if (auto s = find_regular_shift(F, vp)) {
    /* Z[alpha - s] = Z[alpha]: the shifted generator has the same order,
     * so its regular analysis gives the exact index and the true shape */
    OreAnalysis oas = ore_analyze(F.shift_arg(*s), vp);
    rep.shape = ore_split(oas);
    rep.shape.method = "ore-shift";
    rep.nu_index = oas.index_lower_bound;
    rep.nu_index_lower = std::max(rep.nu_index_lower, oas.index_lower_bound);
    rep.index_divisible = oas.index_lower_bound >= 1;
    rep.method = "ore-shift";
    rep.verdict = engstrom_divides(BigInt(p), rep.shape.branches);
    return rep;
  }

  /* second-order stage */
  Shape base;
  std::vector<Order2Constraint> cons;
  for (const PhiAnalysis& pa : oa.phis) {
    long dphi = pa.data.phi.degree();
    for (const SideAnalysis& sa : pa.sides) {
      for (const auto& [psi, multpsi] : sa.factors) {
        if (multpsi == 1) {
          base.push_back({static_cast<long>(sa.side.er), dphi * psi.degree()});
          continue;
        }
        if (dphi == 1) {
          Order2Type t{pa.data.phi, sa.side.hr, sa.side.er,
                       fq_constant_coeffs_to_fp(psi, p), multpsi};
          Order2Outcome oc = order2_analyze(F, t, vp);
          base.insert(base.end(), oc.branches.begin(), oc.branches.end());
          cons.insert(cons.end(), oc.constraints.begin(), oc.constraints.end());
        } else {
          cons.push_back(
              {static_cast<long long>(sa.side.er) * dphi * psi.degree() * multpsi,
               static_cast<long>(sa.side.er), dphi * psi.degree()});
        }
      }
    }
  }
  std::sort(base.begin(), base.end());

  if (cons.empty()) {
    rep.shape = SplittingShape{BigInt(p), base, true, "order2"};
    rep.method = "order2";
    rep.verdict = engstrom_divides(BigInt(p), base);
    return rep;
  }

  ClosureVerdict cv = closure_verdict(BigInt(p), base, cons);
  rep.shape = SplittingShape{BigInt(p), base, false, "order2-closure"};
  rep.method = "order2-closure";
  rep.verdict = IndexVerdict{BigInt(p), cv.divides,   cv.nu, base,
                             false,     cv.witness_f, "engstrom-closure"};
  return rep;
}

void merge_congruence_verdict(PrimeReport& rep, Trivalent thm,
                              std::optional<long long> thm_nu,
                              const char* label) {
  if (thm == Trivalent::Unknown) return;
  Trivalent eng = rep.verdict.divides_iK;
  if (eng != Trivalent::Unknown && eng != thm)
    throw std::logic_error(std::string("congruence criterion ") + label +
                           " contradicts the polygon engine at p=" +
                           rep.p.get_str());
  if (eng == Trivalent::Unknown) {
    rep.verdict.divides_iK = thm;
    rep.verdict.method = "congruence";
  }
  if (thm == Trivalent::Yes && thm_nu) {
    if (rep.verdict.nu_iK && *rep.verdict.nu_iK != *thm_nu)
      throw std::logic_error(std::string("multiplicity from ") + label +
                             " contradicts the tabulated value at p=" +
                             rep.p.get_str());
    rep.verdict.nu_iK = thm_nu;
  }
}

}  // namespace

std::string trivalent_str(Trivalent t) {
  switch (t) {
    case Trivalent::No: return "no";
    case Trivalent::Yes: return "yes";
    default: return "unknown";
  }
}

std::string monogenity_str(Monogenity m) {
  switch (m) {
    case Monogenity::NotMonogenic: return "not-monogenic";
    case Monogenity::MonogenicViaAlpha: return "monogenic";
    default: return "unknown";
  }
}

TrinomialField make_field(int n, int m, const BigInt& a, const BigInt& b) {
  if (n < 2 || m < 1 || m >= n)
    throw std::invalid_argument("make_field: need 0 < m < n, n >= 2");
  if (b == 0) throw std::invalid_argument("make_field: b must be nonzero");
  TrinomialField K{n, m, a, b};
  for (long q : small_primes_to(100000)) {
    BigInt qn = pow_bigint(q, static_cast<unsigned long>(n));
    if (qn > abs(K.b)) break;
    BigInt qnm = pow_bigint(q, static_cast<unsigned long>(n - m));
    while (mpz_divisible_p(K.b.get_mpz_t(), qn.get_mpz_t()) &&
           (K.a == 0 || mpz_divisible_p(K.a.get_mpz_t(), qnm.get_mpz_t()))) {
      K.b /= qn;
      if (K.a != 0) K.a /= qnm;
    }
  }
  return K;
}

IntPoly field_poly(const TrinomialField& K) {
  return IntPoly::trinomial(K.n, K.m, K.a, K.b);
}

IndexVerdict engstrom_divides(const BigInt& p, const Shape& shape) {
  Shape s = shape;
  std::sort(s.begin(), s.end());
  IndexVerdict v{p, Trivalent::No, std::nullopt, s, true, std::nullopt, "engstrom"};
  auto wits = engstrom_witnesses(p, s);
  if (!wits.empty()) {
    v.divides_iK = Trivalent::Yes;
    v.witness_f = wits.front();
    v.nu_iK = nu_iK_table(p, s);
  }
  return v;
}

std::optional<long long> nu_iK_table(const BigInt& p, const Shape& shape) {
  Shape s = shape;
  std::sort(s.begin(), s.end());
  struct Row {
    long p;
    Shape shape;
    long long nu;
  };
  static const std::vector<Row> table = {
      {2, {{2, 2}, {2, 2}, {2, 2}}, 2},
      {2, {{2, 1}, {2, 1}, {2, 2}, {2, 2}}, 3},
      {2, {{1, 1}, {1, 1}, {2, 1}, {2, 4}}, 1},
      {2, {{1, 1}, {1, 1}, {2, 1}, {4, 2}}, 1},
      {3, {{1, 1}, {1, 1}, {1, 1}, {3, 1}, {3, 2}}, 1},
  };
  for (const Row& r : table)
    if (p == r.p && s == r.shape) return r.nu;
  return std::nullopt;
}

std::optional<CongruenceHit> thm1_predicate(const TrinomialField& K) {
  if (K.n != 12 || K.m < 1 || K.m > 11) return std::nullopt;
  if (pair_mod(K.a, K.b, 8, {{0, 3}}))
    return CongruenceHit{2, 2};
  if (pair_mod(K.a, K.b, 8, {{0, 7}}))
    return CongruenceHit{2, std::nullopt};
  if (pair_mod(K.a, K.b, 9, {{0, 1}, {0, 8}}))
    return CongruenceHit{3, std::nullopt};
  return std::nullopt;
}

std::optional<long> thm2_predicate(const TrinomialField& K) {
  if (K.n != 12) return std::nullopt;
  bool m3489 = K.m == 3 || K.m == 4 || K.m == 8 || K.m == 9;
  bool m369 = K.m == 3 || K.m == 6 || K.m == 9;
  if (m3489 && pair_mod(K.a, K.b, 8, {{2, 1}, {6, 5}})) return 2;
  if (m369 && pair_mod(K.a, K.b, 8, {{4, 7}})) return 2;
  return std::nullopt;
}

bool thm3_predicate(int n, int k, const BigInt& a, const BigInt& b, long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  int m = 2 * k;
  if (k < 1 || m >= n) return false;
  if ((static_cast<long long>(m) * (n - m)) % p == 0) return false;
  if ((n - m) % (p - 1) != 0) return false;
  if (b == 0) return false;
  Valuation vp{BigInt(p)};
  auto [nub, bp] = vp.split(b);
  if (nub < 2 || nub % 2 != 0) return false;
  if (mod_long(a + 1, static_cast<unsigned long>(p)) != 0) return false;
  if (mod_long(bp - 1, static_cast<unsigned long>(p)) != 0) return false;
  return true;
}

Trivalent squarefree_check(const BigInt& n) {
  if (n == 0) return Trivalent::No;
  BigInt cof;
  auto fac = trial_factor(n, cof);
  for (const auto& [q, e] : fac)
    if (e >= 2) return Trivalent::No;
  if (cof == 1) return Trivalent::Yes;
  /* cof has no prime factor below 10^5 */
  if (cof < BigInt("10000000000")) return Trivalent::Yes;  // must be prime
  long long budget = 3000000;
  return squarefree_rec(cof, budget);
}

Trivalent mong_predicate(const BigInt& a, const BigInt& b) {
  if (b == 0) return Trivalent::No;
  bool unknown = false;

  Trivalent sq_b = squarefree_check(b);
  if (sq_b == Trivalent::No) return Trivalent::No;
  if (sq_b == Trivalent::Unknown) unknown = true;

  if (mod_long(a, 2) == 0 && mod_long(b, 2) == 1) {
    if (!pair_mod(a, b, 4, {{0, 1}, {2, 3}})) return Trivalent::No;
  }
  if (mod_long(a, 3) == 0 && mod_long(b, 3) != 0) {
    if (!pair_mod(a, b, 9,
                  {{0, 2}, {0, 4}, {0, 5}, {0, 7},
                   {3, 8}, {3, 1}, {3, 4}, {3, 7},
                   {6, 8}, {6, 1}, {6, 4}, {6, 7}}))
      return Trivalent::No;
  }
  if (mod_long(b, 11) == 0 && mod_long(a, 11) != 0) {
    Valuation v11{BigInt(11)};
    BigInt w = b - a * a + pow_bigint(a, 12);
    if (w == 0 || v11(w).value() != 1) return Trivalent::No;
  }
  {
    BigInt D = pow_bigint(2, 24) * pow_bigint(3, 12) * pow_bigint(b, 11) -
               pow_bigint(11, 11) * pow_bigint(a, 12);
    if (D == 0) return Trivalent::No;  // singular: not even a field
    BigInt M = abs(D);
    BigInt c = 66 * (a == 0 ? BigInt(1) : a) * b;
    for (BigInt g = gcd(M, c); g > 1; g = gcd(M, c)) M /= g;
    Trivalent sq_d = squarefree_check(M);
    if (sq_d == Trivalent::No) return Trivalent::No;
    if (sq_d == Trivalent::Unknown) unknown = true;
  }
  return unknown ? Trivalent::Unknown : Trivalent::Yes;
}

bool pge5_nondivisor(const BigInt& a, const BigInt& b, long p) {
  (void)a;
  (void)b;
  return p >= 5;
}

ClassifyResult thmp2_classify(const BigInt& a, const BigInt& b) {
  if (pair_mod(a, b, 8, {{0, 3}})) return {Trivalent::Yes, 2, 1};
  if (pair_mod(a, b, 8, {{0, 7}})) return {Trivalent::Yes, std::nullopt, 1};
  if (pair_mod(a, b, 8, {{4, 3}})) {
    if (quartic_branch_splits_2(a, b)) return {Trivalent::Yes, 1, 2};
    return {Trivalent::No, std::nullopt, 0};
  }
  if (pair_mod(a, b, 256, {{64, 112}, {192, 112}, {0, 240}, {128, 240}}))
    return {Trivalent::Yes, std::nullopt, 3};
  if (pair_mod(a, b, 1024, {{256, 832}, {768, 832}}))
    return {Trivalent::Yes, std::nullopt, 4};
  if (pair_mod(a, b, 1024, {{0, 64}, {512, 64}}))
    return {Trivalent::Yes, 3, 4};
  if (pair_mod(a, b, 512, {{0, 192}, {256, 192}}))
    return {Trivalent::Yes, 2, 5};
  if (mod_long(a, 2048) == 0 && mod_long(b, 4096) == 3840)
    return {Trivalent::Yes, std::nullopt, 6};
  if (pair_mod(a, b, 512, {{0, 448}, {256, 448}}))
    return {Trivalent::Yes, 3, 7};
  if (pair_mod(a, b, 1024, {{0, 576}, {512, 576}}))
    return {Trivalent::Yes, 2, 8};
  return {Trivalent::No, std::nullopt, 0};
}

ClassifyResult thmp3_classify(const BigInt& a, const BigInt& b) {
  if (pair_mod(a, b, 9, {{0, 1}, {0, 8}}))
    return {Trivalent::Yes, std::nullopt, 1};
  int cond = 0, sigma = 0;
  if (pair_mod(a, b, 81, {{15, 65}, {42, 38}, {69, 11}})) {
    cond = 2, sigma = 1;
  } else if (pair_mod(a, b, 81,
                      {{6, 47}, {33, 20}, {60, 74}, {24, 56}, {51, 29}, {78, 2}})) {
    cond = 3, sigma = 1;
  } else if (pair_mod(a, b, 81, {{12, 11}, {39, 38}, {66, 65}})) {
    cond = 4, sigma = -1;
  } else if (pair_mod(a, b, 81,
                      {{3, 2}, {30, 29}, {57, 56}, {21, 74}, {48, 20}, {75, 47}})) {
    cond = 5, sigma = -1;
  }
  if (cond != 0 && cubic_branch_splits_3(a, b, sigma))
    return {Trivalent::Yes, 1, cond};
  /* b = 3^6 u with u = -1 (mod 9) and a = 0 (mod 3^8): the x-polygon has one
     side of slope -1/2 with residual y^6 - 1 = (y-1)^3 (y+1)^3, and both
     order-2 refinements keep a unit side plus a degree-2 side whose residual
     splits on exactly one of the two branches.  That yields four primes of
     residue degree 1 (ramification index 2 each), exceeding the three monic
     linear polynomials over F_3. */
  if (mod_long(b, 6561) == 5832 && mod_long(a, 6561) == 0)
    return {Trivalent::Yes, std::nullopt, 6};
  return {Trivalent::No, std::nullopt, 0};
}

PrimeReport analyze_prime(const TrinomialField& K, long p) {
  IntPoly F = field_poly(K);
  BigInt disc = discriminant(F);
  if (disc == 0) throw std::domain_error("analyze_prime: repeated roots");
  Valuation vp{BigInt(p)};
  return analyze_prime_impl(F, p, vp(disc).value());
}

AnalysisReport analyze(const TrinomialField& K, const AnalyzeOptions& opt) {
  IntPoly F = field_poly(K);
  if (!is_irreducible_z(F))
    throw std::domain_error("analyze: the trinomial is reducible");

  AnalysisReport R;
  R.field = K;
  R.disc = discriminant(F);

  std::set<long> prime_set = {2, 3, 5, 7, 11, 13};
  if (!opt.examine_disc_primes) prime_set = {2, 3, 5, 7, 11};
  if (opt.examine_disc_primes) {
    BigInt cof;
    auto fac = trial_factor(R.disc, cof);
    for (const auto& [q, e] : fac)
      if (e >= 2) prime_set.insert(q);
    if (cof > 1) {
      /* cofactor coprime to every prime below 10^5 */
      if (try_certified_prime(cof) == std::optional<bool>(true)) {
        /* exponent 1: cannot divide the index */
      } else if (mpz_perfect_square_p(cof.get_mpz_t())) {
        BigInt r = sqrt(cof);
        if (r < BigInt(1) << 20 && is_certified_prime(r)) {
          prime_set.insert(static_cast<long>(r.get_si()));
        } else {
          R.complete = false;
        }
      } else {
        long long budget = 1000000;
        Trivalent sq = squarefree_rec(cof, budget);
        if (sq != Trivalent::Yes) R.complete = false;
        /* squarefree cofactor contributes no prime with p^2 | disc */
      }
    }
  }

  for (long p : prime_set) {
    Valuation vp{BigInt(p)};
    long long nd = vp(R.disc).value();
    R.primes.push_back(analyze_prime_impl(F, p, nd));
  }

  /* ---- congruence criteria as hard cross-checks ---- */
  auto rep_at = [&](long p) -> PrimeReport* {
    for (PrimeReport& r : R.primes)
      if (r.p == p) return &r;
    return nullptr;
  };

  if (auto h1 = thm1_predicate(K)) {
    merge_congruence_verdict(*rep_at(h1->p), Trivalent::Yes, h1->nu,
                             "all-m congruence family");
  }
  /* the p = 3 half may fire together with the p = 2 half */
  if (K.n == 12 && pair_mod(K.a, K.b, 9, {{0, 1}, {0, 8}}))
    merge_congruence_verdict(*rep_at(3), Trivalent::Yes, std::nullopt,
                             "all-m congruence family");
  if (auto h2 = thm2_predicate(K))
    merge_congruence_verdict(*rep_at(*h2), Trivalent::Yes, std::nullopt,
                             "mid-m congruence family");
  if (K.n == 12 && K.m % 2 == 0) {
    for (long p : {3L, 5L, 7L, 11L})
      if (thm3_predicate(K.n, K.m / 2, K.a, K.b, p))
        merge_congruence_verdict(*rep_at(p), Trivalent::Yes, std::nullopt,
                                 "even-exponent ramified family");
  }
  if (K.n == 12 && K.m == 1) {
    ClassifyResult c2 = thmp2_classify(K.a, K.b);
    merge_congruence_verdict(*rep_at(2), c2.divides, c2.nu, "dyadic classifier");
    ClassifyResult c3 = thmp3_classify(K.a, K.b);
    merge_congruence_verdict(*rep_at(3), c3.divides, c3.nu, "triadic classifier");
    for (const PrimeReport& r : R.primes)
      if (r.p >= 5 && r.verdict.divides_iK == Trivalent::Yes)
        throw std::logic_error("a prime >= 5 cannot be a common index divisor here");
    for (PrimeReport& r : R.primes)
      if (r.p >= 5 && r.verdict.divides_iK == Trivalent::Unknown) {
        r.verdict.divides_iK = Trivalent::No;
        r.verdict.method = "congruence";
      }
  }

  for (const PrimeReport& r : R.primes)
    if (r.verdict.divides_iK == Trivalent::Yes && !r.index_divisible)
      throw std::logic_error("common index divisor without index divisibility");

  /* ---- monogenity ---- */
  bool any_yes = false, any_unknown = false, any_index = false;
  std::string yes_list;
  for (const PrimeReport& r : R.primes) {
    if (r.verdict.divides_iK == Trivalent::Yes) {
      any_yes = true;
      if (!yes_list.empty()) yes_list += ", ";
      yes_list += r.p.get_str();
    }
    if (r.verdict.divides_iK == Trivalent::Unknown) any_unknown = true;
    if (r.index_divisible) any_index = true;
  }

  Trivalent mong = Trivalent::Unknown;
  if (K.n == 12 && K.m == 1) {
    mong = mong_predicate(K.a, K.b);
    if (mong == Trivalent::Yes && any_index && R.complete)
      throw std::logic_error("maximality criterion contradicts the polygon engine");
    if (mong == Trivalent::No && !any_index && R.complete)
      throw std::logic_error("non-maximality criterion contradicts the polygon engine");
  }

  if (any_yes) {
    R.monogenity = Monogenity::NotMonogenic;
    R.monogenity_reason = "common index divisor at p in {" + yes_list + "}";
  } else if (R.complete && !any_index && !any_unknown) {
    R.monogenity = Monogenity::MonogenicViaAlpha;
    R.monogenity_reason = "the equation order is maximal";
  } else if (R.complete && any_index && !any_unknown) {
    R.monogenity = Monogenity::Unknown;
    R.monogenity_reason =
        "the equation order is not maximal and no common index divisor exists; "
        "monogenity by another generator is undecided";
  } else {
    R.monogenity = Monogenity::Unknown;
    R.monogenity_reason = "analysis incomplete";
  }
  return R;
}

}  // namespace oreforge
