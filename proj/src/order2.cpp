#include "oreforge/order2.hpp"

#include <algorithm>
#include <stdexcept>

namespace oreforge {
namespace {

long long mod_inv_ll(long long a, long long m) {
  if (m == 1) return 0;
  long long g0 = m, g1 = ((a % m) + m) % m;
  long long x0 = 0, x1 = 1;
  while (g1 != 0) {
    long long q = g0 / g1;
    long long t = g0 - q * g1;
    g0 = g1;
    g1 = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (g0 != 1) throw std::logic_error("mod_inv_ll: arguments not coprime");
  return ((x0 % m) + m) % m;
}

IntPoly ipow(const IntPoly& b, long long n) {
  IntPoly r = IntPoly::constant(1);
  for (long long i = 0; i < n; i++) r = r * b;
  return r;
}

long residue_of_unit(const BigInt& cofactor, long p) {
  BigInt m = cofactor % p;
  if (m < 0) m += p;
  return m.get_si();
}

/* weight of a single digit (constant, nonzero) at position j */
long long digit_weight(const Order2Type& t, const Valuation& vp, const IntPoly& d,
                       long long j) {
  return t.e1 * vp(d.coeff(0)).value() + j * t.h1;
}

/* minimal-weight positions of a nonzero polynomial sit in one residue class
 * mod e1, determined by the weight alone: j*h1 = mu (mod e1) */
long long canonical_anchor(const Order2Type& t, long long mu) {
  if (t.e1 == 1) return 0;
  long long r = ((mu % t.e1) + t.e1) % t.e1;
  return (r * mod_inv_ll(t.h1, t.e1)) % t.e1;
}

/* the additive correction moving a key toward the residual root c:
 * weight exactly key_weight + h2, degree < deg(key) */
IntPoly refinement_term(const Order2Type& t, const Valuation& vp, long long h2,
                        const FpPoly& c) {
  long long e1 = t.e1, h1 = t.h1;
  long f1 = t.psi.degree();
  long long beta = (e1 == 1) ? 0 : ((h2 % e1) * mod_inv_ll(h1, e1)) % e1;
  if ((h2 - beta * h1) % e1 != 0) throw std::logic_error("refinement: slope misalignment");
  long long A = h1 + (h2 - beta * h1) / e1;
  if (A < 0) throw std::logic_error("refinement: negative weight");
  IntPoly u;
  for (int k = 0; k <= c.degree(); k++) {
    if (c.coeff(k) == 0) continue;
    BigInt scale = BigInt(c.coeff(k)) *
                   pow_bigint(vp.prime(), static_cast<unsigned long>(A + (f1 - 1 - k) * h1));
    u = u + ipow(t.phi1, k * e1 + beta) * scale;
  }
  return u;
}

long long unresolved_degree(const Order2Outcome& oc) {
  long long d = 0;
  for (const auto& c : oc.constraints) d += c.degree;
  return d;
}

Order2Outcome run_with_refinement(const IntPoly& F, const Order2Type& t,
                                  const Valuation& vp, IntPoly key, int refine_cap) {
  long f1 = t.psi.degree();
  FqCtx Fq(t.psi);
  Order2Outcome oc;
  for (;;) {
    oc.key = key;
    ExtNat kw = omega2(t, vp, key);
    oc.key_value = kw.value();
    auto digits = phi_expansion(F, key);
    oc.points.clear();
    for (size_t i = 0; i < digits.size(); i++) {
      ExtNat w = omega2(t, vp, digits[i]);
      ExtNat y = w.is_infinity()
                     ? ExtNat::infinity()
                     : ExtNat::finite(w.value() + static_cast<long long>(i) * oc.key_value);
      oc.points.push_back({static_cast<long>(i), y});
    }
    oc.np = principal_polygon(oc.points);
    if (oc.np.length() != t.mult)
      throw std::logic_error("second-order polygon length differs from multiplicity");

    oc.sides.clear();
    for (const auto& s : oc.np.sides) {
      Order2SideAnalysis sa;
      sa.side = s;
      /* coefficient j lives in the graded piece spanned by p^(a0-j*alpha) *
       * phi1^(b0-j*beta); pulling each digit's residual back to that basis
       * twists it by a power of the class of phi1^e1/p^h1, i.e. of gen() */
      long long beta = (t.e1 == 1) ? 0 : ((s.hr % t.e1 + t.e1) % t.e1 * mod_inv_ll(t.h1, t.e1)) % t.e1;
      long long anchor0 = canonical_anchor(t, s.y0 - static_cast<long long>(s.x0) * oc.key_value);
      std::vector<FqCtx::Elem> coef(static_cast<size_t>(s.d) + 1, Fq.zero());
      for (long j = 0; j <= s.d; j++) {
        long i = s.x0 + j * static_cast<long>(s.er);
        const IntPoly& di = digits[static_cast<size_t>(i)];
        if (di.is_zero()) continue;
        long long want = s.y0 - j * s.hr;
        long long have = omega2(t, vp, di).value() + static_cast<long long>(i) * oc.key_value;
        if (have != want) continue;  // strictly above the side
        long long anchor = canonical_anchor(t, have - static_cast<long long>(i) * oc.key_value);
        long long kappa_num = anchor - anchor0 + static_cast<long long>(j) * beta;
        if (kappa_num % t.e1 != 0) throw std::logic_error("residual twist misaligned");
        long kappa = static_cast<long>(kappa_num / t.e1);
        coef[static_cast<size_t>(j)] =
            Fq.mul(Fq.gen_pow(kappa), Fq.reduce(leading_residual(t, vp, di)));
      }
      sa.residual = FqPoly(std::move(coef));
      sa.factors = fq_factor(Fq, sa.residual);
      sa.squarefree = true;
      for (const auto& fc : sa.factors) sa.squarefree = sa.squarefree && fc.mult == 1;
      oc.sides.push_back(std::move(sa));
    }

    bool all_sf = true;
    for (const auto& sa : oc.sides) all_sf = all_sf && sa.squarefree;
    if (all_sf) {
      oc.conclusive = true;
      oc.constraints.clear();
      oc.branches.clear();
      for (const auto& sa : oc.sides)
        for (const auto& fc : sa.factors)
          oc.branches.push_back({static_cast<long>(t.e1 * sa.side.er),
                                 static_cast<long>(f1 * fc.f.degree())});
      std::sort(oc.branches.begin(), oc.branches.end());
      break;
    }

    /* a repeated linear factor on an integer-slope side can be chased by
     * moving the key toward its root */
    const Order2SideAnalysis* target = nullptr;
    const FqFactor* target_fc = nullptr;
    for (const auto& sa : oc.sides) {
      if (sa.side.er != 1) continue;
      for (const auto& fc : sa.factors)
        if (fc.mult >= 2 && fc.f.degree() == 1) {
          target = &sa;
          target_fc = &fc;
          break;
        }
      if (target) break;
    }
    if (target && oc.refinements < refine_cap) {
      FpPoly root = Fq.neg(target_fc->f.coeff(0));
      key = key + refinement_term(t, vp, target->side.hr, root);
      oc.refinements++;
      continue;
    }

    /* partial outcome: multiplicity-one factors resolve, the rest constrain */
    oc.conclusive = false;
    oc.branches.clear();
    oc.constraints.clear();
    for (const auto& sa : oc.sides) {
      for (const auto& fc : sa.factors) {
        if (fc.mult == 1) {
          oc.branches.push_back({static_cast<long>(t.e1 * sa.side.er),
                                 static_cast<long>(f1 * fc.f.degree())});
        } else {
          oc.constraints.push_back(
              {static_cast<long long>(fc.mult) * fc.f.degree() * f1 * t.e1 * sa.side.er,
               static_cast<long>(t.e1 * sa.side.er),
               static_cast<long>(f1 * fc.f.degree())});
        }
      }
    }
    std::sort(oc.branches.begin(), oc.branches.end());
    break;
  }

  long long total = 0;
  for (const auto& b : oc.branches) total += static_cast<long long>(b.e) * b.f;
  total += unresolved_degree(oc);
  if (total != static_cast<long long>(t.mult) * t.e1 * f1)
    throw std::logic_error("second-order outcome does not exhaust the branch degree");
  return oc;
}

}  // namespace

ExtNat omega2(const Order2Type& t, const Valuation& vp, const IntPoly& g) {
  if (g.is_zero()) return ExtNat::infinity();
  auto digs = phi_expansion(g, t.phi1);
  ExtNat best = ExtNat::infinity();
  for (size_t j = 0; j < digs.size(); j++) {
    if (digs[j].is_zero()) continue;
    best = min(best, ExtNat::finite(digit_weight(t, vp, digs[j], static_cast<long long>(j))));
  }
  return best;
}

FpPoly leading_residual(const Order2Type& t, const Valuation& vp, const IntPoly& g) {
  if (g.is_zero()) throw std::logic_error("leading residual of the zero polynomial");
  long p = vp.prime().get_si();
  auto digs = phi_expansion(g, t.phi1);
  long long mu = omega2(t, vp, g).value();
  long long j0 = canonical_anchor(t, mu);
  std::vector<long> coeffs;
  for (size_t j = 0; j < digs.size(); j++) {
    if (digs[j].is_zero()) continue;
    if (digit_weight(t, vp, digs[j], static_cast<long long>(j)) != mu) continue;
    long long off = static_cast<long long>(j) - j0;
    if (off < 0 || off % t.e1 != 0) throw std::logic_error("residual positions misaligned");
    size_t k = static_cast<size_t>(off / t.e1);
    if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
    coeffs[k] = residue_of_unit(vp.split(digs[j].coeff(0)).second, p);
  }
  return FpPoly(p, std::move(coeffs));
}

bool key_admissible(const Order2Type& t, const Valuation& vp, const IntPoly& key) {
  long f1 = t.psi.degree();
  if (!key.is_monic() || key.degree() != t.e1 * f1) return false;
  ExtNat w = omega2(t, vp, key);
  long long expect = t.e1 * f1 * t.h1;
  if (w.is_infinity() || w.value() != expect) return false;
  auto digs = phi_expansion(key, t.phi1);
  /* the minimal weight must occur at position 0 so the residual spans a full
   * side of the right slope */
  if (digs[0].is_zero() || digit_weight(t, vp, digs[0], 0) != expect) return false;
  return leading_residual(t, vp, key) == t.psi;
}

IntPoly construct_key(const Order2Type& t, const Valuation& vp) {
  long f1 = t.psi.degree();
  IntPoly phie = ipow(t.phi1, t.e1);
  IntPoly key, pw = IntPoly::constant(1);
  for (int k = 0; k <= f1; k++) {
    if (t.psi.coeff(k) != 0) {
      BigInt scale = BigInt(t.psi.coeff(k)) *
                     pow_bigint(vp.prime(), static_cast<unsigned long>((f1 - k) * t.h1));
      key = key + pw * scale;
    }
    pw = pw * phie;
  }
  return key;
}

std::vector<IntPoly> key_poly_catalog(long p) {
  if (p == 2)
    return {IntPoly({-2, 0, 0, 1}),          IntPoly({-2, -2, 0, 1}),
            IntPoly({-2, 0, -2, 1}),         IntPoly({-2, 0, 1}),
            IntPoly({-2, -2, 1}),            IntPoly({-6, -2, 1}),
            IntPoly({-4, 0, -2, 0, 1}),      IntPoly({-12, -4, -2, -2, 1}),
            IntPoly({-12, -4, -6, -2, 1}),   IntPoly({-16, 0, 0, 1})};
  if (p == 3) return {IntPoly({-3, 0, 1}), IntPoly({3, 0, 1})};
  return {};
}

Order2Outcome order2_analyze(const IntPoly& F, const Order2Type& t,
                             const Valuation& vp, int refine_cap) {
  std::vector<IntPoly> candidates;
  for (const auto& raw : key_poly_catalog(vp.prime().get_si())) {
    IntPoly k = compose(raw, t.phi1);
    if (key_admissible(t, vp, k)) candidates.push_back(k);
  }
  IntPoly built = construct_key(t, vp);
  bool have_built = false;
  for (const auto& c : candidates) have_built = have_built || c == built;
  if (!have_built) candidates.push_back(built);

  bool have_best = false;
  Order2Outcome best;
  for (const auto& k0 : candidates) {
    Order2Outcome oc = run_with_refinement(F, t, vp, k0, refine_cap);
    if (oc.conclusive) return oc;
    if (!have_best || unresolved_degree(oc) < unresolved_degree(best)) {
      best = oc;
      have_best = true;
    }
  }
  return best;
}

}  // namespace oreforge
