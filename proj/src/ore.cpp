#include "oreforge/ore.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oreforge {

std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.size(); i++) {
    if (i) os << ", ";
    os << "(" << s[i].e << "," << s[i].f << ")";
  }
  os << "}";
  return os.str();
}

IntPoly canonical_lift(const FpPoly& g) {
  if (g.degree() == 1) {
    long p = g.p();
    long c = g.coeff(0);
    long r = (p - c) % p;  // root of x + c
    return IntPoly({BigInt(-r), BigInt(1)});
  }
  return g.lift();
}

PhiAnalysis analyze_phi(const IntPoly& F, const IntPoly& phi, long mult,
                        const Valuation& vp) {
  PhiAnalysis pa{phi_newton_polygon(F, phi, vp), mult, {}, true};
  if (pa.data.np.length() != mult)
    throw std::logic_error("analyze_phi: polygon length != factor multiplicity");
  for (const auto& s : pa.data.np.sides) {
    SideAnalysis sa{s, side_residual(pa.data, s, vp), {}, true};
    sa.factors = fq_factor(pa.data.rf, sa.residual);
    for (const auto& [f, m] : sa.factors)
      if (m > 1) sa.squarefree = false;
    pa.regular = pa.regular && sa.squarefree;
    pa.sides.push_back(std::move(sa));
  }
  return pa;
}

OreAnalysis ore_analyze(const IntPoly& F, const Valuation& vp) {
  if (!F.is_monic()) throw std::invalid_argument("ore_analyze: F must be monic");
  OreAnalysis oa{vp.prime(), {}, 0, true};
  long p = vp.prime().get_si();
  for (const auto& [g, mult] : factor_mod_p(F, p)) {
    PhiAnalysis pa = analyze_phi(F, canonical_lift(g), mult, vp);
    oa.index_lower_bound += pa.data.index_contribution;
    oa.p_regular = oa.p_regular && pa.regular;
    oa.phis.push_back(std::move(pa));
  }
  return oa;
}

bool dedekind_index_divides(const IntPoly& F, const Valuation& vp) {
  long p = vp.prime().get_si();
  auto factors = factor_mod_p(F, p);
  FpPoly gbar(p, {1}), hbar(p, {1}), repeated(p, {1});
  for (const auto& [g, mult] : factors) {
    gbar = gbar * g;
    for (int i = 1; i < mult; i++) hbar = hbar * g;
    if (mult >= 2) repeated = repeated * g;
  }
  IntPoly gh = gbar.lift() * hbar.lift();
  IntPoly T = (gh - F).exact_div(vp.prime());
  FpPoly Tbar = FpPoly::from_int_poly(T, p);
  return fp_gcd(fp_gcd(Tbar, repeated), gbar).degree() > 0;
}

SplittingShape ore_split(const OreAnalysis& oa) {
  if (!oa.p_regular) throw std::domain_error("ore_split: analysis is not regular");
  SplittingShape sp{oa.p, {}, true, "ore-regular"};
  long total = 0, expected = 0;
  for (const auto& pa : oa.phis) {
    long dphi = pa.data.phi.degree();
    expected += pa.mult * dphi;
    for (const auto& sa : pa.sides) {
      for (const auto& [psi, m] : sa.factors) {
        if (m != 1) throw std::logic_error("ore_split: repeated residual factor");
        sp.branches.push_back({static_cast<long>(sa.side.er), dphi * psi.degree()});
        total += static_cast<long>(sa.side.er) * dphi * psi.degree();
      }
    }
  }
  if (total != expected) throw std::logic_error("ore_split: branch degrees do not add up");
  std::sort(sp.branches.begin(), sp.branches.end());
  return sp;
}

std::optional<BigInt> find_regular_shift(const IntPoly& F, const Valuation& vp,
                                         long bound) {
  if (ore_analyze(F, vp).p_regular) return BigInt(0);
  long p = vp.prime().get_si();
  for (const auto& [g, mult] : factor_mod_p(F, p)) {
    if (g.degree() != 1) continue;
    if (analyze_phi(F, canonical_lift(g), mult, vp).regular) continue;
    /* anchor at the first irregular linear branch; every other branch's lift
     * moves in lockstep, so one anchor explores all configurations */
    long r = (p - g.coeff(0)) % p;
    for (long k = 0; k < bound; k++) {
      /* r, r+p, r-p, r+2p, r-2p, ... */
      long step = (k + 1) / 2;
      long sgn = (k % 2 == 1) ? 1 : -1;
      BigInt s = BigInt(r) + vp.prime() * BigInt(sgn * step);
      if (ore_analyze(F.shift_arg(s), vp).p_regular) return s;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace oreforge
