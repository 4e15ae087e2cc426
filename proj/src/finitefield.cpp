#include "oreforge/finitefield.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

namespace oreforge {

uint64_t global_seed() {
  static uint64_t seed = [] {
    if (const char* env = std::getenv("ORE_FORGE_SEED")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 0);
      if (end && *end == '\0') return static_cast<uint64_t>(v);
    }
    return uint64_t{0x0f0e0d0c0b0a0901ULL};
  }();
  return seed;
}

namespace {

long mod_reduce(long x, long p) {
  long r = x % p;
  return r < 0 ? r + p : r;
}

long mulmod_l(long a, long b, long p) {
  /* p stays below 2^20 in practice; products fit in int64 */
  return (a * b) % p;
}

long powmod_l(long a, long e, long p) {
  long r = 1;
  a = mod_reduce(a, p);
  while (e > 0) {
    if (e & 1) r = mulmod_l(r, a, p);
    a = mulmod_l(a, a, p);
    e >>= 1;
  }
  return r;
}

long inv_mod(long a, long p) {
  a = mod_reduce(a, p);
  if (a == 0) throw std::domain_error("inverse of 0 mod p");
  return powmod_l(a, p - 2, p);
}

uint64_t fnv_mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

/* ---------------- FpPoly ---------------- */

void FpPoly::check_p() const {
  /* coefficient products must fit in long; analysis primes are small */
  if (p_ < 2 || p_ > (1L << 20)) throw std::invalid_argument("FpPoly: p out of range");
}

void FpPoly::normalize() {
  for (auto& v : c_) v = mod_reduce(v, p_);
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly::FpPoly(long p, std::vector<long> coeffs) : p_(p), c_(std::move(coeffs)) {
  check_p();
  normalize();
}

FpPoly FpPoly::from_int_poly(const IntPoly& f, long p) {
  std::vector<long> c(f.degree() + 1, 0);
  BigInt bp(p);
  for (int i = 0; i <= f.degree(); i++) {
    BigInt r = f.coeff(i) % bp;
    c[i] = r.get_si();
  }
  return FpPoly(p, std::move(c));
}

FpPoly FpPoly::monomial(long p, long c, int k) {
  std::vector<long> v(k + 1, 0);
  v[k] = c;
  return FpPoly(p, std::move(v));
}

long FpPoly::leading() const {
  if (c_.empty()) throw std::domain_error("FpPoly: leading() of zero");
  return c_.back();
}

bool FpPoly::operator<(const FpPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int i = degree(); i >= 0; i--)
    if (coeff(i) != o.coeff(i)) return coeff(i) < o.coeff(i);
  return false;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  long p = p_ ? p_ : o.p_;
  if (p == 0) return FpPoly();
  std::vector<long> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); i++) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); i++) r[i] += o.c_[i];
  return FpPoly(p, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  long p = p_ ? p_ : o.p_;
  if (p == 0) return FpPoly();
  std::vector<long> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); i++) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); i++) r[i] -= o.c_[i];
  return FpPoly(p, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  long p = p_ ? p_ : o.p_;
  if (p == 0) return FpPoly();
  if (is_zero() || o.is_zero()) return FpPoly(p);
  std::vector<long> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); i++) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); j++) r[i + j] = (r[i + j] + c_[i] * o.c_[j]) % p;
  }
  return FpPoly(p, std::move(r));
}

FpPoly FpPoly::scaled(long k) const {
  std::vector<long> r = c_;
  for (auto& v : r) v = mulmod_l(mod_reduce(k, p_), mod_reduce(v, p_), p_);
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  if (leading() == 1) return *this;
  return scaled(inv_mod(leading(), p_));
}

FpPoly FpPoly::derivative() const {
  if (c_.size() <= 1) return FpPoly(p_);
  std::vector<long> r(c_.size() - 1, 0);
  for (size_t i = 1; i < c_.size(); i++) r[i - 1] = (c_[i] * static_cast<long>(i % p_)) % p_;
  return FpPoly(p_, std::move(r));
}

long FpPoly::eval(long x) const {
  long acc = 0;
  x = mod_reduce(x, p_);
  for (size_t i = c_.size(); i-- > 0;) acc = (acc * x + c_[i]) % p_;
  return acc;
}

IntPoly FpPoly::lift() const {
  std::vector<BigInt> c(c_.size());
  for (size_t i = 0; i < c_.size(); i++) c[i] = c_[i];
  return IntPoly(std::move(c));
}

std::string FpPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; i--) {
    long c = coeff(i);
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) {
      os << c;
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("fp_divrem by zero");
  long p = b.p();
  const int d = b.degree();
  long binv = inv_mod(b.leading(), p);
  std::vector<long> rem(a.coeffs());
  std::vector<long> quo;
  int n = static_cast<int>(rem.size()) - 1;
  if (n >= d) quo.assign(n - d + 1, 0);
  for (int k = n; k >= d; k--) {
    long c = mulmod_l(mod_reduce(rem[k], p), binv, p);
    if (c == 0) continue;
    quo[k - d] = c;
    for (int i = 0; i <= d; i++) rem[k - d + i] = mod_reduce(rem[k - d + i] - c * b.coeff(i), p);
  }
  return {FpPoly(p, std::move(quo)), FpPoly(p, std::move(rem))};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b) { return fp_divrem(a, b).second; }

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly fp_powmod(const FpPoly& base, const BigInt& e, const FpPoly& mod) {
  if (e < 0) throw std::invalid_argument("fp_powmod: negative exponent");
  FpPoly r = FpPoly::constant(mod.p(), 1);
  FpPoly b = fp_mod(base, mod);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (size_t i = bits; i-- > 0;) {
    r = fp_mod(r * r, mod);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mod(r * b, mod);
  }
  return r;
}

/* ---------------- FqCtx / FqPoly ---------------- */

FqCtx::FqCtx(FpPoly modulus) : mod_(std::move(modulus)) {
  if (!mod_.is_monic() || mod_.degree() < 1)
    throw std::invalid_argument("FqCtx: modulus must be monic of degree >= 1");
  if (mod_.degree() > 1 && !fp_is_irreducible(mod_))
    throw std::invalid_argument("FqCtx: modulus must be irreducible");
}

BigInt FqCtx::q() const { return pow_bigint(p(), f()); }

FqCtx::Elem FqCtx::gen() const { return reduce(FpPoly::xpoly(p())); }

FqCtx::Elem FqCtx::gen_pow(long k) const {
  Elem g = gen();
  if (k >= 0) return pow(g, BigInt(k));
  return pow(inv(g), BigInt(-k));
}

FqCtx::Elem FqCtx::inv(const Elem& a) const {
  if (a.is_zero()) throw std::domain_error("FqCtx: inverse of 0");
  return pow(a, q() - 2);
}

FqCtx::Elem FqCtx::pow(const Elem& a, const BigInt& e) const {
  return fp_powmod(a, e, mod_);
}

std::string FqCtx::elem_str(const Elem& a, const std::string& var) const {
  return a.str(var);
}

void FqPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FqPoly::FqPoly(std::vector<FqCtx::Elem> coeffs) : c_(std::move(coeffs)) { normalize(); }

const FqCtx::Elem& FqPoly::coeff(int i) const {
  static const FpPoly zero;
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

const FqCtx::Elem& FqPoly::leading() const {
  if (c_.empty()) throw std::domain_error("FqPoly: leading() of zero");
  return c_.back();
}

bool FqPoly::is_monic() const {
  return !c_.empty() && c_.back().degree() == 0 && c_.back().coeff(0) == 1;
}

std::string FqPoly::str(const FqCtx& F, const std::string& var,
                        const std::string& gen) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; i--) {
    const auto& c = coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool is_one = (c.degree() == 0 && c.coeff(0) == 1);
    if (i == 0 || !is_one) {
      int terms = 0;
      for (long v : c.coeffs()) terms += (v != 0);
      if (terms > 1 && i > 0) {  // constant term needs no parentheses
        os << "(" << F.elem_str(c, gen) << ")";
      } else {
        os << F.elem_str(c, gen);
      }
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

FqPoly fq_add(const FqCtx& F, const FqPoly& a, const FqPoly& b) {
  std::vector<FqCtx::Elem> r(std::max(a.degree(), b.degree()) + 1, F.zero());
  for (size_t i = 0; i < r.size(); i++) r[i] = F.add(a.coeff(i), b.coeff(i));
  return FqPoly(std::move(r));
}

FqPoly fq_sub(const FqCtx& F, const FqPoly& a, const FqPoly& b) {
  std::vector<FqCtx::Elem> r(std::max(a.degree(), b.degree()) + 1, F.zero());
  for (size_t i = 0; i < r.size(); i++) r[i] = F.sub(a.coeff(i), b.coeff(i));
  return FqPoly(std::move(r));
}

FqPoly fq_mul(const FqCtx& F, const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return FqPoly();
  std::vector<FqCtx::Elem> r(a.degree() + b.degree() + 1, F.zero());
  for (int i = 0; i <= a.degree(); i++) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j <= b.degree(); j++)
      r[i + j] = F.add(r[i + j], F.mul(a.coeff(i), b.coeff(j)));
  }
  return FqPoly(std::move(r));
}

FqPoly fq_scale(const FqCtx& F, const FqCtx::Elem& k, const FqPoly& a) {
  std::vector<FqCtx::Elem> r(a.coeffs());
  for (auto& v : r) v = F.mul(k, v);
  return FqPoly(std::move(r));
}

std::pair<FqPoly, FqPoly> fq_divrem(const FqCtx& F, const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("fq_divrem by zero");
  const int d = b.degree();
  FqCtx::Elem binv = F.inv(b.leading());
  std::vector<FqCtx::Elem> rem(a.coeffs());
  std::vector<FqCtx::Elem> quo;
  int n = static_cast<int>(rem.size()) - 1;
  if (n >= d) quo.assign(n - d + 1, F.zero());
  for (int k = n; k >= d; k--) {
    FqCtx::Elem c = F.mul(rem[k], binv);
    if (c.is_zero()) continue;
    quo[k - d] = c;
    for (int i = 0; i <= d; i++) rem[k - d + i] = F.sub(rem[k - d + i], F.mul(c, b.coeff(i)));
  }
  return {FqPoly(std::move(quo)), FqPoly(std::move(rem))};
}

FqPoly fq_mod(const FqCtx& F, const FqPoly& a, const FqPoly& b) {
  return fq_divrem(F, a, b).second;
}

FqPoly fq_monic(const FqCtx& F, const FqPoly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return fq_scale(F, F.inv(a.leading()), a);
}

FqPoly fq_gcd(const FqCtx& F, FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = fq_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fq_monic(F, a);
}

FqPoly fq_powmod(const FqCtx& F, const FqPoly& base, const BigInt& e, const FqPoly& mod) {
  if (e < 0) throw std::invalid_argument("fq_powmod: negative exponent");
  FqPoly r({F.one()});
  if (e == 0) return r;
  FqPoly b = fq_mod(F, base, mod);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = fq_mod(F, fq_mul(F, r, r), mod);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fq_mod(F, fq_mul(F, r, b), mod);
  }
  return r;
}

FqPoly fq_derivative(const FqCtx& F, const FqPoly& a) {
  if (a.degree() < 1) return FqPoly();
  std::vector<FqCtx::Elem> r(a.degree(), F.zero());
  for (int i = 1; i <= a.degree(); i++)
    r[i - 1] = F.mul(F.from_int(i % F.p()), a.coeff(i));
  return FqPoly(std::move(r));
}

bool fq_less(const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; i--) {
    if (a.coeff(i) == b.coeff(i)) continue;
    return a.coeff(i) < b.coeff(i);
  }
  return false;
}

/* ---------------- factorization over F_q ---------------- */

namespace {

uint64_t hash_fqpoly(const FqCtx& F, const FqPoly& g) {
  uint64_t h = fnv_mix(0x243f6a8885a308d3ULL, static_cast<uint64_t>(F.p()));
  for (long c : F.modulus().coeffs()) h = fnv_mix(h, static_cast<uint64_t>(c));
  for (int i = 0; i <= g.degree(); i++)
    for (long c : g.coeff(i).coeffs()) h = fnv_mix(h, static_cast<uint64_t>(c + 1));
  return h;
}

FqPoly fq_xpoly(const FqCtx& F) { return FqPoly({F.zero(), F.one()}); }

/* p-th root of a polynomial with zero derivative: g(x) = h(x^p) */
FqPoly fq_pth_root(const FqCtx& F, const FqPoly& g) {
  const long p = F.p();
  std::vector<FqCtx::Elem> h;
  BigInt root_exp = pow_bigint(p, F.f() - 1);  // c -> c^(q/p), Frobenius inverse
  for (int i = 0; i <= g.degree(); i += p) h.push_back(F.pow(g.coeff(i), root_exp));
  return FqPoly(std::move(h));
}

void fq_squarefree_decomp(const FqCtx& F, const FqPoly& g, int outer_mult,
                          std::vector<std::pair<FqPoly, int>>& out) {
  if (g.degree() <= 0) return;
  FqPoly d = fq_derivative(F, g);
  if (d.is_zero()) {
    fq_squarefree_decomp(F, fq_pth_root(F, g), outer_mult * F.p(), out);
    return;
  }
  FqPoly t = fq_gcd(F, g, d);
  FqPoly w = fq_divrem(F, g, t).first;
  int i = 1;
  while (w.degree() > 0) {
    FqPoly y = fq_gcd(F, w, t);
    FqPoly z = fq_divrem(F, w, y).first;
    if (z.degree() > 0) out.emplace_back(z, i * outer_mult);
    w = std::move(y);
    t = fq_divrem(F, t, w).first;
    i++;
  }
  if (t.degree() > 0) fq_squarefree_decomp(F, fq_pth_root(F, t), outer_mult * F.p(), out);
}

/* distinct-degree: input squarefree monic; output (product, degree) */
std::vector<std::pair<FqPoly, int>> fq_ddf(const FqCtx& F, FqPoly g) {
  std::vector<std::pair<FqPoly, int>> out;
  const BigInt q = F.q();
  FqPoly h = fq_mod(F, fq_xpoly(F), g);
  int d = 0;
  while (g.degree() >= 2 * (d + 1)) {
    d++;
    h = fq_powmod(F, h, q, g);
    FqPoly split = fq_gcd(F, fq_sub(F, h, fq_xpoly(F)), g);
    if (split.degree() > 0) {
      out.emplace_back(split, d);
      g = fq_divrem(F, g, split).first;
      h = fq_mod(F, h, g);
    }
  }
  if (g.degree() > 0) out.emplace_back(g, g.degree());
  return out;
}

FqPoly fq_random_poly(const FqCtx& F, std::mt19937_64& rng, int deg_bound) {
  std::uniform_int_distribution<long> dc(0, F.p() - 1);
  std::vector<FqCtx::Elem> c;
  for (int i = 0; i < deg_bound; i++) {
    std::vector<long> e(F.f());
    for (auto& v : e) v = dc(rng);
    c.emplace_back(F.p(), std::move(e));
  }
  return FqPoly(std::move(c));
}

/* equal-degree splitting of a monic product of irreducibles of degree d */
void fq_edf(const FqCtx& F, const FqPoly& g, int d, std::mt19937_64& rng,
            std::vector<FqPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const long p = F.p();
  FqPoly splitter;
  while (true) {
    FqPoly a = fq_random_poly(F, rng, g.degree());
    if (a.degree() < 1 && (a.is_zero() || d > 1)) {
      /* constants cannot split when all factors share the same residue */
    }
    FqPoly c;
    if (p == 2) {
      /* trace map over F_2: sum of a^(2^i), i < f*d */
      FqPoly acc = fq_mod(F, a, g), tr = acc;
      long steps = static_cast<long>(F.f()) * d;
      for (long i = 1; i < steps; i++) {
        acc = fq_mod(F, fq_mul(F, acc, acc), g);
        tr = fq_add(F, tr, acc);
      }
      c = fq_gcd(F, tr, g);
    } else {
      BigInt e = (pow_bigint(p, F.f() * d) - 1) / 2;
      FqPoly b = fq_powmod(F, a, e, g);
      c = fq_gcd(F, fq_sub(F, b, FqPoly({F.one()})), g);
    }
    if (c.degree() > 0 && c.degree() < g.degree()) {
      splitter = std::move(c);
      break;
    }
  }
  fq_edf(F, splitter, d, rng, out);
  fq_edf(F, fq_divrem(F, g, splitter).first, d, rng, out);
}

}  // namespace

std::vector<FqFactor> fq_factor(const FqCtx& F, const FqPoly& g0) {
  if (g0.is_zero()) throw std::invalid_argument("fq_factor of zero");
  std::vector<FqFactor> out;
  FqPoly g = fq_monic(F, g0);
  if (g.degree() == 0) return out;
  std::mt19937_64 rng(global_seed() ^ hash_fqpoly(F, g0));
  std::vector<std::pair<FqPoly, int>> sqf;
  fq_squarefree_decomp(F, g, 1, sqf);
  for (auto& [part, mult] : sqf) {
    for (auto& [prod, d] : fq_ddf(F, part)) {
      std::vector<FqPoly> irr;
      fq_edf(F, prod, d, rng, irr);
      for (auto& f : irr) out.push_back({f, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const FqFactor& a, const FqFactor& b) {
    if (a.f.degree() != b.f.degree()) return a.f.degree() < b.f.degree();
    if (!(a.f == b.f)) return fq_less(a.f, b.f);
    return a.mult < b.mult;
  });
  return out;
}

bool fq_is_squarefree(const FqCtx& F, const FqPoly& g) {
  if (g.degree() <= 0) return !g.is_zero();
  FqPoly d = fq_derivative(F, g);
  if (d.is_zero()) return false;
  return fq_gcd(F, g, d).degree() == 0;
}

bool fq_is_irreducible(const FqCtx& F, const FqPoly& g) {
  const int n = g.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const BigInt q = F.q();
  FqPoly x = fq_xpoly(F);
  /* x^(q^n) = x mod g, and gcd(x^(q^(n/r)) - x, g) = 1 for primes r | n */
  std::vector<int> prime_divs;
  int nn = n;
  for (int r = 2; r * r <= nn; r++)
    if (nn % r == 0) {
      prime_divs.push_back(r);
      while (nn % r == 0) nn /= r;
    }
  if (nn > 1) prime_divs.push_back(nn);
  FqPoly h = fq_mod(F, x, g);
  std::vector<FqPoly> frob_powers(n + 1);
  for (int i = 1; i <= n; i++) {
    h = fq_powmod(F, h, q, g);
    frob_powers[i] = h;
  }
  if (!(fq_sub(F, frob_powers[n], fq_mod(F, x, g)).is_zero())) return false;
  for (int r : prime_divs) {
    FqPoly diff = fq_sub(F, frob_powers[n / r], fq_mod(F, x, g));
    if (fq_gcd(F, diff, g).degree() != 0) return false;
  }
  return true;
}

/* ---------------- F_p wrappers ---------------- */

namespace {

FqCtx fp_as_fq(long p) { return FqCtx(FpPoly::xpoly(p)); }

FqPoly fp_to_fq(const FqCtx& F, const FpPoly& f) {
  std::vector<FqCtx::Elem> c;
  for (long v : f.coeffs()) c.push_back(F.from_int(v));
  return FqPoly(std::move(c));
}

FpPoly fq_to_fp(long p, const FqPoly& g) {
  std::vector<long> c;
  for (int i = 0; i <= g.degree(); i++) c.push_back(g.coeff(i).coeff(0));
  return FpPoly(p, std::move(c));
}

}  // namespace

std::vector<FpFactor> fp_factor(const FpPoly& f) {
  FqCtx F = fp_as_fq(f.p());
  std::vector<FpFactor> out;
  for (auto& [g, mult] : fq_factor(F, fp_to_fq(F, f)))
    out.push_back({fq_to_fp(f.p(), g), mult});
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
    if (!(a.f == b.f)) return a.f < b.f;
    return a.mult < b.mult;
  });
  return out;
}

std::vector<FpFactor> factor_mod_p(const IntPoly& F, long p) {
  return fp_factor(FpPoly::from_int_poly(F, p));
}

bool fp_is_irreducible(const FpPoly& f) {
  if (f.degree() == 1) return true;
  FqCtx F = fp_as_fq(f.p());
  return fq_is_irreducible(F, fp_to_fq(F, f));
}

bool fp_is_squarefree(const FpPoly& f) {
  if (f.degree() <= 0) return !f.is_zero();
  FpPoly d = f.derivative();
  if (d.is_zero()) return false;
  return fp_gcd(f, d).degree() == 0;
}

BigInt count_monic_irreducibles(long p, int f) {
  if (f < 1) throw std::invalid_argument("count_monic_irreducibles: f < 1");
  /* Mobius over divisors of f */
  auto mobius = [](int n) {
    int mu = 1;
    for (int r = 2; r * r <= n; r++) {
      if (n % r == 0) {
        n /= r;
        if (n % r == 0) return 0;
        mu = -mu;
      }
    }
    if (n > 1) mu = -mu;
    return mu;
  };
  BigInt total(0);
  for (int d = 1; d <= f; d++) {
    if (f % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    total += BigInt(mu) * pow_bigint(p, f / d);
  }
  return total / f;
}

}  // namespace oreforge
