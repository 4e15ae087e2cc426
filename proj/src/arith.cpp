#include "oreforge/arith.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace oreforge {

BigInt pow_bigint(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/* ---------------- ExtNat ---------------- */

ExtNat ExtNat::finite(long long v) {
  if (v < 0) throw std::invalid_argument("ExtNat: negative value");
  ExtNat e;
  e.v_ = v;
  return e;
}

long long ExtNat::value() const {
  if (inf_) throw std::domain_error("ExtNat: value() of infinity");
  return v_;
}

ExtNat ExtNat::operator+(const ExtNat& o) const {
  if (inf_ || o.inf_) return infinity();
  return finite(v_ + o.v_);
}

ExtNat ExtNat::operator*(long long k) const {
  if (k < 0) throw std::invalid_argument("ExtNat: negative scale");
  if (inf_) return infinity();
  return finite(v_ * k);
}

std::strong_ordering ExtNat::operator<=>(const ExtNat& o) const {
  if (inf_ && o.inf_) return std::strong_ordering::equal;
  if (inf_) return std::strong_ordering::greater;
  if (o.inf_) return std::strong_ordering::less;
  return v_ <=> o.v_;
}

std::string ExtNat::str() const { return inf_ ? "inf" : std::to_string(v_); }

/* ---------------- IntPoly ---------------- */

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::x() { return monomial(1, 1); }

IntPoly IntPoly::monomial(BigInt c, int k) {
  IntPoly p;
  if (c != 0) {
    p.c_.assign(k + 1, BigInt(0));
    p.c_[k] = std::move(c);
  }
  return p;
}

IntPoly IntPoly::trinomial(int n, int m, const BigInt& a, const BigInt& b) {
  if (!(0 < m && m < n)) throw std::invalid_argument("trinomial: need 0 < m < n");
  IntPoly p;
  p.c_.assign(n + 1, BigInt(0));
  p.c_[n] = 1;
  p.c_[m] = a;
  p.c_[0] = b;
  p.normalize();
  return p;
}

bool IntPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

const BigInt& IntPoly::coeff(int i) const {
  static const BigInt zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

const BigInt& IntPoly::leading() const {
  if (c_.empty()) throw std::domain_error("IntPoly: leading() of zero");
  return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); i++) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); i++) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> r = c_;
  for (auto& v : r) v = -v;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); i++)
    for (size_t j = 0; j < o.c_.size(); j++) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const BigInt& k) const {
  std::vector<BigInt> r = c_;
  for (auto& v : r) v *= k;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<BigInt> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); i++) r[i - 1] = c_[i] * BigInt(static_cast<long>(i));
  return IntPoly(std::move(r));
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

IntPoly IntPoly::shift_arg(const BigInt& s) const {
  if (c_.empty() || s == 0) return *this;
  std::vector<BigInt> r = c_;
  const int n = static_cast<int>(r.size()) - 1;
  /* cascaded synthetic division by (x - s): pass k pins coefficient k of F(x+s) */
  for (int k = 0; k < n; k++)
    for (int i = n - 1; i >= k; i--) r[i] += s * r[i + 1];
  return IntPoly(std::move(r));
}

std::pair<IntPoly, IntPoly> IntPoly::divrem_monic(const IntPoly& divisor) const {
  if (!divisor.is_monic()) throw std::invalid_argument("divrem_monic: divisor not monic");
  const int d = divisor.degree();
  std::vector<BigInt> rem = c_;
  std::vector<BigInt> quo;
  int n = static_cast<int>(rem.size()) - 1;
  if (n >= d) quo.assign(n - d + 1, BigInt(0));
  for (int k = n; k >= d; k--) {
    BigInt c = rem[k];
    if (c == 0) continue;
    quo[k - d] = c;
    for (int i = 0; i <= d; i++) rem[k - d + i] -= c * divisor.coeff(i);
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly IntPoly::exact_div(const BigInt& k) const {
  if (k == 0) throw std::invalid_argument("exact_div by zero");
  std::vector<BigInt> r = c_;
  for (auto& v : r) {
    BigInt q, rr;
    mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
    if (rr != 0) throw std::domain_error("exact_div: not divisible");
    v = q;
  }
  return IntPoly(std::move(r));
}

BigInt IntPoly::content() const {
  BigInt g(0);
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::string IntPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; i--) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt abs_c = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || abs_c != 1) {
      os << abs_c.get_str();
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

/* ---------------- primality ---------------- */

bool is_certified_prime(const BigInt& n) {
  if (n < 2) return false;
  static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned long b : bases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  }
  /* the 12 bases above certify primality strictly below 3.317...e24 */
  static const BigInt limit("3317044064679887385961981");
  if (n >= limit) throw std::domain_error("is_certified_prime: out of certified range");
  BigInt d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  BigInt nm1 = n - 1;
  for (unsigned long b : bases) {
    BigInt x, base(b);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool witness = true;
    for (unsigned long r = 1; r < s; r++) {
      x = x * x % n;
      if (x == nm1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::optional<bool> try_certified_prime(const BigInt& n) {
  static const BigInt limit("3317044064679887385961981");
  if (n >= limit) return std::nullopt;
  return is_certified_prime(n);
}

/* ---------------- Valuation ---------------- */

Valuation::Valuation(BigInt p) : p_(std::move(p)) {
  if (!is_certified_prime(p_)) throw std::invalid_argument("Valuation: p not prime");
}

ExtNat Valuation::operator()(const BigInt& n) const {
  if (n == 0) return ExtNat::infinity();
  BigInt cof;
  unsigned long k = mpz_remove(cof.get_mpz_t(), n.get_mpz_t(), p_.get_mpz_t());
  return ExtNat::finite(static_cast<long long>(k));
}

ExtNat Valuation::gauss(const IntPoly& f) const {
  ExtNat m = ExtNat::infinity();
  for (const auto& c : f.coeffs()) m = min(m, (*this)(c));
  return m;
}

std::pair<long long, BigInt> Valuation::split(const BigInt& n) const {
  if (n == 0) throw std::invalid_argument("Valuation::split of 0");
  BigInt cof;
  unsigned long k = mpz_remove(cof.get_mpz_t(), n.get_mpz_t(), p_.get_mpz_t());
  return {static_cast<long long>(k), cof};
}

/* ---------------- resultants ---------------- */

namespace {

/* pseudo-remainder: rem(lc(B)^(deg A - deg B + 1) * A, B) */
IntPoly prem(const IntPoly& A, const IntPoly& B) {
  const int d = B.degree();
  IntPoly R = A;
  const BigInt& lb = B.leading();
  long e = A.degree() - d + 1;
  while (!R.is_zero() && R.degree() >= d) {
    IntPoly shifted = IntPoly::monomial(R.leading(), R.degree() - d) * B;
    R = R * lb - shifted;
    e--;
  }
  BigInt scale(1);
  for (long i = 0; i < e; i++) scale *= lb;
  return R * scale;
}

}  // namespace

IntPoly compose(const IntPoly& g, const IntPoly& h) {
  IntPoly acc;
  for (int i = g.degree(); i >= 0; i--) {
    acc = acc * h + IntPoly::constant(g.coeff(i));
  }
  return acc;
}

BigInt resultant(const IntPoly& A0, const IntPoly& B0) {
  if (A0.is_zero() || B0.is_zero()) return 0;
  IntPoly A = A0, B = B0;
  int sign = 1;
  if (A.degree() < B.degree()) {
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    std::swap(A, B);
  }
  if (B.degree() == 0) {
    if (A.degree() == 0) return 1;
    return pow_bigint(B.leading(), A.degree()) * sign;
  }
  BigInt ca = A.content(), cb = B.content();
  A = A.exact_div(ca);
  B = B.exact_div(cb);
  BigInt t = pow_bigint(ca, B.degree()) * pow_bigint(cb, A.degree());

  BigInt g(1), h(1);
  while (true) {
    long delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    IntPoly R = prem(A, B);
    if (R.is_zero()) return 0;
    A = B;
    BigInt divisor = g;
    for (long i = 0; i < delta; i++) divisor *= h;
    B = R.exact_div(divisor);
    g = A.leading();
    if (delta > 0) {
      /* h = g^delta / h^(delta-1), exact by subresultant theory */
      BigInt num = pow_bigint(g, delta), den(1);
      for (long i = 0; i < delta - 1; i++) den *= h;
      BigInt q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (r != 0) throw std::logic_error("subresultant: inexact h update");
      h = q;
    }
    if (B.degree() == 0) break;
  }
  long q = A.degree();
  BigInt num = pow_bigint(B.leading(), q), den(1);
  for (long i = 0; i < q - 1; i++) den *= h;
  BigInt quo, rem;
  mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw std::logic_error("subresultant: inexact final division");
  return quo * t * sign;
}

BigInt discriminant(const IntPoly& F) {
  const int n = F.degree();
  if (n < 1) throw std::invalid_argument("discriminant: degree < 1");
  BigInt r = resultant(F, F.derivative());
  BigInt q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), F.leading().get_mpz_t());
  if (rem != 0) throw std::logic_error("discriminant: lc does not divide resultant");
  int sign = ((static_cast<long>(n) * (n - 1) / 2) % 2 == 0) ? 1 : -1;
  return q * sign;
}

BigInt trinomial_disc_deg12_m1(const BigInt& a, const BigInt& b) {
  static const BigInt c12 = pow_bigint(12, 12);   // 2^24 * 3^12
  static const BigInt c11 = pow_bigint(11, 11);
  return c12 * pow_bigint(b, 11) - c11 * pow_bigint(a, 12);
}

}  // namespace oreforge
