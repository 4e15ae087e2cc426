#include "oreforge/oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace oreforge {
namespace {

using Vec = std::vector<BigInt>;
using Mat = std::vector<Vec>;
using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;
using FpVec = std::vector<long>;
using FpMat = std::vector<FpVec>;

Mat identity_mat(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; i++) m[i][i] = 1;
  return m;
}

long fp_inv(long a, long p) {
  long inv = 1, base = ((a % p) + p) % p, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return inv;
}

/* exact inverse by Gauss-Jordan over Q; throws if singular */
QMat qinverse(const Mat& a) {
  int n = static_cast<int>(a.size());
  QMat w(n, QVec(2 * n, 0));
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) w[i][j] = mpq_class(a[i][j]);
    w[i][n + i] = 1;
  }
  for (int c = 0; c < n; c++) {
    int piv = -1;
    for (int r = c; r < n; r++)
      if (w[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("qinverse: singular matrix");
    std::swap(w[c], w[piv]);
    mpq_class d = w[c][c];
    for (int j = c; j < 2 * n; j++) w[c][j] /= d;
    for (int r = 0; r < n; r++) {
      if (r == c || w[r][c] == 0) continue;
      mpq_class f = w[r][c];
      for (int j = c; j < 2 * n; j++) w[r][j] -= f * w[c][j];
    }
  }
  QMat inv(n, QVec(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) inv[i][j] = w[i][n + j];
  return inv;
}

/* x with x * M = rhs (row-vector convention), via precomputed inv(M) */
QVec qsolve_row(const QMat& minv, const QVec& rhs) {
  int n = static_cast<int>(minv.size());
  QVec x(n, 0);
  for (int j = 0; j < n; j++)
    for (int i = 0; i < n; i++) x[j] += rhs[i] * minv[i][j];
  return x;
}

Vec integral(const QVec& q) {
  Vec v(q.size());
  for (size_t i = 0; i < q.size(); i++) {
    if (q[i].get_den() != 1) throw std::logic_error("expected integral coordinates");
    v[i] = q[i].get_num();
  }
  return v;
}

/* row-style Hermite form of a full-rank lattice: n rows, upper triangular,
 * positive diagonal, entries above each pivot reduced into [0, pivot) */
Mat hnf_rows(Mat rows, int n) {
  int m = static_cast<int>(rows.size());
  int r = 0;
  for (int c = 0; c < n && r < m; c++) {
    for (;;) {
      int piv = -1;
      for (int i = r; i < m; i++)
        if (rows[i][c] != 0 && (piv < 0 || abs(rows[i][c]) < abs(rows[piv][c])))
          piv = i;
      if (piv < 0) break;
      std::swap(rows[r], rows[piv]);
      bool clean = true;
      for (int i = r + 1; i < m; i++) {
        if (rows[i][c] == 0) continue;
        BigInt q = rows[i][c] / rows[r][c];
        for (int j = 0; j < n; j++) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (int j = 0; j < n; j++) rows[r][j] = -rows[r][j];
    for (int i = 0; i < r; i++) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q != 0)
        for (int j = 0; j < n; j++) rows[i][j] -= q * rows[r][j];
    }
    r++;
  }
  if (r != n) throw std::logic_error("hnf: rank deficient lattice");
  rows.resize(n);
  return rows;
}

long fp_of(const BigInt& v, long p) {
  BigInt m = v % p;
  if (m < 0) m += p;
  return m.get_si();
}

/* kernel basis of x -> x*A over F_p (x a row vector of length nrows) */
FpMat fp_kernel(const FpMat& a, int nrows, int ncols, long p) {
  /* transpose and row-reduce: solve t * x = 0 for x in F_p^nrows */
  FpMat t(ncols, FpVec(nrows, 0));
  for (int i = 0; i < nrows; i++)
    for (int j = 0; j < ncols; j++) t[j][i] = a[i][j];
  std::vector<int> pivot_col(ncols, -1);
  std::vector<bool> used(nrows, false);
  for (int row = 0; row < ncols; row++) {
    int pc = -1;
    for (int c = 0; c < nrows; c++)
      if (!used[c] && t[row][c] % p != 0) {
        pc = c;
        break;
      }
    if (pc < 0) continue;
    used[pc] = true;
    pivot_col[row] = pc;
    long inv = fp_inv(t[row][pc], p);
    for (int c = 0; c < nrows; c++) t[row][c] = (t[row][c] % p + p) % p * inv % p;
    for (int r2 = 0; r2 < ncols; r2++) {
      if (r2 == row) continue;
      long f = ((t[r2][pc] % p) + p) % p;
      if (!f) continue;
      for (int c = 0; c < nrows; c++)
        t[r2][c] = ((t[r2][c] - f * t[row][c]) % p + p) % p;
    }
  }
  FpMat kernel;
  for (int c = 0; c < nrows; c++) {
    if (used[c]) continue;
    FpVec k(nrows, 0);
    k[c] = 1;
    for (int row = 0; row < ncols; row++)
      if (pivot_col[row] >= 0) k[pivot_col[row]] = (p - t[row][c] % p) % p;
    kernel.push_back(std::move(k));
  }
  return kernel;
}

/* online row echelon over F_p: rows keep distinct pivot columns; membership
 * of v in the span is decided by forward reduction */
struct Echelon {
  FpMat rows;
  std::vector<int> pivots;
};

FpVec echelon_reduce(const Echelon& ech, FpVec v, long p) {
  for (size_t r = 0; r < ech.rows.size(); r++) {
    long f = ((v[static_cast<size_t>(ech.pivots[r])] % p) + p) % p;
    if (!f) continue;
    for (size_t c = 0; c < v.size(); c++)
      v[c] = ((v[c] - f * ech.rows[r][c]) % p + p) % p;
  }
  return v;
}

void echelon_add(Echelon& ech, FpVec v, long p) {
  v = echelon_reduce(ech, std::move(v), p);
  int pc = -1;
  for (size_t c = 0; c < v.size(); c++)
    if (v[c] % p != 0) {
      pc = static_cast<int>(c);
      break;
    }
  if (pc < 0) return;
  long inv = fp_inv(v[static_cast<size_t>(pc)], p);
  for (auto& x : v) x = (x % p + p) % p * inv % p;
  ech.rows.push_back(std::move(v));
  ech.pivots.push_back(pc);
}

bool is_zero_vec(const FpVec& v, long p) {
  for (long x : v)
    if (x % p != 0) return false;
  return true;
}

/* ---- the working order: basis rows over the power basis, denom p^e ---- */

struct Order {
  int n;
  Mat basis;
  long long e = 0;
};

/* table[i][j] = coordinates of b_i * b_j in the order basis (exact integers) */
std::vector<std::vector<Vec>> mult_table(const Order& O, const IntPoly& F, const BigInt& p) {
  int n = O.n;
  /* theta^a reduced mod F for a < 2n-1, power-basis coordinates */
  std::vector<Vec> tp(2 * n - 1, Vec(n, 0));
  IntPoly cur = IntPoly::constant(1);
  for (int a = 0; a < 2 * n - 1; a++) {
    for (int j = 0; j <= cur.degree(); j++)
      tp[static_cast<size_t>(a)][static_cast<size_t>(j)] = cur.coeff(j);
    cur = (cur * IntPoly::x()).divrem_monic(F).second;
  }
  QMat minv = qinverse(O.basis);
  BigInt den = pow_bigint(p, static_cast<unsigned long>(O.e));
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
  for (int i = 0; i < n; i++) {
    for (int j = i; j < n; j++) {
      Vec prod(n, 0);
      for (int a = 0; a < n; a++) {
        if (O.basis[i][a] == 0) continue;
        for (int b = 0; b < n; b++) {
          if (O.basis[j][b] == 0) continue;
          BigInt c = O.basis[i][a] * O.basis[j][b];
          const Vec& red = tp[static_cast<size_t>(a + b)];
          for (int k = 0; k < n; k++)
            if (red[k] != 0) prod[k] += c * red[k];
        }
      }
      /* b_i b_j = (prod / p^{2e}) on the power basis; coordinates x solve
       * x * basis = prod / p^e */
      QVec rhs(n);
      for (int k = 0; k < n; k++) rhs[k] = mpq_class(prod[k]) / mpq_class(den);
      table[i][j] = integral(qsolve_row(minv, rhs));
      if (j != i) table[j][i] = table[i][j];
    }
  }
  return table;
}

FpVec fp_mul_elems(const std::vector<std::vector<Vec>>& table, const FpVec& u,
                   const FpVec& v, long p) {
  int n = static_cast<int>(u.size());
  FpVec out(n, 0);
  for (int i = 0; i < n; i++) {
    if (!u[i]) continue;
    for (int j = 0; j < n; j++) {
      if (!v[j]) continue;
      long c = u[i] * v[j] % p;
      if (!c) continue;
      const Vec& t = table[i][j];
      for (int k = 0; k < n; k++)
        if (t[k] != 0) out[k] = (out[k] + c * fp_of(t[k], p)) % p;
    }
  }
  return out;
}

FpVec fp_pow_elem(const std::vector<std::vector<Vec>>& table, FpVec base,
                  const FpVec& unit, BigInt exp, long p) {
  FpVec acc = unit;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) acc = fp_mul_elems(table, acc, base, p);
    base = fp_mul_elems(table, base, base, p);
    exp >>= 1;
  }
  return acc;
}

/* coordinates of 1 in the order basis, reduced mod p */
FpVec one_coords(const Order& O, const BigInt& p) {
  QMat minv = qinverse(O.basis);
  QVec rhs(O.n, 0);
  rhs[0] = mpq_class(pow_bigint(p, static_cast<unsigned long>(O.e)));
  Vec v = integral(qsolve_row(minv, rhs));
  FpVec out(O.n);
  long pl = p.get_si();
  for (int i = 0; i < O.n; i++) out[i] = fp_of(v[i], pl);
  return out;
}

/* nilradical of O/pO as the kernel of x -> x^(p^m), p^m >= n */
FpMat radical_kernel(const std::vector<std::vector<Vec>>& table, const FpVec& one,
                     int n, long p) {
  BigInt q = 1;
  while (q < n) q *= p;
  FpMat frob(n);
  for (int i = 0; i < n; i++) {
    FpVec e(n, 0);
    e[i] = 1;
    frob[i] = fp_pow_elem(table, e, one, q, p);
  }
  return fp_kernel(frob, n, n, p);
}

long small_prime(const BigInt& p) {
  if (!p.fits_slong_p() || p.get_si() >= (1L << 20))
    throw std::domain_error("oracle: prime too large for dense linear algebra");
  return p.get_si();
}

}  // namespace

PMaximalOrder p_maximal_order(const IntPoly& F, const BigInt& p) {
  if (!F.is_monic() || F.degree() < 1)
    throw std::domain_error("p_maximal_order: monic input of positive degree required");
  if (discriminant(F) == 0)
    throw std::domain_error("p_maximal_order: input must be separable");
  int n = F.degree();
  long pl = small_prime(p);
  Order O{n, identity_mat(n), 0};
  long long index_vp = 0;

  for (int iteration = 0;; iteration++) {
    if (iteration > 200) throw std::logic_error("p_maximal_order: no convergence");
    auto table = mult_table(O, F, p);
    FpVec one = one_coords(O, p);
    FpMat rad = radical_kernel(table, one, n, pl);

    /* radical lattice I (an O-ideal) in order coordinates: lifts + p Z^n */
    Mat irows;
    for (const auto& k : rad) {
      Vec r(n);
      for (int j = 0; j < n; j++) r[j] = k[j];
      irows.push_back(std::move(r));
    }
    for (int i = 0; i < n; i++) {
      Vec r(n, 0);
      r[i] = p;
      irows.push_back(std::move(r));
    }
    Mat R = hnf_rows(std::move(irows), n);
    QMat rinv = qinverse(R);

    /* U = {x in O/pO : x I <= p I}; then (1/p) U spans the multiplier ring
     * over O and dim U is the index gain */
    FpMat constraints(n, FpVec(static_cast<size_t>(n) * n, 0));
    for (int i = 0; i < n; i++) {
      for (int j = 0; j < n; j++) {
        QVec w(n, 0);
        for (int a = 0; a < n; a++) {
          if (R[j][a] == 0) continue;
          const Vec& t = table[i][a];
          for (int k = 0; k < n; k++)
            if (t[k] != 0) w[k] += mpq_class(BigInt(R[j][a] * t[k]));
        }
        Vec coords = integral(qsolve_row(rinv, w));
        for (int k = 0; k < n; k++)
          constraints[i][static_cast<size_t>(j) * n + k] = fp_of(coords[k], pl);
      }
    }
    FpMat U = fp_kernel(constraints, n, n * n, pl);
    if (U.empty()) break;

    index_vp += static_cast<long long>(U.size());
    Mat rows;
    for (int i = 0; i < n; i++) {
      Vec r(n);
      for (int j = 0; j < n; j++) r[j] = O.basis[i][j] * p;
      rows.push_back(std::move(r));
    }
    for (const auto& u : U) {
      Vec r(n, 0);
      for (int i = 0; i < n; i++) {
        if (!u[i]) continue;
        for (int j = 0; j < n; j++) r[j] += BigInt(u[i]) * O.basis[i][j];
      }
      rows.push_back(std::move(r));
    }
    Mat M = hnf_rows(std::move(rows), n);
    long long e = O.e + 1;
    for (;;) {
      if (e == 0) break;
      bool all = true;
      for (int i = 0; i < n && all; i++)
        for (int j = 0; j < n && all; j++)
          if (M[i][j] % p != 0) all = false;
      if (!all) break;
      for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) M[i][j] /= p;
      e--;
    }
    O.basis = std::move(M);
    O.e = e;
  }
  return PMaximalOrder{n, O.basis, O.e, index_vp};
}

long long p_maximal_index(const IntPoly& F, const BigInt& p) {
  return p_maximal_order(F, p).index_vp;
}

namespace {

/* minimal polynomial of c inside the unital algebra (unit E) spanned with it */
FpPoly algebra_minpoly(const std::vector<std::vector<Vec>>& table, const FpVec& E,
                       const FpVec& c, long p) {
  int n = static_cast<int>(c.size());
  std::vector<FpVec> pows;
  pows.push_back(E);
  for (int d = 1; d <= n + 1; d++) {
    pows.push_back(fp_mul_elems(table, pows.back(), c, p));
    FpMat m(pows.begin(), pows.end());
    FpMat ker = fp_kernel(m, d + 1, n, p);
    for (const auto& k : ker) {
      if (k[static_cast<size_t>(d)] == 0) continue;
      long inv = fp_inv(k[static_cast<size_t>(d)], p);
      std::vector<long> coeffs(static_cast<size_t>(d) + 1);
      for (int t = 0; t <= d; t++)
        coeffs[static_cast<size_t>(t)] = k[static_cast<size_t>(t)] * inv % p;
      return FpPoly(p, std::move(coeffs));
    }
  }
  throw std::logic_error("algebra_minpoly: no relation found");
}

/* g(c) inside the unital algebra (unit E) */
FpVec eval_poly_at(const std::vector<std::vector<Vec>>& table, const FpVec& E,
                   const FpPoly& g, const FpVec& c, long p) {
  int n = static_cast<int>(c.size());
  FpVec acc(n, 0);
  for (int i = g.degree(); i >= 0; i--) {
    acc = fp_mul_elems(table, acc, c, p);
    long gc = g.coeff(i);
    if (gc)
      for (int k = 0; k < n; k++) acc[k] = (acc[k] + gc * E[k]) % p;
  }
  return acc;
}

/* s h1 + t h2 = 1 for coprime h1, h2; returns t */
FpPoly bezout_second(const FpPoly& h1, const FpPoly& h2) {
  long p = h1.p();
  FpPoly r0 = h1, r1 = h2;
  FpPoly t0 = FpPoly(p), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r2] = fp_divrem(r0, r1);
    r0 = r1;
    r1 = r2;
    FpPoly t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.degree() != 0)
    throw std::logic_error("bezout: inputs not coprime");
  return t0.scaled(fp_inv(r0.coeff(0), p));
}

}  // namespace

Shape oracle_splitting_shape(const IntPoly& F, const BigInt& p) {
  PMaximalOrder pm = p_maximal_order(F, p);
  int n = pm.n;
  long pl = small_prime(p);
  Order O{n, pm.basis, pm.denom_exp};
  auto table = mult_table(O, F, p);
  FpVec one = one_coords(O, p);
  FpMat rad = radical_kernel(table, one, n, pl);

  /* peel off local components with exact idempotents; a component is local
   * exactly when its Frobenius-fixed space mod radical is one-dimensional */
  std::vector<FpVec> todo = {one};
  Shape shape;
  while (!todo.empty()) {
    FpVec E = todo.back();
    todo.pop_back();

    /* basis of the component E*A */
    Echelon comp;
    for (int i = 0; i < n; i++) {
      FpVec e(n, 0);
      e[i] = 1;
      echelon_add(comp, fp_mul_elems(table, E, e, pl), pl);
    }
    int dim = static_cast<int>(comp.rows.size());

    /* radical of the component */
    Echelon radE;
    for (const auto& r : rad) echelon_add(radE, fp_mul_elems(table, E, r, pl), pl);
    int raddim = static_cast<int>(radE.rows.size());

    /* B = {x in E*A : x^p - x in rad(E*A)}; dim B = raddim + #components */
    FpMat w;
    for (const auto& b : comp.rows) {
      FpVec im = fp_pow_elem(table, b, E, BigInt(pl), pl);
      for (int k = 0; k < n; k++)
        im[static_cast<size_t>(k)] =
            ((im[static_cast<size_t>(k)] - b[static_cast<size_t>(k)]) % pl + pl) % pl;
      w.push_back(echelon_reduce(radE, std::move(im), pl));
    }
    FpMat K = fp_kernel(w, dim, n, pl);
    int rE = static_cast<int>(K.size()) - raddim;
    if (rE < 1) throw std::logic_error("splitting: fixed space smaller than radical");

    if (rE == 1) {
      int f = dim - raddim;
      if (f <= 0 || dim % f != 0)
        throw std::logic_error("local component: inconsistent dimensions");
      shape.push_back({dim / f, f});
      continue;
    }

    /* pick a fixed-space element outside rad + F_p E: its minimal polynomial
     * is a product of >= 2 coprime linear powers, so Bezout yields an exact
     * idempotent with no lifting step */
    Echelon degenerate = radE;
    echelon_add(degenerate, E, pl);
    FpVec b;
    bool found = false;
    for (const auto& k : K) {
      FpVec cand(n, 0);
      for (int i = 0; i < dim; i++) {
        if (!k[static_cast<size_t>(i)]) continue;
        for (int c = 0; c < n; c++)
          cand[static_cast<size_t>(c)] =
              (cand[static_cast<size_t>(c)] +
               k[static_cast<size_t>(i)] * comp.rows[static_cast<size_t>(i)][static_cast<size_t>(c)]) %
              pl;
      }
      if (!is_zero_vec(echelon_reduce(degenerate, cand, pl), pl)) {
        b = std::move(cand);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("splitting: no separating element in fixed space");

    FpPoly mp = algebra_minpoly(table, E, b, pl);
    auto fac = fp_factor(mp);
    if (fac.size() < 2)
      throw std::logic_error("splitting: separating element has local minimal polynomial");
    FpPoly h1 = FpPoly::constant(pl, 1);
    for (int k = 0; k < fac[0].mult; k++) h1 = h1 * fac[0].f;
    FpPoly h2 = fp_divrem(mp, h1).first;
    FpPoly t = bezout_second(h1, h2);
    FpVec E1 = eval_poly_at(table, E, t * h2, b, pl);
    FpVec E2(n);
    for (int k = 0; k < n; k++)
      E2[static_cast<size_t>(k)] =
          ((E[static_cast<size_t>(k)] - E1[static_cast<size_t>(k)]) % pl + pl) % pl;
    if (fp_mul_elems(table, E1, E1, pl) != E1 || is_zero_vec(E1, pl) || is_zero_vec(E2, pl))
      throw std::logic_error("splitting: idempotent construction failed");
    todo.push_back(std::move(E1));
    todo.push_back(std::move(E2));
  }

  std::sort(shape.begin(), shape.end());
  long total = 0;
  for (const auto& br : shape) total += br.e * br.f;
  if (total != n) throw std::logic_error("splitting shape does not sum to the degree");
  return shape;
}

}  // namespace oreforge
