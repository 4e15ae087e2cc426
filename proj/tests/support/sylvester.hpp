#pragma once
/* Independent resultant oracle: Sylvester matrix determinant via fraction-free
 * (Bareiss) elimination.  Deliberately shares no code with the production
 * subresultant routine. */

#include <vector>

#include "oreforge/arith.hpp"

namespace oreforge::testsupport {

inline BigInt bareiss_det(std::vector<std::vector<BigInt>> M) {
  const size_t k = M.size();
  if (k == 0) return 1;
  int sign = 1;
  BigInt prev(1);
  for (size_t i = 0; i < k; i++) {
    size_t piv = i;
    while (piv < k && M[piv][i] == 0) piv++;
    if (piv == k) return 0;
    if (piv != i) {
      std::swap(M[piv], M[i]);
      sign = -sign;
    }
    for (size_t r = i + 1; r < k; r++)
      for (size_t c = i + 1; c < k; c++) {
        BigInt num = M[r][c] * M[i][i] - M[r][i] * M[i][c];
        BigInt q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw std::logic_error("bareiss: inexact step");
        M[r][c] = q;
      }
    prev = M[i][i];
  }
  return M[k - 1][k - 1] * sign;
}

inline BigInt sylvester_resultant(const IntPoly& A, const IntPoly& B) {
  const int m = A.degree(), n = B.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  if (m == 0) return pow_bigint(A.leading(), n);
  if (n == 0) return pow_bigint(B.leading(), m);
  const int k = m + n;
  std::vector<std::vector<BigInt>> M(k, std::vector<BigInt>(k, BigInt(0)));
  for (int r = 0; r < n; r++)
    for (int j = 0; j <= m; j++) M[r][r + j] = A.coeff(m - j);
  for (int r = 0; r < m; r++)
    for (int j = 0; j <= n; j++) M[n + r][r + j] = B.coeff(n - j);
  return bareiss_det(std::move(M));
}

}  // namespace oreforge::testsupport
