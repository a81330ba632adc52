#include "drinfeld/residue.hpp"

namespace drinfeld {

Fe residue_at_infinity(const PolyFe& a, const PolyFe& b) {
  if (b.is_zero()) throw DomainError("residue of a/b with b = 0");
  const Fe zero = zero_like(b.lc());
  if (a.is_zero()) return zero;
  const int da = a.degree(), db = b.degree();
  // a(1/u)/b(1/u) = u^{db-da} ra(u)/rb(u), with ra, rb the reversed polynomials.
  // f dt = -u^{db-da-2} ra/rb du, so we need coefficient k = da-db+1 of ra/rb.
  const int k = da - db + 1;
  if (k < 0) return zero;
  std::vector<Fe> ra(a.coeffs().rbegin(), a.coeffs().rend());
  std::vector<Fe> rb(b.coeffs().rbegin(), b.coeffs().rend());
  // power series division to order k
  const Fe inv0 = inverse(rb[0]);
  std::vector<Fe> quo(k + 1, zero);
  for (int n = 0; n <= k; ++n) {
    Fe acc = n < static_cast<int>(ra.size()) ? ra[n] : zero;
    for (int i = 1; i <= n && i < static_cast<int>(rb.size()); ++i) acc -= rb[i] * quo[n - i];
    quo[n] = acc * inv0;
  }
  return -quo[k];
}

Fe residue_pairing_lifts(const PolyFe& n, const PolyFe& a, const PolyFe& b) { return residue_at_infinity(a * b, n); }

Fe residue_pairing(const ModFe& a, const ModFe& b) {
  if (!(a.modulus() == b.modulus())) throw DomainError("residue pairing: mismatched moduli");
  return residue_pairing_lifts(a.modulus(), a.value(), b.value());
}

Matrix<Fe> residue_gram(const PolyFe& n) {
  const int d = n.degree();
  const Fe zero = zero_like(n.lc());
  Matrix<Fe> g(d, d, zero);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = residue_at_infinity(PolyFe::monomial(one_like(zero), i + j), n);
  return g;
}

}  // namespace drinfeld
