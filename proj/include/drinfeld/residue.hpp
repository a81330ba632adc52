#ifndef DRINFELD_RESIDUE_HPP
#define DRINFELD_RESIDUE_HPP

#include "drinfeld/matrix.hpp"
#include "drinfeld/modring.hpp"
#include "drinfeld/poly.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

// Res at infinity of (a/b) dt. Convention: u = 1/t, dt = -u^{-2} du, take the
// coefficient of u^{-1} du. So Res(dt/t) = -1.
Fe residue_at_infinity(const PolyFe& a, const PolyFe& b);

// Res(n^{-1} a b dt) on A/(n), computed from arbitrary lifts.
Fe residue_pairing_lifts(const PolyFe& n, const PolyFe& a, const PolyFe& b);
Fe residue_pairing(const ModFe& a, const ModFe& b);

// Gram matrix on the monomial basis 1, t, ..., t^{d-1} of A/(n). Hankel.
Matrix<Fe> residue_gram(const PolyFe& n);

// s with s^{q-1} = u and s = 1 mod x, by Newton iteration
//   s <- 2s - u s^{2-q},
// which works because d/ds s^{q-1} = -s^{q-2} is a unit. u must have
// valuation 0 and constant coefficient 1; precision is that of u (or cap).
template <class R>
Series<R> series_root_q_minus_1(const Series<R>& u, long cap = Series<R>::kExact) {
  const std::uint64_t q = q_of(u.proto());
  if (u.is_zero() || u.valuation() != 0) throw DomainError("root_{q-1}: argument must be a unit power series");
  if (!(u.leading() == one_like(u.proto()))) throw DomainError("root_{q-1}: constant coefficient must be 1");
  const long N = std::min(u.precision(), Series<R>::clamp(cap));
  if (N >= Series<R>::kExact) throw PrecisionError("root_{q-1} of an exact series needs a precision cap");
  Series<R> v = u.truncate(N);
  if (q == 2) return v;
  Series<R> s = Series<R>::constant(one_like(u.proto()), N);
  for (int iter = 0; iter < 80; ++iter) {
    Series<R> sp = pow(s, q - 2).truncate(N);
    Series<R> next = (s + s - v * sp.inverse(N)).truncate(N);
    if (next.identical(s)) break;
    s = std::move(next);
  }
  if (!(pow(s, q - 1) == v)) throw DomainError("root_{q-1}: Newton iteration did not converge");
  return s;
}

}  // namespace drinfeld

#endif  // DRINFELD_RESIDUE_HPP
