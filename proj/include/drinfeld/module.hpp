#ifndef DRINFELD_MODULE_HPP
#define DRINFELD_MODULE_HPP

#include <optional>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/field.hpp"
#include "drinfeld/ore.hpp"
#include "drinfeld/poly.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

// x^e for the ring types used here
template <class R>
R pow_ring(const R& x, std::uint64_t e) {
  R r = one_like(x);
  R b = x;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

// Drinfeld module with trivialized line bundle over a ring R:
// Phi_t = theta + alpha_1 tau + ... + alpha_r tau^r, alpha_r a unit.
template <class R>
class DrinfeldModule {
 public:
  DrinfeldModule() = default;

  // alphas = {alpha_1, ..., alpha_r}
  static DrinfeldModule make(const R& theta, const std::vector<R>& alphas) {
    if (alphas.empty()) throw DomainError("Drinfeld module of rank 0");
    if (alphas.size() > 2) throw UnsupportedError("only ranks 1 and 2 are supported");
    if (!ring_is_unit(alphas.back())) throw DomainError("leading coefficient alpha_r must be a unit");
    DrinfeldModule m;
    std::vector<R> c{theta};
    c.insert(c.end(), alphas.begin(), alphas.end());
    m.phi_t_ = OrePoly<R>(std::move(c), theta);
    m.rank_ = static_cast<int>(alphas.size());
    if (m.phi_t_.degree() != m.rank_) throw DomainError("leading coefficient alpha_r must be a unit");
    return m;
  }
  static DrinfeldModule carlitz(const R& theta) { return make(theta, {one_like(theta)}); }

  int rank() const { return rank_; }
  R theta() const { return phi_t_.coeff(0); }
  R alpha(int i) const { return phi_t_.coeff(static_cast<std::size_t>(i)); }
  const OrePoly<R>& phi_t() const { return phi_t_; }

  // Phi_a = a(Phi_t) for a in A = F_q[t]; Horner in R{tau}.
  OrePoly<R> phi(const PolyFe& a, std::size_t maxdeg = OrePoly<R>::kNoCap) const {
    const R like = theta();
    OrePoly<R> acc(like);
    for (int i = a.degree(); i >= 0; --i) {
      acc = OrePoly<R>::mul_trunc(acc, phi_t_, maxdeg);
      acc += OrePoly<R>::constant(embed(a.coeffs()[static_cast<std::size_t>(i)], like));
    }
    return acc;
  }

 private:
  OrePoly<R> phi_t_;
  int rank_ = 0;
};

template <class R>
R j_invariant(const DrinfeldModule<R>& E) {
  if (E.rank() != 2) throw DomainError("j-invariant needs rank 2");
  const std::uint64_t q = q_of(E.theta());
  return pow_ring(E.alpha(1), q + 1) * ring_inverse(E.alpha(2));
}

// Phi^{E^D}_t = theta - alpha_1 alpha_2^{-1} tau + alpha_2^{-q} tau^2
template <class R>
DrinfeldModule<R> dual(const DrinfeldModule<R>& E) {
  if (E.rank() != 2) throw DomainError("dual needs rank 2");
  R inv2 = ring_inverse(E.alpha(2));
  return DrinfeldModule<R>::make(E.theta(), {-(E.alpha(1) * inv2), frob(inv2)});
}

// Phi^F_t u == u Phi^E_t
template <class R>
bool hom_check(const R& u, const DrinfeldModule<R>& E, const DrinfeldModule<R>& F) {
  if (E.rank() != F.rank()) return false;
  OrePoly<R> U = OrePoly<R>::constant(u);
  return F.phi_t() * U == U * E.phi_t();
}

// The module F with F = u E u^{-1}: (alpha_1 u^{1-q}, alpha_2 u^{1-q^2}).
template <class R>
DrinfeldModule<R> conjugate(const DrinfeldModule<R>& E, const R& u) {
  R uq = frob(u);
  std::vector<R> a{E.alpha(1) * u * ring_inverse(uq)};
  if (E.rank() == 2) a.push_back(E.alpha(2) * u * ring_inverse(frob(uq)));
  return DrinfeldModule<R>::make(E.theta(), a);
}

template <class R>
struct HStructure {
  DrinfeldModule<R> module;
  R H;
};

// H^{q-1} == -alpha_2 and H a unit
template <class R>
bool is_valid(const HStructure<R>& h) {
  const std::uint64_t q = q_of(h.H);
  return ring_is_unit(h.H) && pow_ring(h.H, q - 1) == -h.module.alpha(2);
}

// Phi^{E^D}_t H == H Phi^E_t
template <class R>
bool autoduality_check(const HStructure<R>& h) {
  return hom_check(h.H, h.module, dual(h.module));
}

// The torsor action [c]H = c^{-1} H for c in F_q^x.
template <class R>
HStructure<R> act(const Fe& c, const HStructure<R>& h) {
  return {h.module, embed(c.inverse(), h.H) * h.H};
}

// Over a finite field: H with H^{q-1} = -alpha_2, if one exists in the field.
std::optional<HStructure<Fe>> h_structure_find(const DrinfeldModule<Fe>& E);
// The exponent criterion (-alpha_2)^{(Q-1)/(q-1)} == 1.
bool h_structure_exists(const DrinfeldModule<Fe>& E);
// Over A((x)): x^{v/(q-1)} times the (q-1)-th root of -alpha_2 x^{-v} that is
// 1 mod x, so H = x^{v/(q-1)} (1 + O(x)). None if v is not divisible by q-1
// or the leading coefficient of -alpha_2 is not 1.
std::optional<HStructure<SeriesA>> h_structure_find(const DrinfeldModule<SeriesA>& E);

}  // namespace drinfeld

#endif  // DRINFELD_MODULE_HPP
