#ifndef DRINFELD_DERHAM_HPP
#define DRINFELD_DERHAM_HPP

#include <functional>
#include <string>
#include <vector>

#include "drinfeld/module.hpp"
#include "drinfeld/tate_drinfeld.hpp"

namespace drinfeld {

// b1 tau + b2 tau^2 in DR(E, G_a), i.e. a biderivation mod strictly inner ones.
template <class R>
struct DRElement {
  R b1, b2;
  friend bool operator==(const DRElement& a, const DRElement& b) { return a.b1 == b.b1 && a.b2 == b.b2; }
  friend DRElement operator+(const DRElement& a, const DRElement& b) { return {a.b1 + b.b1, a.b2 + b.b2}; }
  friend DRElement operator*(const R& s, const DRElement& a) { return {s * a.b1, s * a.b2}; }
};

// A derivation of the base ring, as a black box.
template <class R>
struct Derivation {
  std::function<R(const R&)> apply;
  R operator()(const R& b) const { return apply(b); }
};

template <class R>
Derivation<R> zero_derivation() {
  return {[](const R& b) { return zero_like(b); }};
}

// b D
template <class R>
Derivation<R> scaled(const R& b, Derivation<R> D) {
  return {[b, D](const R& y) { return b * D(y); }};
}

inline Derivation<SeriesA> d_dx() {
  return {[](const SeriesA& s) { return s.derivative(); }};
}

// Leibniz on consecutive pairs and D(b^q) = 0
template <class R>
bool derivation_check(const Derivation<R>& D, const std::vector<R>& samples) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const R& f = samples[i];
    const R& g = samples[(i + 1) % samples.size()];
    if (!(D(f * g) == f * D(g) + g * D(f))) return false;
    if (!(D(f + g) == D(f) + D(g))) return false;
    if (!ring_is_zero(D(frob(f)))) return false;
  }
  return true;
}

// Which G a biderivation E -> G lands in
enum class Target { Ga, Carlitz };

template <class R>
OrePoly<R> target_phi_t(Target G, const DrinfeldModule<R>& E) {
  if (G == Target::Ga) return OrePoly<R>::constant(E.theta());
  return OrePoly<R>({E.theta(), one_like(E.theta())}, E.theta());
}

template <class R>
OrePoly<R> target_phi(Target G, const DrinfeldModule<R>& E, const PolyFe& a) {
  if (G == Target::Ga) return OrePoly<R>::constant(a.eval(E.theta()));
  return DrinfeldModule<R>::carlitz(E.theta()).phi(a);
}

// delta_{t^n} from delta_t by delta_{t^{n+1}} = Phi^G_t delta_{t^n} + delta_t Phi^E_{t^n},
// extended F_q-linearly.
template <class R>
OrePoly<R> biderivation_at(const DrinfeldModule<R>& E, Target G, const OrePoly<R>& delta_t, const PolyFe& a) {
  OrePoly<R> gt = target_phi_t(G, E);
  OrePoly<R> acc(E.theta());
  OrePoly<R> dn(E.theta());  // delta_1 = 0
  OrePoly<R> phin = OrePoly<R>::constant(one_like(E.theta()));
  for (int n = 0; n <= a.degree(); ++n) {
    if (!a.coeff(n).is_zero()) acc += embed(a.coeff(n), E.theta()) * dn;
    dn = gt * dn + delta_t * phin;
    phin = E.phi_t() * phin;
  }
  return acc;
}

// Cocycle rule delta_{ab} = Phi^G_a delta_b + delta_a Phi^E_b. With der0 set,
// delta_t must also have no tau^0 term.
template <class R>
bool biderivation_check(const DrinfeldModule<R>& E, Target G, const OrePoly<R>& delta_t, const PolyFe& a, const PolyFe& b,
                        bool der0 = false) {
  if (der0 && !ring_is_zero(delta_t.coeff(0))) return false;
  auto lhs = biderivation_at(E, G, delta_t, a * b);
  auto rhs = target_phi(G, E, a) * biderivation_at(E, G, delta_t, b) + biderivation_at(E, G, delta_t, a) * E.phi(b);
  return lhs == rhs;
}

// delta^(f)_t = f Phi^E_t - Phi^G_t f
template <class R>
OrePoly<R> inner_biderivation(const DrinfeldModule<R>& E, Target G, const OrePoly<R>& f) {
  return f * E.phi_t() - target_phi_t(G, E) * f;
}

// Reduce delta_t in tau B{tau} to b1 tau + b2 tau^2 by subtracting strictly
// inner biderivations c tau^k (k >= 1), top degree first. Target G_a.
template <class R>
DRElement<R> dr_reduce(const DrinfeldModule<R>& E, OrePoly<R> delta_t) {
  if (E.rank() != 2) throw DomainError("de Rham module: rank 2 only");
  if (!ring_is_zero(delta_t.coeff(0))) throw DomainError("dr_reduce: delta_t has a tau^0 term");
  while (delta_t.degree() > 2) {
    const std::size_t n = static_cast<std::size_t>(delta_t.degree());
    const std::size_t k = n - 2;
    R a2k = E.alpha(2);
    for (std::size_t i = 0; i < k; ++i) a2k = frob(a2k);
    R c = delta_t.coeff(n) * ring_inverse(a2k);
    auto f = c * OrePoly<R>::tau(E.theta(), k);
    // delta^(f)_t = f Phi_t - theta f
    delta_t -= f * E.phi_t() - OrePoly<R>::constant(E.theta()) * f;
    // the top coefficient is now zero up to precision; drop it
    std::vector<R> cs = delta_t.coeffs();
    if (cs.size() > n) cs.resize(n);
    delta_t = OrePoly<R>(std::move(cs), E.theta());
  }
  return {delta_t.coeff(1), delta_t.coeff(2)};
}

// i(dX) = alpha1 tau + alpha2 tau^2
template <class R>
DRElement<R> hodge_i(const DrinfeldModule<R>& E) {
  if (E.rank() != 2) throw DomainError("hodge_i: rank 2 only");
  return {E.alpha(1), E.alpha(2)};
}

// coefficient of d/dY: alpha2^{-1} (alpha2 b1 - alpha1 b2)
template <class R>
R hodge_pi(const DrinfeldModule<R>& E, const DRElement<R>& phi) {
  if (E.rank() != 2) throw DomainError("hodge_pi: rank 2 only");
  return ring_inverse(E.alpha(2)) * (E.alpha(2) * phi.b1 - E.alpha(1) * phi.b2);
}

template <class R>
DRElement<R> nabla(const Derivation<R>& D, const DRElement<R>& phi) {
  return {D(phi.b1), D(phi.b2)};
}

// pi(nabla_D(i(dX)))
template <class R>
R kodaira_spencer(const DrinfeldModule<R>& E, const Derivation<R>& D) {
  return hodge_pi(E, nabla(D, hodge_i(E)));
}

template <class R>
R ks_autodual(const HStructure<R>& h, const Derivation<R>& D) {
  return ring_inverse(h.H) * kodaira_spencer(h.module, D);
}

// (phi1 psi2 - psi1 phi2) H^{-q}
template <class R>
R derham_pairing(const HStructure<R>& h, const DRElement<R>& phi, const DRElement<R>& psi) {
  const R Hq = frob(h.H);
  return (phi.b1 * psi.b2 - psi.b1 * phi.b2) * ring_inverse(Hq);
}

// pr = H^{-1} pi, the projection twisted by autoduality
template <class R>
R hodge_pi_autodual(const HStructure<R>& h, const DRElement<R>& phi) {
  return ring_inverse(h.H) * hodge_pi(h.module, phi);
}

// <dX, phi> == pr(phi) on phi in {tau, tau^2, H tau, i(dX)} plus extra
template <class R>
bool hodge_compatibility_check(const HStructure<R>& h, const std::vector<DRElement<R>>& extra = {}) {
  const R zero = zero_like(h.H), one = one_like(h.H);
  std::vector<DRElement<R>> phis{{one, zero}, {zero, one}, {h.H, zero}, hodge_i(h.module)};
  phis.insert(phis.end(), extra.begin(), extra.end());
  const DRElement<R> dX = hodge_i(h.module);
  for (const auto& phi : phis)
    if (!(derham_pairing(h, dX, phi) == hodge_pi_autodual(h, phi))) return false;
  return true;
}

// Unit of A[[x]]: valuation 0, constant leading digit in F_q^x
bool is_power_series_unit(const SeriesA& s);
// s = x^v * (unit of A[[x]])
bool is_x_power_times_unit(const SeriesA& s, long v);

struct CuspDeRham {
  long N = 0;
  CuspData cd;
  SeriesA pi_of_i;         // pi(dX), should vanish
  SeriesA pr_H_tau;        // <dX, b_h tau> via pr, should be 1
  SeriesA coord_det;       // det [dX | eta] = x^2 l a2
  SeriesA ks;              // KS(d/dx) = l
  SeriesA ks_dual;         // b_h^{-1} l
  SeriesA pairing_dX_eta;  // x^2 l a2 b_h^{-q}
  SeriesA gram[2][2];      // pairing on {dX, eta}
  bool nabla_identity = false;  // (nabla_{-x^2 d/dx} + x^2 a2'/a2) dX = eta
};

CuspDeRham cusp_derham(const FieldPtr& fq, long N);

}  // namespace drinfeld

#endif  // DRINFELD_DERHAM_HPP
