#ifndef DRINFELD_MOTIVE_HPP
#define DRINFELD_MOTIVE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "drinfeld/matrix.hpp"
#include "drinfeld/modring.hpp"
#include "drinfeld/module.hpp"

namespace drinfeld {

PolyFe lift_poly(const PolyFe& a, const FieldPtr& L);
// distinct monic irreducible factors, by trial division
std::vector<PolyFe> prime_factors(const PolyFe& n);
// every element of A/(n), in index order of the coefficient vector
std::vector<ModFe> quotient_elements(const PolyFe& n);
// a in (A/(n))^x
bool is_unit_mod(const ModFe& a);

// E[n] over K = F_{q^{mM}}
struct TorsionModule {
  DrinfeldModule<Fe> module;  // over k
  PolyFe n;
  FieldPtr field;
  unsigned M = 0;
  OrePoly<Fe> phi_t;       // Phi_t with coefficients in K
  std::vector<Fe> points;  // sorted by index
  std::vector<Fe> basis;   // A/(n)-basis

  Fe t_action(const Fe& P) const { return ore_eval(phi_t, P); }
  Fe act(const PolyFe& a, const Fe& P) const;  // Phi_a(P)
  bool contains(const Fe& P) const;
};

// nullopt unless all q^{r deg n} points are K-rational
std::optional<TorsionModule> torsion_points_over(const DrinfeldModule<Fe>& E, const PolyFe& n, const FieldPtr& K, unsigned M);
// smallest M <= maxdeg; n(theta) = 0 is rejected
TorsionModule torsion_points(const DrinfeldModule<Fe>& E, const PolyFe& n, unsigned maxdeg = 12);

// P generates a free A/(n)-submodule: Phi_{n/pi}(P) != 0 for every prime pi | n
bool is_free_point(const TorsionModule& T, const Fe& P);
// Gamma_1(n)-structures C[n] -> E[n], each given by the image of C.basis[0]
std::vector<Fe> gamma1_structures(const TorsionModule& C, const TorsionModule& E);

// M(E)/n with basis m_i = tau^i: tau(sum c_i m_i) = sum sigma(c_i) tau(m_i),
// tau(m_i) = sum_j tau[i][j] m_j.
struct MotiveModN {
  FieldPtr k;
  PolyFe n;  // over F_q
  unsigned rank = 0;
  std::vector<std::vector<ModFe>> tau;

  std::vector<ModFe> apply(const std::vector<ModFe>& v) const;
  MotiveModN base_change(const FieldPtr& K) const;
  ModFe elem(const PolyFe& c) const;  // c in k[t] reduced mod n
};

MotiveModN motive_mod_n(const DrinfeldModule<Fe>& E, const PolyFe& n);
MotiveModN carlitz_motive(const Fe& theta, const PolyFe& n);
// wedge^2: tau(1) = (theta - t) alpha_2^{-1}
MotiveModN det_motive(const MotiveModN& mot, const DrinfeldModule<Fe>& E);

struct EtaleFixed {
  FieldPtr field;
  unsigned M = 0;
  unsigned rank = 0;
  PolyFe n;
  std::vector<std::vector<ModFe>> elements;  // every tau-fixed vector
  std::vector<std::vector<ModFe>> basis;     // A/(n)-basis
};

std::optional<EtaleFixed> etale_fixed_over(const MotiveModN& mot, const FieldPtr& K, unsigned M);
EtaleFixed etale_fixed(const MotiveModN& mot, unsigned maxdeg = 12);

// <e, f>: the b in A/(n) with Res(n^{-1} a b dt) = f(Phi_a(e)) for all a
ModFe boeckle_pairing(const TorsionModule& T, const Fe& e, const std::vector<ModFe>& f);

struct BoeckleGram {
  Matrix<ModFe> gram;  // <T.basis[i], fixed.basis[j]>
  ModFe det;
  bool perfect = false;  // det a unit of A/(n)
};
BoeckleGram boeckle_duality(const TorsionModule& T, const EtaleFixed& fixed);

// Everything the h-structure Weil pairing needs, over one field K.
struct WeilContext {
  DrinfeldModule<Fe> E;
  PolyFe n;
  FieldPtr K;
  unsigned M = 0;
  TorsionModule Et, Ct;
  EtaleFixed ME, MC;
  Fe lambda0;               // generator of C[n]
  std::vector<ModFe> z0;    // generator of M(C)_et
  ModFe r0;                 // <lambda0, z0>_C, a unit
  ModFe wedge_fg;           // f0 g1 - f1 g0 for the basis (f, g) of M(E)_et
  std::map<std::uint64_t, std::pair<ModFe, ModFe>> pair_fg;  // point index -> (<P,f>, <P,g>)
};

// Smallest M <= maxdeg over which E[n], C[n] and both fixed modules are full.
WeilContext weil_setup(const DrinfeldModule<Fe>& E, const PolyFe& n, unsigned maxdeg = 12);

// f_H(P ^ Q) in C[n]
Fe weil_pairing(const WeilContext& ctx, const Fe& H, const Fe& P, const Fe& Q);
// psi(z0) in A/(n): the functional on M(C)_et that f_H(P ^ Q) must realize
ModFe weil_functional(const WeilContext& ctx, const Fe& H, const Fe& P, const Fe& Q);

// mu_H(1) for the Gamma_1-structure lambda0 -> P0: the class of Q with
// f_H(P0 ^ Q) = lambda0, as the smallest-index point of Q + A P0.
Fe mu_from_h(const WeilContext& ctx, const Fe& H, const Fe& P0);
Fe coset_representative(const TorsionModule& T, const Fe& Q, const Fe& P0);

// A seeded search for a rank-2 module over F_{q^m} with an h-structure whose
// Weil data splits over a small extension.
struct WeilSample {
  DrinfeldModule<Fe> E;
  Fe H;
  WeilContext ctx;
};
std::vector<WeilSample> sample_weil_modules(const FieldPtr& fq, unsigned m, const PolyFe& n, std::uint64_t seed, unsigned count,
                                            unsigned maxdeg = 8);

}  // namespace drinfeld

#endif  // DRINFELD_MOTIVE_HPP
