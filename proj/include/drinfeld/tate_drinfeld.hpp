#ifndef DRINFELD_TATE_DRINFELD_HPP
#define DRINFELD_TATE_DRINFELD_HPP

#include <string>
#include <vector>

#include "drinfeld/module.hpp"
#include "drinfeld/ore.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

// An additive series sum_k e_k X^{q^k} is stored as the Ore polynomial
// sum_k e_k tau^k over A((x)).
using AdditiveSeries = OrePoly<SeriesA>;

// Phi^C_a(1/x), exact.
SeriesA lattice_point(const FieldPtr& fq, const PolyFe& a);

// The lattice exponential mod x^N, through X-degree q^D.
//
// Built one lattice direction at a time: if e_V is the exponential of the
// F_q-span V and w is a new lattice vector then
//   e_{V + F_q w} = e_V - e_V(w)^{1-q} tau e_V.
// Directions w = Phi^C_{t^d}(1/x) for d = 0, 1, ... until the factor
// e_V(w)^{1-q} vanishes mod x^N.
AdditiveSeries exp_lattice(const FieldPtr& fq, long N, std::size_t D);

// Compositional inverse: f_0 = 1, f_k = -sum_{i=1..k} e_i f_{k-i}^{q^i}.
AdditiveSeries exp_inverse(const AdditiveSeries& e, std::size_t D);

// Coefficients 0..maxdeg of f * g in A((x)){tau}, x-digits at or above cap
// dropped. Kept untrimmed: a zero known only mod x^n still says so.
std::vector<SeriesA> ore_mul_capped(const AdditiveSeries& f, const AdditiveSeries& g, std::size_t maxdeg, long cap);

struct TdExpansion {
  long N = 0;           // requested precision
  long working = 0;     // precision the exponential was computed at
  std::size_t D = 0;    // X-degree bound q^D
  AdditiveSeries e;     // e_Lambda
  AdditiveSeries f;     // e_Lambda^{-1}
  std::vector<SeriesA> phi_t;  // e (theta + tau) f, tau^0..tau^D
};

// e, e^{-1} and e (theta + tau) e^{-1}, with guard digits added until the
// result is known mod x^N.
TdExpansion td_expansion(const FieldPtr& fq, long N, std::size_t D = 3);

// The Tate-Drinfeld module over A((x)): Phi_t = theta + a1 tau + a2 tau^2,
// digits mod x^N. Throws if the tau^k coefficients, k >= 3, do not vanish.
DrinfeldModule<SeriesA> td_module(const TdExpansion& td);
DrinfeldModule<SeriesA> td_module(const FieldPtr& fq, long N);

// Phi^Lambda_a = a(Phi^Lambda_t)
OrePoly<SeriesA> td_phi(const FieldPtr& fq, const PolyFe& a, long N);

// all digits at exponents divisible by q-1
bool in_x_q_minus_1(const SeriesA& s, std::uint64_t q);
// a1 in 1 + x^{q-1} A[[x^{q-1}]] and a2 in x^{q-1} A[[x^{q-1}]]^x, mod x^N
bool a1_membership(const SeriesA& a1, std::uint64_t q, long N);
bool a2_membership(const SeriesA& a2, std::uint64_t q, long N);

// e Phi^C_a == Phi^Lambda_a e through tau^D, mod x^N. Phi^Lambda_a is built as
// a(theta + a1 tau + a2 tau^2), so the check is not a tautology.
bool functional_equation_check(const TdExpansion& td, const PolyFe& a);

struct ProductFormulaResult {
  std::string status;  // "pass", "fail" or "unverified"
  bool linear_coefficient = false;
  bool degree = false;
  int roots_checked = 0;
  std::string note;
};

// Partial check of Phi^Lambda_t(X) = tX prod_{beta}(1 - X/e(beta)). See the
// note in the result; division points other than C[t] need roots the series
// engine does not model.
ProductFormulaResult td_product_formula_check(const TdExpansion& td);

struct CuspData {
  long N = 0;
  SeriesA a1, a2, bh, l;
  SeriesA dX[2];   // coordinates of dX on {tau, tau^2}
  SeriesA eta[2];  // coordinates of eta
};

// a1, a2, b_h (with b_h = x mod x^2), l = a1' - (a1/a2) a2', dX = (a1, a2),
// eta = (-x^2 l, 0). Everything mod x^N; N >= q^2.
CuspData cusp_data(const FieldPtr& fq, long N);

// x -> c x on a series: digit n scaled by c^n
SeriesA substitute_scale(const SeriesA& s, const Fe& c);

// Apply g_c (x -> c^{-1} x) and tau -> c tau; check dX -> c dX and eta -> eta.
bool fq_action_check(const CuspData& cd, const Fe& c);

}  // namespace drinfeld

#endif  // DRINFELD_TATE_DRINFELD_HPP
