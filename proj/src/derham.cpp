#include "drinfeld/derham.hpp"

namespace drinfeld {

bool is_power_series_unit(const SeriesA& s) { return is_x_power_times_unit(s, 0); }

bool is_x_power_times_unit(const SeriesA& s, long v) {
  if (s.is_zero() || s.valuation() != v) return false;
  const PolyFe& c = s.leading();
  return c.degree() == 0;
}

CuspDeRham cusp_derham(const FieldPtr& fq, long N) {
  const std::uint64_t q = fq->order();
  // b_h^{-q} and a2^{-1} cost a few digits; work with 2q extra
  const long W = N + 2 * static_cast<long>(q) + 2;
  CuspDeRham r;
  r.N = N;
  r.cd = cusp_data(fq, W);
  const CuspData& cd = r.cd;
  auto E = DrinfeldModule<SeriesA>::make(SeriesA::constant(PolyFe::variable(Fe::zero(fq))), {cd.a1, cd.a2});
  HStructure<SeriesA> h{E, cd.bh};
  const DRElement<SeriesA> dX = hodge_i(E);
  const DRElement<SeriesA> eta{cd.eta[0], cd.eta[1]};
  const SeriesA zero = zero_like(cd.a1);

  r.pi_of_i = hodge_pi(E, dX).truncate(N);
  r.pr_H_tau = derham_pairing(h, dX, DRElement<SeriesA>{cd.bh, zero}).truncate(N);
  r.coord_det = (dX.b1 * eta.b2 - eta.b1 * dX.b2).truncate(N);
  r.ks = kodaira_spencer(E, d_dx()).truncate(N);
  r.ks_dual = ks_autodual(h, d_dx()).truncate(N);
  r.pairing_dX_eta = derham_pairing(h, dX, eta).truncate(N);
  const DRElement<SeriesA> basis[2] = {dX, eta};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.gram[i][j] = derham_pairing(h, basis[i], basis[j]).truncate(N);

  // (nabla_{-x^2 d/dx} + (x^2/a2) a2') dX
  const SeriesA x2 = SeriesA::monomial(one_like(cd.a1.proto()), 2);
  auto D = scaled(-x2, d_dx());
  DRElement<SeriesA> lhs = nabla(D, dX) + (x2 * cd.a2.inverse() * cd.a2.derivative()) * dX;
  r.nabla_identity = lhs.b1.truncate(N) == eta.b1.truncate(N) && lhs.b2.truncate(N) == eta.b2.truncate(N) &&
                     lhs.b1.precision() >= N && lhs.b2.precision() >= N;
  return r;
}

}  // namespace drinfeld
