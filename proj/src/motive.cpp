#include "drinfeld/motive.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "drinfeld/additive_kernel.hpp"
#include "drinfeld/residue.hpp"
#include "drinfeld/tower.hpp"

namespace drinfeld {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

FieldPtr fq_of(const PolyFe& n) { return n.proto().field(); }

// F_q basis over F_p: the unit coordinate vectors
std::vector<Fe> fq_fp_basis(const FieldPtr& fq) {
  std::vector<Fe> out;
  for (unsigned s = 0; s < fq->degree(); ++s) {
    Fe::Coords c(fq->degree(), 0);
    c[s] = 1;
    out.push_back(Fe::from_coords(fq, c));
  }
  return out;
}

// Greedy A/(n)-basis. x is admissible next when the F_p-span of
// {omega t^j b} grows by e*d for it.
template <class T, class Coords, class TAct, class Scale>
std::vector<T> module_basis(const std::vector<T>& elems, unsigned rank, const PolyFe& n, std::uint32_t p, Coords coords, TAct tact,
                            Scale scale) {
  const auto omegas = fq_fp_basis(fq_of(n));
  const unsigned d = static_cast<unsigned>(n.degree());
  const unsigned step = static_cast<unsigned>(omegas.size()) * d;
  auto span_rows = [&](const T& b, std::vector<std::vector<std::uint32_t>>& rows) {
    T bj = b;
    for (unsigned j = 0; j < d; ++j) {
      for (const Fe& w : omegas) rows.push_back(coords(scale(w, bj)));
      bj = tact(bj);
    }
  };
  auto rank_of = [&](const std::vector<std::vector<std::uint32_t>>& rows) {
    if (rows.empty()) return std::size_t{0};
    FpMatrix m(rows.size(), rows.front().size(), p);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m.rank();
  };
  std::vector<T> basis;
  std::vector<std::vector<std::uint32_t>> rows;
  for (unsigned i = 1; i <= rank; ++i) {
    bool found = false;
    for (const T& x : elems) {
      auto trial = rows;
      span_rows(x, trial);
      if (rank_of(trial) == static_cast<std::size_t>(step) * i) {
        rows = std::move(trial);
        basis.push_back(x);
        found = true;
        break;
      }
    }
    if (!found) throw DomainError("module is not free of the expected rank");
  }
  return basis;
}

std::vector<std::uint32_t> fe_coords(const Fe& x) { return {x.coords().begin(), x.coords().end()}; }

// flat F_p coordinates of a vector over K[t]/(n)
std::vector<std::uint32_t> vec_coords(const std::vector<ModFe>& v, unsigned d, unsigned D) {
  std::vector<std::uint32_t> out;
  out.reserve(v.size() * d * D);
  for (const ModFe& c : v)
    for (unsigned j = 0; j < d; ++j) {
      Fe x = c.value().coeff(j);
      if (x.coords().empty()) out.insert(out.end(), D, 0);
      else out.insert(out.end(), x.coords().begin(), x.coords().end());
    }
  return out;
}

ModFe descend_mod(const ModFe& x, const PolyFe& n) {
  const FieldPtr fq = fq_of(n);
  PolyFe v = x.value().map([&](const Fe& c) {
    auto r = c.descend_to(fq);
    if (!r) throw DomainError("value does not lie in A/(n)");
    return *r;
  });
  return ModFe::make(v, n);
}

// F_q-linear random element of a finite field
Fe random_element(const FieldPtr& k, std::mt19937_64& rng) { return Fe::from_index(k, rng() % k->order()); }

}  // namespace

PolyFe lift_poly(const PolyFe& a, const FieldPtr& L) {
  PolyFe r = a.map([&](const Fe& c) { return c.lift_to(L); });
  return r.is_zero() ? PolyFe(Fe::zero(L)) : r;
}

std::vector<PolyFe> prime_factors(const PolyFe& n) {
  if (n.degree() < 1) return {};
  const FieldPtr fq = fq_of(n);
  std::vector<PolyFe> out;
  PolyFe rest = n.monic();
  auto elems = all_elements(fq);
  const std::uint64_t q = elems.size();
  for (int deg = 1; deg <= rest.degree(); ++deg) {
    // monic polynomials of degree deg, lexicographic in the lower coefficients
    const std::uint64_t count = ipow(q, static_cast<unsigned>(deg));
    for (std::uint64_t idx = 0; idx < count && deg <= rest.degree(); ++idx) {
      std::vector<Fe> c;
      std::uint64_t r = idx;
      for (int i = 0; i < deg; ++i, r /= q) c.push_back(elems[r % q]);
      c.push_back(Fe::one(fq));
      PolyFe f(c, Fe::zero(fq));
      if (!(rest % f).is_zero()) continue;
      out.push_back(f);
      while ((rest % f).is_zero()) rest = rest / f;
    }
  }
  return out;
}

std::vector<ModFe> quotient_elements(const PolyFe& n) {
  const FieldPtr fq = fq_of(n);
  auto elems = all_elements(fq);
  const std::uint64_t q = elems.size();
  const unsigned d = static_cast<unsigned>(n.degree());
  auto mod = std::make_shared<const PolyFe>(n);
  std::vector<ModFe> out;
  for (std::uint64_t idx = 0; idx < ipow(q, d); ++idx) {
    std::vector<Fe> c;
    std::uint64_t r = idx;
    for (unsigned i = 0; i < d; ++i, r /= q) c.push_back(elems[r % q]);
    out.emplace_back(PolyFe(c, Fe::zero(fq)), mod);
  }
  return out;
}

bool is_unit_mod(const ModFe& a) { return a.is_unit(); }

Fe TorsionModule::act(const PolyFe& a, const Fe& P) const {
  Fe acc = Fe::zero(field);
  for (int i = a.degree(); i >= 0; --i) acc = t_action(acc) + a.coeff(static_cast<std::size_t>(i)).lift_to(field) * P;
  return acc;
}

bool TorsionModule::contains(const Fe& P) const {
  if (!same_field(P.field(), field)) return false;
  return std::binary_search(points.begin(), points.end(), P,
                            [](const Fe& a, const Fe& b) { return a.index() < b.index(); });
}

std::optional<TorsionModule> torsion_points_over(const DrinfeldModule<Fe>& E, const PolyFe& n, const FieldPtr& K, unsigned M) {
  if (n.degree() < 1) throw DomainError("torsion: n must have positive degree");
  if (n.eval(E.theta()).is_zero()) throw DomainError("torsion: n(theta) = 0, the n-torsion is not etale");
  TorsionModule T;
  T.module = E;
  T.n = n;
  T.field = K;
  T.M = M;
  T.phi_t = E.phi_t().map([&](const Fe& c) { return c.lift_to(K); });
  auto phin = E.phi(n).map([&](const Fe& c) { return c.lift_to(K); });
  const std::uint64_t q = fq_of(n)->order();
  T.points = additive_kernel_over(phin, K);
  if (T.points.size() != ipow(q, static_cast<unsigned>(E.rank() * n.degree()))) return std::nullopt;
  std::sort(T.points.begin(), T.points.end(), [](const Fe& a, const Fe& b) { return a.index() < b.index(); });
  T.basis = module_basis(
      T.points, static_cast<unsigned>(E.rank()), n, K->characteristic(), fe_coords, [&](const Fe& P) { return T.t_action(P); },
      [&](const Fe& w, const Fe& P) { return w.lift_to(K) * P; });
  return T;
}

TorsionModule torsion_points(const DrinfeldModule<Fe>& E, const PolyFe& n, unsigned maxdeg) {
  const FieldPtr k = E.theta().field();
  for (unsigned M = 1; M <= maxdeg; ++M) {
    auto T = torsion_points_over(E, n, M == 1 ? k : extend(k, M), M);
    if (T) return *T;
  }
  throw ResourceCapError("torsion: E[n] not split over extensions of degree <= " + std::to_string(maxdeg));
}

bool is_free_point(const TorsionModule& T, const Fe& P) {
  for (const PolyFe& pi : prime_factors(T.n))
    if (T.act(T.n / pi, P).is_zero()) return false;
  return true;
}

std::vector<Fe> gamma1_structures(const TorsionModule& C, const TorsionModule& E) {
  if (!same_field(C.field, E.field)) throw DomainError("gamma1: torsion over different fields");
  std::vector<Fe> out;
  for (const Fe& P : E.points)
    if (is_free_point(E, P)) out.push_back(P);
  return out;
}

ModFe MotiveModN::elem(const PolyFe& c) const { return ModFe::make(c, lift_poly(n, k)); }

std::vector<ModFe> MotiveModN::apply(const std::vector<ModFe>& v) const {
  if (v.size() != rank) throw DomainError("motive: vector of the wrong length");
  std::vector<ModFe> out(rank, zero_like(tau[0][0]));
  for (unsigned i = 0; i < rank; ++i) {
    ModFe s = v[i].sigma();
    for (unsigned j = 0; j < rank; ++j) out[j] += s * tau[i][j];
  }
  return out;
}

MotiveModN MotiveModN::base_change(const FieldPtr& K) const {
  MotiveModN r = *this;
  r.k = K;
  auto mod = std::make_shared<const PolyFe>(lift_poly(n, K));
  for (auto& row : r.tau)
    for (auto& c : row) c = ModFe(lift_poly(c.value(), K), mod);
  return r;
}

MotiveModN motive_mod_n(const DrinfeldModule<Fe>& E, const PolyFe& n) {
  const FieldPtr k = E.theta().field();
  MotiveModN mot;
  mot.k = k;
  mot.n = n;
  mot.rank = static_cast<unsigned>(E.rank());
  const PolyFe t = PolyFe::variable(Fe::zero(k));
  const PolyFe t_minus_theta = t - PolyFe::constant(E.theta());
  const Fe a2inv = E.alpha(E.rank()).inverse();
  if (E.rank() == 1) {
    mot.tau = {{mot.elem(a2inv * t_minus_theta)}};
  } else {
    // tau(m0) = m1, tau(m1) = alpha2^{-1}((t - theta) m0 - alpha1 m1)
    mot.tau = {{mot.elem(PolyFe(Fe::zero(k))), mot.elem(PolyFe::constant(Fe::one(k)))},
               {mot.elem(a2inv * t_minus_theta), mot.elem(PolyFe::constant(-(E.alpha(1) * a2inv)))}};
  }
  return mot;
}

MotiveModN carlitz_motive(const Fe& theta, const PolyFe& n) {
  return motive_mod_n(DrinfeldModule<Fe>::carlitz(theta), n);
}

MotiveModN det_motive(const MotiveModN& mot, const DrinfeldModule<Fe>& E) {
  if (mot.rank != 2 || E.rank() != 2) throw DomainError("det_motive: rank 2 only");
  MotiveModN d = mot;
  d.rank = 1;
  const PolyFe t = PolyFe::variable(Fe::zero(mot.k));
  d.tau = {{mot.elem(E.alpha(2).inverse() * (PolyFe::constant(E.theta()) - t))}};
  return d;
}

std::optional<EtaleFixed> etale_fixed_over(const MotiveModN& mot0, const FieldPtr& K, unsigned M) {
  const MotiveModN mot = mot0.base_change(K);
  const unsigned r = mot.rank, d = static_cast<unsigned>(mot.n.degree()), D = K->degree();
  const std::uint32_t p = K->characteristic();
  auto mod = mot.tau[0][0].modulus_ptr();
  const std::size_t dim = static_cast<std::size_t>(r) * d * D;
  auto unflatten = [&](const std::vector<std::uint32_t>& x) {
    std::vector<ModFe> v;
    for (unsigned i = 0; i < r; ++i) {
      std::vector<Fe> cs;
      for (unsigned j = 0; j < d; ++j) {
        Fe::Coords c(x.begin() + (static_cast<long>(i) * d + j) * D, x.begin() + (static_cast<long>(i) * d + j + 1) * D);
        cs.push_back(Fe::from_coords(K, c));
      }
      v.emplace_back(PolyFe(cs, Fe::zero(K)), mod);
    }
    return v;
  };
  // tau - 1, column by column
  FpMatrix A(dim, dim, p);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<std::uint32_t> e(dim, 0);
    e[col] = 1;
    auto v = unflatten(e);
    auto tv = mot.apply(v);
    for (unsigned i = 0; i < r; ++i) tv[i] -= v[i];
    auto img = vec_coords(tv, d, D);
    for (std::size_t row = 0; row < dim; ++row) A(row, col) = img[row];
  }
  auto ker = A.kernel();
  const std::uint64_t q = fq_of(mot.n)->order();
  if (ipow(p, static_cast<unsigned>(ker.size())) != ipow(q, r * d)) return std::nullopt;
  EtaleFixed fx;
  fx.field = K;
  fx.M = M;
  fx.rank = r;
  fx.n = mot.n;
  // all F_p-combinations of the kernel basis
  const std::uint64_t total = ipow(p, static_cast<unsigned>(ker.size()));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint32_t> x(dim, 0);
    std::uint64_t rr = idx;
    for (const auto& kv : ker) {
      std::uint32_t c = static_cast<std::uint32_t>(rr % p);
      rr /= p;
      for (std::size_t j = 0; j < dim; ++j) x[j] = (x[j] + c * kv[j]) % p;
    }
    fx.elements.push_back(unflatten(x));
  }
  auto tmul = [&](const std::vector<ModFe>& v) {
    std::vector<ModFe> out = v;
    ModFe t(PolyFe::variable(Fe::zero(K)), mod);
    for (auto& c : out) c *= t;
    return out;
  };
  auto scale = [&](const Fe& w, const std::vector<ModFe>& v) {
    std::vector<ModFe> out = v;
    for (auto& c : out) c = w.lift_to(K) * c;
    return out;
  };
  fx.basis = module_basis(
      fx.elements, r, mot.n, p, [&](const std::vector<ModFe>& v) { return vec_coords(v, d, D); }, tmul, scale);
  return fx;
}

EtaleFixed etale_fixed(const MotiveModN& mot, unsigned maxdeg) {
  for (unsigned M = 1; M <= maxdeg; ++M) {
    auto fx = etale_fixed_over(mot, M == 1 ? mot.k : extend(mot.k, M), M);
    if (fx) return *fx;
  }
  throw ResourceCapError("etale_fixed: no extension of degree <= " + std::to_string(maxdeg) + " trivializes the motive");
}

ModFe boeckle_pairing(const TorsionModule& T, const Fe& e, const std::vector<ModFe>& f) {
  const unsigned r = static_cast<unsigned>(T.module.rank());
  if (f.size() != r) throw DomainError("boeckle_pairing: motive vector of the wrong rank");
  if (!same_field(e.field(), T.field) || !same_field(f[0].value().proto().field(), T.field))
    throw DomainError("boeckle_pairing: torsion point and motive over different fields");
  const FieldPtr fq = fq_of(T.n);
  const unsigned d = static_cast<unsigned>(T.n.degree());
  std::vector<Fe> x{e};
  for (unsigned j = 1; j + 1 < 2 * d; ++j) x.push_back(T.t_action(x.back()));
  // x^{q^c} for c < r
  std::vector<std::vector<Fe>> xp{x};
  for (unsigned c = 1; c < r; ++c) {
    std::vector<Fe> nxt;
    for (const Fe& y : xp.back()) nxt.push_back(y.pow(fq->order()));
    xp.push_back(nxt);
  }
  std::vector<Fe> ell;
  for (unsigned i = 0; i < d; ++i) {
    Fe acc = Fe::zero(T.field);
    for (unsigned c = 0; c < r; ++c)
      for (unsigned j = 0; j < d; ++j) acc += f[c].value().coeff(j) * xp[c][i + j];
    auto v = acc.descend_to(fq);
    if (!v) throw DomainError("boeckle_pairing: functional is not F_q-valued (vector not tau-fixed?)");
    ell.push_back(*v);
  }
  auto b = solve_field(residue_gram(T.n), ell);
  if (!b) throw DomainError("boeckle_pairing: residue pairing is degenerate");
  return ModFe::make(PolyFe(*b, Fe::zero(fq)), T.n);
}

BoeckleGram boeckle_duality(const TorsionModule& T, const EtaleFixed& fixed) {
  if (!same_field(T.field, fixed.field)) throw DomainError("boeckle_duality: torsion and fixed module over different fields");
  const std::size_t r = T.basis.size();
  BoeckleGram g;
  g.gram = Matrix<ModFe>(r, r, ModFe::make(PolyFe(Fe::zero(fq_of(T.n))), T.n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) g.gram(i, j) = boeckle_pairing(T, T.basis[i], fixed.basis[j]);
  g.det = det_laplace(g.gram);
  g.perfect = g.det.is_unit();
  return g;
}

WeilContext weil_setup(const DrinfeldModule<Fe>& E, const PolyFe& n, unsigned maxdeg) {
  if (E.rank() != 2) throw DomainError("weil_setup: rank 2 only");
  const FieldPtr k = E.theta().field();
  auto C = DrinfeldModule<Fe>::carlitz(E.theta());
  const MotiveModN ME = motive_mod_n(E, n), MC = carlitz_motive(E.theta(), n);
  for (unsigned M = 1; M <= maxdeg; ++M) {
    FieldPtr K = M == 1 ? k : extend(k, M);
    auto Et = torsion_points_over(E, n, K, M);
    if (!Et) continue;
    auto Ct = torsion_points_over(C, n, K, M);
    if (!Ct) continue;
    auto fE = etale_fixed_over(ME, K, M);
    if (!fE) continue;
    auto fC = etale_fixed_over(MC, K, M);
    if (!fC) continue;
    WeilContext ctx;
    ctx.E = E;
    ctx.n = n;
    ctx.K = K;
    ctx.M = M;
    ctx.Et = std::move(*Et);
    ctx.Ct = std::move(*Ct);
    ctx.ME = std::move(*fE);
    ctx.MC = std::move(*fC);
    ctx.lambda0 = ctx.Ct.basis[0];
    ctx.z0 = ctx.MC.basis[0];
    ctx.r0 = boeckle_pairing(ctx.Ct, ctx.lambda0, ctx.z0);
    if (!ctx.r0.is_unit()) throw DomainError("weil_setup: Carlitz duality is not perfect");
    const auto& f = ctx.ME.basis[0];
    const auto& g = ctx.ME.basis[1];
    ctx.wedge_fg = f[0] * g[1] - f[1] * g[0];
    for (const Fe& P : ctx.Et.points) ctx.pair_fg.emplace(P.index(), std::make_pair(boeckle_pairing(ctx.Et, P, f), boeckle_pairing(ctx.Et, P, g)));
    return ctx;
  }
  throw ResourceCapError("weil_setup: the Weil data does not split over extensions of degree <= " + std::to_string(maxdeg));
}

ModFe weil_functional(const WeilContext& ctx, const Fe& H, const Fe& P, const Fe& Q) {
  const Fe Hk = H.lift_to(ctx.K);
  if (!(H.pow(fq_of(ctx.n)->order() - 1) == -ctx.E.alpha(2))) throw DomainError("weil_pairing: H^{q-1} != -alpha2");
  auto iP = ctx.pair_fg.find(P.index()), iQ = ctx.pair_fg.find(Q.index());
  if (iP == ctx.pair_fg.end() || iQ == ctx.pair_fg.end() || !ctx.Et.contains(P) || !ctx.Et.contains(Q))
    throw DomainError("weil_pairing: point is not n-torsion");
  const ModFe w = iP->second.first * iQ->second.second - iQ->second.first * iP->second.second;
  // nu_H(f ^ g) = H^{-1} (f0 g1 - f1 g0) = s z0
  const ModFe nu = Hk.inverse() * ctx.wedge_fg;
  const ModFe s = descend_mod(nu * ctx.z0[0].inverse(), ctx.n);
  return w * s.inverse();
}

Fe weil_pairing(const WeilContext& ctx, const Fe& H, const Fe& P, const Fe& Q) {
  const ModFe a = weil_functional(ctx, H, P, Q) * ctx.r0.inverse();
  return ctx.Ct.act(a.value(), ctx.lambda0);
}

Fe coset_representative(const TorsionModule& T, const Fe& Q, const Fe& P0) {
  Fe best = Q;
  for (const ModFe& a : quotient_elements(T.n)) {
    Fe c = Q + T.act(a.value(), P0);
    if (c.index() < best.index()) best = c;
  }
  return best;
}

Fe mu_from_h(const WeilContext& ctx, const Fe& H, const Fe& P0) {
  if (!ctx.Et.contains(P0) || !is_free_point(ctx.Et, P0)) throw DomainError("mu_from_h: lambda is not injective");
  for (const Fe& Q : ctx.Et.points)
    if (weil_pairing(ctx, H, P0, Q) == ctx.lambda0) return coset_representative(ctx.Et, Q, P0);
  throw DomainError("mu_from_h: f_H(P0 ^ -) misses lambda0 (pairing not perfect)");
}

std::vector<WeilSample> sample_weil_modules(const FieldPtr& fq, unsigned m, const PolyFe& n, std::uint64_t seed, unsigned count,
                                            unsigned maxdeg) {
  const FieldPtr k = m == 1 ? fq : extend(fq, m);
  std::mt19937_64 rng(seed);
  std::vector<WeilSample> out;
  std::set<std::array<std::uint64_t, 3>> seen;  // distinct modules only
  for (int attempt = 0; attempt < 400 && out.size() < count; ++attempt) {
    Fe theta = random_element(k, rng), a1 = random_element(k, rng), a2 = random_element(k, rng);
    if (a2.is_zero() || n.eval(theta).is_zero()) continue;
    if (!seen.insert({theta.index(), a1.index(), a2.index()}).second) continue;
    auto E = DrinfeldModule<Fe>::make(theta, {a1, a2});
    auto h = h_structure_find(E);
    if (!h) continue;
    try {
      out.push_back({E, h->H, weil_setup(E, n, maxdeg)});
    } catch (const ResourceCapError&) {
      continue;
    }
  }
  if (out.size() < count) throw ResourceCapError("sample_weil_modules: too few modules split over small extensions");
  return out;
}

}  // namespace drinfeld
