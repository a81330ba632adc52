#include "drinfeld/commands.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>

#include "drinfeld/additive_kernel.hpp"
#include "drinfeld/derham.hpp"
#include "drinfeld/matrix.hpp"
#include "drinfeld/motive.hpp"
#include "drinfeld/residue.hpp"
#include "drinfeld/tate_drinfeld.hpp"
#include "drinfeld/tower.hpp"

namespace drinfeld {

namespace {

using Rng = std::mt19937_64;

Fe rand_fe(const FieldPtr& k, Rng& rng) { return Fe::from_index(k, rng() % k->order()); }
Fe rand_nonzero(const FieldPtr& k, Rng& rng) { return Fe::from_index(k, 1 + rng() % (k->order() - 1)); }

PolyFe rand_poly(const FieldPtr& f, int deg, Rng& rng) {
  std::vector<Fe> c;
  for (int i = 0; i <= deg; ++i) c.push_back(rand_fe(f, rng));
  return PolyFe(c, Fe::zero(f));
}

DrinfeldModule<Fe> rand_module(const FieldPtr& k, Rng& rng) {
  Fe th = rand_fe(k, rng), a1 = rand_fe(k, rng);
  return DrinfeldModule<Fe>::make(th, {a1, rand_nonzero(k, rng)});
}

std::vector<Fe> units_of(const FieldPtr& fq) {
  std::vector<Fe> out;
  for (const Fe& c : all_elements(fq))
    if (!c.is_zero()) out.push_back(c);
  return out;
}

FieldPtr ext_field(const FieldPtr& fq, unsigned m) { return m == 1 ? fq : extend(fq, m); }

// the tate-drinfeld code needs at least q^2 digits; compute there, report mod x^prec
long cusp_precision(std::uint64_t q, long prec) { return std::max<long>(prec, static_cast<long>(q * q)); }

// what each check asserts, by check name
const std::map<std::string, std::string>& identities() {
  static const std::map<std::string, std::string> t{
      {"field_axioms", "(a+b)c = ac+bc, a a^-1 = 1, Frob multiplicative and additive, Frob^m = id on F_{q^m}, Frob = id on F_q"},
      {"poly_division", "a = qb + r with deg r < deg b"},
      {"series_inverse", "s s^-1 = 1 mod x^N for s in A[[x]]^x"},
      {"residue_gram", "det Res(t^{i+j} dt / n) != 0"},
      {"tower_embedding", "lift(xy) = lift(x) lift(y), descend(lift(x)) = x"},
      {"ore_commutation", "tau c = c^q tau; (fg)h = f(gh); (fg)(x) = f(g(x))"},
      {"carlitz_kernel", "#ker Phi^C_n = q^deg n, closed under +"},
      {"phi_homomorphism", "Phi_{ab} = Phi_a Phi_b, Phi_{a+b} = Phi_a + Phi_b, Phi_a = a(theta) + ..."},
      {"dual_involution", "(E^D)^D = E via alpha2^-1, j(E^D) = j(E)"},
      {"conjugation", "u: E -> u E u^-1 is an isomorphism, j unchanged"},
      {"h_existence", "h exists iff -alpha2 is a (q-1)-th power"},
      {"autoduality", "H^(q-1) = -alpha2 gives E = E^D; [c]H = c^-1 H also does"},
      {"boeckle_perfect", "det <E[n]_i, M(E)_et,j> is a unit of A/(n)"},
      {"weil_alternating", "f_H(P^P) = 0, f_H(P^Q) = -f_H(Q^P)"},
      {"weil_bilinear", "f_H(P+P'^Q) = f_H(P^Q) + f_H(P'^Q), f_H(tP^Q) = Phi^C_t f_H(P^Q)"},
      {"weil_perfect", "f_H(b0^b1) generates C[n] for an A/(n)-basis (b0, b1)"},
      {"weil_scaling", "f_{[c]H} = c^-1 f_H"},
      {"mu_scaling", "mu_{[c]H} = c mu_H; (c lambda, [c]H) leaves mu unchanged"},
      {"a1_membership", "a1 in 1 + x^(q-1) A[[x^(q-1)]]"},
      {"a2_membership", "a2 in x^(q-1) A[[x^(q-1)]]^x"},
      {"functional_equation", "e Phi^C_a = Phi^Lambda_a e for a in {t, t+1, t^2}"},
      {"bh_power", "b_h^(q-1) = -a2"},
      {"bh_linear", "b_h = x mod x^2"},
      {"prec_extension", "digits at precision 2N agree with precision N mod x^N"},
      {"product_formula", "Phi^Lambda_t(X) = tX prod(1 - X/e(beta)), partial"},
      {"td_h_structure", "the Tate-Drinfeld module carries an h-structure H = b_h"},
      {"golden", "td-coeffs output equals the golden file"},
      {"pi_of_i", "pi(i(dX)) = 0"},
      {"pr_h_tau", "<dX, b_h tau> = 1"},
      {"coord_det", "det[dX | eta] = x^q * unit"},
      {"ks_dual", "b_h^-1 l = x^-2 * unit"},
      {"pairing_dx_eta", "<dX, eta> = x^2 l a2 b_h^-q is a unit"},
      {"nabla_identity", "(nabla_{-x^2 d/dx} + x^2 a2'/a2) dX = eta"},
      {"fq_action", "theta_c(dX) = c dX, theta_c(eta) = eta"},
      {"pairing_finite", "<dX, H tau> = 1, <u,u> = 0, <u,v> = -<v,u>, Hodge compatibility"},
  };
  return t;
}

class Collector {
 public:
  explicit Collector(std::string prefix) : prefix_(std::move(prefix)) {}

  void run(const std::string& name, const std::function<bool(std::string&)>& body) {
    Check c{prefix_ + name, identities().at(name), "fail", ""};
    try {
      c.status = body(c.detail) ? "pass" : "fail";
    } catch (const ResourceCapError&) {
      throw;
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    checks_.push_back(std::move(c));
  }
  void add(const std::string& name, std::string status, std::string detail) {
    checks_.push_back({prefix_ + name, identities().at(name), std::move(status), std::move(detail)});
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::string prefix_;
  std::vector<Check> checks_;
};

struct GridPoint {
  std::string suite;
  std::uint64_t q;
  const VerifyOptions* opt;
};

std::uint64_t point_seed(const GridPoint& g) {
  std::uint64_t s = g.opt->seed * 0x9e3779b97f4a7c15ULL + g.q;
  for (char ch : g.suite) s = s * 131 + static_cast<unsigned char>(ch);
  return s;
}

std::vector<Check> suite_algebra(const GridPoint& g, Collector& col) {
  const FieldPtr fq = fq_from_q(g.q);
  const FieldPtr k = ext_field(fq, g.opt->ext);
  const PolyFe n = parse_poly(fq, g.opt->n);
  Rng rng(point_seed(g));
  col.run("field_axioms", [&](std::string&) {
    for (int it = 0; it < 100; ++it) {
      Fe a = rand_fe(k, rng), b = rand_fe(k, rng), c = rand_fe(k, rng);
      if (!((a + b) * c == a * c + b * c)) return false;
      if (!a.is_zero() && !(a * a.inverse()).is_one()) return false;
      if (!((a * b).frobenius() == a.frobenius() * b.frobenius()) || !((a + b).frobenius() == a.frobenius() + b.frobenius())) return false;
      Fe f = a;
      for (unsigned i = 0; i < g.opt->ext; ++i) f = f.frobenius();
      if (!(f == a)) return false;
    }
    for (const Fe& c : all_elements(fq))
      if (!(c.frobenius() == c)) return false;
    return true;
  });
  col.run("poly_division", [&](std::string&) {
    for (int it = 0; it < 50; ++it) {
      PolyFe a = rand_poly(k, 6, rng), b = rand_poly(k, 2, rng) + PolyFe::monomial(rand_nonzero(k, rng), 3);
      auto [qq, r] = divmod(a, b);
      if (!(qq * b + r == a) || r.degree() >= b.degree()) return false;
    }
    return true;
  });
  col.run("series_inverse", [&](std::string&) {
    const long N = g.opt->prec;
    for (int it = 0; it < 10; ++it) {
      std::vector<PolyFe> c{PolyFe::constant(rand_nonzero(fq, rng))};
      for (long i = 1; i < N; ++i) c.push_back(rand_poly(fq, 2, rng));
      SeriesA s = SeriesA::from_coeffs(0, c, N, PolyFe(Fe::zero(fq)));
      SeriesA one = SeriesA::constant(PolyFe::constant(Fe::one(fq)), N);
      if (!(s * s.inverse() == one)) return false;
    }
    return true;
  });
  col.run("residue_gram", [&](std::string&) { return !det_field(residue_gram(n)).is_zero(); });
  col.run("tower_embedding", [&](std::string&) {
    const FieldPtr K = extend(k, 2);
    for (int it = 0; it < 50; ++it) {
      Fe x = rand_fe(k, rng), y = rand_fe(k, rng);
      if (!((x * y).lift_to(K) == x.lift_to(K) * y.lift_to(K))) return false;
      auto d = x.lift_to(K).descend_to(k);
      if (!d || !(*d == x)) return false;
    }
    return true;
  });
  return col.take();
}

std::vector<Check> suite_ore(const GridPoint& g, Collector& col) {
  const FieldPtr fq = fq_from_q(g.q);
  const FieldPtr k = ext_field(fq, g.opt->ext);
  const PolyFe n = parse_poly(fq, g.opt->n);
  Rng rng(point_seed(g));
  auto rand_ore = [&](int deg) {
    std::vector<Fe> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rand_fe(k, rng));
    return OrePoly<Fe>(c, Fe::zero(k));
  };
  col.run("ore_commutation", [&](std::string&) {
    const Fe zero = Fe::zero(k);
    for (int it = 0; it < 30; ++it) {
      Fe c = rand_fe(k, rng);
      if (!(OrePoly<Fe>::tau(zero) * OrePoly<Fe>::constant(c) == c.frobenius() * OrePoly<Fe>::tau(zero))) return false;
      auto f = rand_ore(3), gg = rand_ore(2), h = rand_ore(2);
      if (!((f * gg) * h == f * (gg * h))) return false;
      Fe x = rand_fe(k, rng);
      if (!(ore_eval(f * gg, x) == ore_eval(f, ore_eval(gg, x)))) return false;
    }
    return true;
  });
  col.run("carlitz_kernel", [&](std::string& detail) {
    Fe th = rand_fe(k, rng);
    while (n.eval(th).is_zero()) th = rand_fe(k, rng);
    auto C = DrinfeldModule<Fe>::carlitz(th);
    auto ker = additive_kernel(C.phi(n));
    std::uint64_t expect = 1;
    for (int i = 0; i < n.degree(); ++i) expect *= g.q;
    detail = std::to_string(ker.points.size()) + " points over degree " + std::to_string(ker.extension);
    if (ker.points.size() != expect) return false;
    std::set<std::uint64_t> idx;
    for (const Fe& P : ker.points) idx.insert(P.index());
    for (int it = 0; it < 20; ++it) {
      const Fe& P = ker.points[rng() % ker.points.size()];
      const Fe& Q = ker.points[rng() % ker.points.size()];
      if (!idx.count((P + Q).index())) return false;
    }
    return true;
  });
  return col.take();
}

std::vector<Check> suite_drinfeld(const GridPoint& g, Collector& col) {
  const FieldPtr fq = fq_from_q(g.q);
  const FieldPtr k = ext_field(fq, g.opt->ext);
  Rng rng(point_seed(g));
  col.run("phi_homomorphism", [&](std::string&) {
    for (int it = 0; it < 20; ++it) {
      auto E = rand_module(k, rng);
      PolyFe a = rand_poly(fq, 2, rng), b = rand_poly(fq, 2, rng);
      if (!(E.phi(a * b) == E.phi(a) * E.phi(b)) || !(E.phi(a + b) == E.phi(a) + E.phi(b))) return false;
      if (!(E.phi(a).coeff(0) == a.eval(E.theta()))) return false;
    }
    return true;
  });
  col.run("dual_involution", [&](std::string&) {
    for (int it = 0; it < 50; ++it) {
      auto E = rand_module(k, rng);
      if (!hom_check(E.alpha(2).inverse(), E, dual(dual(E))) || !(j_invariant(dual(E)) == j_invariant(E))) return false;
    }
    return true;
  });
  col.run("conjugation", [&](std::string&) {
    for (int it = 0; it < 50; ++it) {
      auto E = rand_module(k, rng);
      Fe u = rand_nonzero(k, rng);
      auto F = conjugate(E, u);
      if (!hom_check(u, E, F) || !(j_invariant(F) == j_invariant(E))) return false;
    }
    return true;
  });
  col.run("h_existence", [&](std::string& detail) {
    const std::uint64_t Q = k->order(), d = std::gcd<std::uint64_t>(g.q - 1, Q - 1);
    int with = 0;
    for (int it = 0; it < 100; ++it) {
      auto E = rand_module(k, rng);
      bool crit = (-E.alpha(2)).pow((Q - 1) / d).is_one();
      with += crit;
      if (h_structure_exists(E) != crit) return false;
    }
    detail = std::to_string(with) + "/100 with an h-structure";
    return true;
  });
  col.run("autoduality", [&](std::string&) {
    for (int it = 0; it < 50; ++it) {
      auto h = h_structure_find(rand_module(k, rng));
      if (!h) continue;
      if (!is_valid(*h) || !autoduality_check(*h)) return false;
      for (const Fe& c : units_of(fq))
        if (!autoduality_check(act(c, *h))) return false;
    }
    return true;
  });
  return col.take();
}

std::vector<Check> suite_motive(const GridPoint& g, Collector& col) {
  const FieldPtr fq = fq_from_q(g.q);
  const PolyFe n = parse_poly(fq, g.opt->n);
  auto samples = sample_weil_modules(fq, g.opt->ext, n, point_seed(g), 2);
  Rng rng(point_seed(g) + 1);
  auto each = [&](const std::function<bool(const WeilSample&)>& fn) {
    for (const auto& s : samples)
      if (!fn(s)) return false;
    return true;
  };
  col.run("boeckle_perfect", [&](std::string&) {
    return each([](const WeilSample& s) {
      return boeckle_duality(s.ctx.Et, s.ctx.ME).perfect && boeckle_duality(s.ctx.Ct, s.ctx.MC).perfect;
    });
  });
  auto pick = [&](const WeilSample& s) { return s.ctx.Et.points[rng() % s.ctx.Et.points.size()]; };
  col.run("weil_alternating", [&](std::string&) {
    return each([&](const WeilSample& s) {
      for (int it = 0; it < 20; ++it) {
        Fe P = pick(s), Q = pick(s);
        if (!weil_pairing(s.ctx, s.H, P, P).is_zero()) return false;
        if (!(weil_pairing(s.ctx, s.H, P, Q) == -weil_pairing(s.ctx, s.H, Q, P))) return false;
      }
      return true;
    });
  });
  col.run("weil_bilinear", [&](std::string&) {
    return each([&](const WeilSample& s) {
      for (int it = 0; it < 20; ++it) {
        Fe P = pick(s), P2 = pick(s), Q = pick(s);
        Fe v = weil_pairing(s.ctx, s.H, P, Q);
        if (!(weil_pairing(s.ctx, s.H, P + P2, Q) == v + weil_pairing(s.ctx, s.H, P2, Q))) return false;
        if (!(weil_pairing(s.ctx, s.H, s.ctx.Et.t_action(P), Q) == s.ctx.Ct.t_action(v))) return false;
      }
      return true;
    });
  });
  col.run("weil_perfect", [&](std::string&) {
    return each([](const WeilSample& s) {
      return is_free_point(s.ctx.Ct, weil_pairing(s.ctx, s.H, s.ctx.Et.basis[0], s.ctx.Et.basis[1]));
    });
  });
  col.run("weil_scaling", [&](std::string&) {
    return each([&](const WeilSample& s) {
      const Fe& B0 = s.ctx.Et.basis[0];
      const Fe& B1 = s.ctx.Et.basis[1];
      Fe v = weil_pairing(s.ctx, s.H, B0, B1);
      for (const Fe& c : units_of(fq)) {
        Fe cH = act(c, HStructure<Fe>{s.E, s.H}).H;
        if (!(weil_pairing(s.ctx, cH, B0, B1) == c.inverse().lift_to(s.ctx.K) * v)) return false;
      }
      return true;
    });
  });
  col.run("mu_scaling", [&](std::string&) {
    return each([&](const WeilSample& s) {
      const auto& ctx = s.ctx;
      for (const Fe& P0 : gamma1_structures(ctx.Ct, ctx.Et)) {
        Fe mu = mu_from_h(ctx, s.H, P0);
        for (const Fe& c : units_of(fq)) {
          Fe cK = c.lift_to(ctx.K);
          Fe cH = act(c, HStructure<Fe>{s.E, s.H}).H;
          if (!(mu_from_h(ctx, cH, P0) == coset_representative(ctx.Et, cK * mu, P0))) return false;
          if (!(mu_from_h(ctx, cH, cK * P0) == mu)) return false;
        }
      }
      return true;
    });
  });
  return col.take();
}

std::vector<Check> suite_td(const GridPoint& g, Collector& col) {
  const std::uint64_t q = g.q;
  const FieldPtr fq = fq_from_q(q);
  const long N = g.opt->prec, Nc = cusp_precision(q, N);
  const CuspData cd = cusp_data(fq, Nc);
  const PolyFe t = PolyFe::variable(Fe::zero(fq)), one = PolyFe::constant(Fe::one(fq));
  col.run("a1_membership", [&](std::string&) { return a1_membership(cd.a1, q, N); });
  col.run("a2_membership", [&](std::string&) { return a2_membership(cd.a2, q, N); });
  const TdExpansion td = td_expansion(fq, N);
  col.run("functional_equation", [&](std::string&) {
    for (const PolyFe& a : {t, t + one, t * t})
      if (!functional_equation_check(td, a)) return false;
    return true;
  });
  col.run("bh_power", [&](std::string&) { return (pow(cd.bh, q - 1) + cd.a2).truncate(N).is_zero(); });
  col.run("bh_linear", [&](std::string&) { return cd.bh.coeff(0).is_zero() && cd.bh.coeff(1) == one; });
  col.run("prec_extension", [&](std::string&) {
    const CuspData hi = cusp_data(fq, 2 * Nc);
    for (auto [lo, up] : {std::pair{&cd.a1, &hi.a1}, std::pair{&cd.a2, &hi.a2}, std::pair{&cd.bh, &hi.bh}})
      if (!lo->truncate(N).identical(up->truncate(N))) return false;
    return true;
  });
  col.run("td_h_structure", [&](std::string&) {
    auto E = DrinfeldModule<SeriesA>::make(SeriesA::constant(t), {cd.a1, cd.a2});
    auto h = h_structure_find(E);
    return h && autoduality_check(*h);
  });
  {
    auto r = td_product_formula_check(td);
    col.add("product_formula", r.status, r.note);
  }
  if (g.opt->golden_dir) {
    const auto path = std::filesystem::path(*g.opt->golden_dir) / golden_file_name(q, N);
    std::ifstream in(path);
    if (!in) {
      col.add("golden", "unverified", "no golden file " + path.string());
    } else {
      col.run("golden", [&](std::string& detail) {
        json want = json::parse(in);
        std::string at = first_difference(want, td_coeffs_json(q, N));
        if (at.empty()) return true;
        detail = path.string() + " differs at " + at;
        return false;
      });
    }
  }
  return col.take();
}

std::vector<Check> suite_derham(const GridPoint& g, Collector& col) {
  const std::uint64_t q = g.q;
  const FieldPtr fq = fq_from_q(q);
  const long N = cusp_precision(q, g.opt->prec);
  const CuspDeRham r = cusp_derham(fq, N);
  const PolyFe one = PolyFe::constant(Fe::one(fq));
  col.run("pi_of_i", [&](std::string&) { return r.pi_of_i.is_zero(); });
  col.run("pr_h_tau", [&](std::string&) { return r.pr_H_tau == SeriesA::constant(one); });
  col.run("coord_det", [&](std::string&) { return is_x_power_times_unit(r.coord_det, static_cast<long>(q)); });
  col.run("ks_dual", [&](std::string&) { return is_x_power_times_unit(r.ks_dual, -2); });
  col.run("pairing_dx_eta", [&](std::string&) { return is_power_series_unit(r.pairing_dX_eta); });
  col.run("nabla_identity", [&](std::string&) { return r.nabla_identity; });
  col.run("fq_action", [&](std::string&) {
    for (const Fe& c : units_of(fq))
      if (!fq_action_check(r.cd, c)) return false;
    return true;
  });
  col.run("pairing_finite", [&](std::string& detail) {
    const FieldPtr k = ext_field(fq, g.opt->ext);
    Rng rng(point_seed(g));
    int seen = 0;
    for (int it = 0; it < 60 && seen < 15; ++it) {
      auto E = rand_module(k, rng);
      auto h = h_structure_find(E);
      if (!h) continue;
      ++seen;
      const Fe zero = Fe::zero(k);
      DRElement<Fe> dX = hodge_i(E), Ht{h->H, zero};
      DRElement<Fe> u{rand_fe(k, rng), rand_fe(k, rng)}, v{rand_fe(k, rng), rand_fe(k, rng)};
      if (!derham_pairing(*h, dX, Ht).is_one() || !derham_pairing(*h, u, u).is_zero()) return false;
      if (!(derham_pairing(*h, u, v) == -derham_pairing(*h, v, u))) return false;
      if (!hodge_compatibility_check(*h, {u, v})) return false;
    }
    detail = std::to_string(seen) + " modules with an h-structure";
    return seen > 0;
  });
  return col.take();
}

std::vector<Check> run_point(const GridPoint& g) {
  Collector col(g.suite + "/q=" + std::to_string(g.q) + "/");
  if (g.suite == "algebra") return suite_algebra(g, col);
  if (g.suite == "ore") return suite_ore(g, col);
  if (g.suite == "drinfeld") return suite_drinfeld(g, col);
  if (g.suite == "motive") return suite_motive(g, col);
  if (g.suite == "td") return suite_td(g, col);
  return suite_derham(g, col);
}

json series_header(const char* command, std::uint64_t q, long prec) {
  return {{"schema", kSchemaVersion}, {"command", command}, {"q", q}, {"prec", prec}};
}

}  // namespace

FieldPtr fq_from_q(std::uint64_t q, std::optional<std::uint32_t> p) {
  if (q < 2) throw DomainError("q must be a prime power");
  std::uint64_t r = 2;
  while (q % r) ++r;
  unsigned e = 0;
  std::uint64_t m = q;
  while (m % r == 0) m /= r, ++e;
  if (m != 1) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  if (p && *p != r) throw DomainError("p = " + std::to_string(*p) + " does not divide q = " + std::to_string(q));
  return make_fq(static_cast<std::uint32_t>(r), e);
}

PolyFe parse_poly(const FieldPtr& fq, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw DomainError("empty polynomial");
  const Fe zero = Fe::zero(fq);
  std::vector<Fe> c;
  auto put = [&](std::size_t deg, long long v) {
    if (c.size() <= deg) c.resize(deg + 1, zero);
    c[deg] += Fe::from_int(fq, v);
  };
  if (s.find('t') == std::string::npos) {
    // coefficient list, lowest degree first
    std::size_t i = 0, deg = 0;
    while (i <= s.size()) {
      std::size_t j = s.find(',', i);
      if (j == std::string::npos) j = s.size();
      const std::string tok = s.substr(i, j - i);
      if (tok.empty()) throw DomainError("bad coefficient list: " + text);
      put(deg++, std::stoll(tok));
      i = j + 1;
    }
  } else {
    std::size_t i = 0;
    while (i < s.size()) {
      long long sign = 1;
      if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      long long coef = j > i ? std::stoll(s.substr(i, j - i)) : 1;
      std::size_t deg = 0;
      if (j < s.size() && s[j] == '*') ++j;
      if (j < s.size() && s[j] == 't') {
        deg = 1;
        ++j;
        if (j < s.size() && s[j] == '^') {
          std::size_t k = ++j;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
          if (j == k) throw DomainError("bad exponent in " + text);
          deg = std::stoul(s.substr(k, j - k));
        }
      } else if (j == i) {
        throw DomainError("cannot parse polynomial " + text);
      }
      put(deg, sign * coef);
      i = j;
    }
  }
  PolyFe n(c, zero);
  if (n.degree() < 1) throw DomainError("modulus must have positive degree: " + text);
  return n.monic();
}

json td_coeffs_json(std::uint64_t q, long prec) {
  if (prec < 2) throw DomainError("prec must be at least 2");
  const FieldPtr fq = fq_from_q(q);
  const CuspData cd = cusp_data(fq, cusp_precision(q, prec));
  json out = series_header("td-coeffs", q, prec);
  out["field"] = field_to_json(fq);
  out["a1"] = to_json(cd.a1.truncate(prec));
  out["a2"] = to_json(cd.a2.truncate(prec));
  out["bh"] = to_json(cd.bh.truncate(prec));
  out["l"] = to_json(cd.l.truncate(prec));
  return out;
}

json weil_json(const WeilRequest& r) {
  const FieldPtr fq = fq_from_q(r.q);
  const PolyFe n = parse_poly(fq, r.n);
  DrinfeldModule<Fe> E;
  Fe H;
  std::optional<WeilContext> ctx;
  if (r.module) {
    if (r.module->size() != 3) throw DomainError("--module takes three element indices: theta, alpha1, alpha2");
    const FieldPtr k = ext_field(fq, r.ext);
    for (auto i : *r.module)
      if (i >= k->order()) throw DomainError("element index " + std::to_string(i) + " outside F_{q^" + std::to_string(r.ext) + "}");
    E = DrinfeldModule<Fe>::make(Fe::from_index(k, (*r.module)[0]), {Fe::from_index(k, (*r.module)[1]), Fe::from_index(k, (*r.module)[2])});
    auto h = h_structure_find(E);
    if (!h) throw DomainError("the module has no h-structure: -alpha2 is not a (q-1)-th power");
    H = h->H;
    ctx = weil_setup(E, n);
  } else {
    auto s = sample_weil_modules(fq, r.ext, n, r.seed, 1).front();
    E = s.E;
    H = s.H;
    ctx = s.ctx;
  }
  const auto& pts = ctx->Et.points;
  auto point = [&](const std::optional<std::uint64_t>& i, const Fe& dflt) {
    if (!i) return dflt;
    if (*i >= pts.size()) throw DomainError("point index " + std::to_string(*i) + " outside E[n] (" + std::to_string(pts.size()) + " points)");
    return pts[*i];
  };
  const Fe P = point(r.P, ctx->Et.basis[0]), Q = point(r.Q, ctx->Et.basis[1]);
  const Fe v = weil_pairing(*ctx, H, P, Q);

  json out{{"schema", kSchemaVersion}, {"command", "weil"}, {"q", r.q}, {"ext", r.ext}, {"n", to_json(n)}};
  out["module"] = to_json(E);
  out["H"] = to_json(H);
  out["K"] = field_to_json(ctx->K);
  out["torsion_points"] = pts.size();
  out["P"] = to_json(P);
  out["Q"] = to_json(Q);
  out["pairing"] = to_json(v);
  out["generator"] = is_free_point(ctx->Ct, v);
  json basis = json::array(), table = json::array();
  for (const Fe& b : ctx->Et.basis) basis.push_back(to_json(b));
  for (const Fe& b : ctx->Et.basis) {
    json row = json::array();
    for (const Fe& b2 : ctx->Et.basis) row.push_back(to_json(weil_pairing(*ctx, H, b, b2)));
    table.push_back(row);
  }
  out["basis"] = basis;
  out["table"] = table;
  if (r.scale_h) {
    const Fe c = Fe::from_int(fq, *r.scale_h);
    if (c.is_zero()) throw DomainError("--scale-h must be nonzero in F_q");
    const Fe cH = act(c, HStructure<Fe>{E, H}).H;
    const Fe w = weil_pairing(*ctx, cH, P, Q);
    out["scaled"] = {{"c", to_json(c)},
                     {"H", to_json(cH)},
                     {"pairing", to_json(w)},
                     {"equals_c_inverse_times_pairing", w == c.inverse().lift_to(ctx->K) * v}};
  }
  return out;
}

json derham_json(std::uint64_t q, long prec) {
  const FieldPtr fq = fq_from_q(q);
  const long N = cusp_precision(q, prec);
  const CuspDeRham r = cusp_derham(fq, N);
  auto cut = [&](const SeriesA& s) { return to_json(s.truncate(prec)); };
  json out = series_header("derham", q, prec);
  out["field"] = field_to_json(fq);
  out["pi_of_i"] = cut(r.pi_of_i);
  out["pr_H_tau"] = cut(r.pr_H_tau);
  out["coord_det"] = cut(r.coord_det);
  out["ks"] = cut(r.ks);
  out["ks_dual"] = cut(r.ks_dual);
  out["pairing_dX_eta"] = cut(r.pairing_dX_eta);
  out["dX"] = {cut(r.cd.dX[0]), cut(r.cd.dX[1])};
  out["eta"] = {cut(r.cd.eta[0]), cut(r.cd.eta[1])};
  out["nabla_identity"] = r.nabla_identity;
  return out;
}

bool Report::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == "fail"; });
}

json Report::to_json() const {
  json cs = json::array();
  std::map<std::string, int> tally{{"pass", 0}, {"fail", 0}, {"unverified", 0}};
  for (const auto& c : checks) {
    cs.push_back({{"key", c.key}, {"identity", c.identity}, {"status", c.status}, {"detail", c.detail}});
    ++tally[c.status];
  }
  return {{"schema", kSchemaVersion}, {"suite", suite}, {"grid", grid}, {"checks", cs}, {"summary", tally}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> s{"algebra", "ore", "drinfeld", "motive", "td", "derham"};
  return s;
}

Report run_verify(const std::string& suite, const VerifyOptions& opt) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = suite_names();
  else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end())
    suites = {suite};
  else
    throw DomainError("unknown suite " + suite);
  for (auto q : opt.q) {
    const FieldPtr fq = fq_from_q(q);
    parse_poly(fq, opt.n);
  }

  std::vector<std::future<std::vector<Check>>> jobs;
  std::vector<GridPoint> points;
  for (const auto& s : suites)
    for (auto q : opt.q) points.push_back({s, q, &opt});
  for (const auto& g : points) jobs.push_back(std::async(std::launch::async, run_point, g));

  Report rep;
  rep.suite = suite;
  for (auto& j : jobs) {
    auto cs = j.get();
    rep.checks.insert(rep.checks.end(), cs.begin(), cs.end());
  }
  std::sort(rep.checks.begin(), rep.checks.end(), [](const Check& a, const Check& b) { return a.key < b.key; });
  rep.grid = {{"q", opt.q}, {"ext", opt.ext}, {"prec", opt.prec}, {"n", opt.n}, {"seed", opt.seed}, {"golden", opt.golden_dir.has_value()}};
  return rep;
}

std::string golden_file_name(std::uint64_t q, long prec) {
  return "td_coeffs_q" + std::to_string(q) + "_prec" + std::to_string(prec) + ".json";
}

}  // namespace drinfeld
