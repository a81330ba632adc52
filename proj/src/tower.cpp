#include "drinfeld/tower.hpp"

#include <map>

namespace drinfeld {

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> r;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    r.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) r.push_back(n);
  return r;
}

// t^(Q^k) mod f by k successive Q-th powers
PolyFe frob_power_of_t(const PolyFe& f, std::uint64_t Q, unsigned k) {
  PolyFe x = PolyFe::variable(f.proto()) % f;
  for (unsigned i = 0; i < k; ++i) x = powmod(x, Q, f);
  return x;
}

}  // namespace

std::vector<std::uint32_t> conway_modulus(std::uint32_t p, unsigned e) {
  static const std::map<std::pair<std::uint32_t, unsigned>, std::vector<std::uint32_t>> table = {
      {{2, 1}, {1, 1}},          {{2, 2}, {1, 1, 1}},          {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
      {{3, 1}, {1, 1}},          {{3, 2}, {2, 2, 1}},          {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 1}, {3, 1}},          {{5, 2}, {2, 4, 1}},          {{5, 3}, {3, 3, 0, 1}},    {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 1}, {4, 1}},          {{7, 2}, {3, 6, 1}},          {{7, 3}, {4, 0, 6, 1}},    {{7, 4}, {3, 4, 5, 0, 1}},
  };
  auto it = table.find({p, e});
  return it == table.end() ? std::vector<std::uint32_t>{} : it->second;
}

bool is_irreducible(const PolyFe& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  PolyFe g = f.monic();
  const std::uint64_t Q = g.proto().field()->order();
  PolyFe t = PolyFe::variable(g.proto());
  if (!(frob_power_of_t(g, Q, n) == t % g)) return false;
  for (unsigned r : prime_divisors(static_cast<unsigned>(n))) {
    PolyFe h = frob_power_of_t(g, Q, n / r) - t;
    if (gcd(g, h).degree() != 0) return false;
  }
  return true;
}

PolyFe smallest_irreducible(const FieldPtr& base, unsigned degree) {
  if (degree == 0) throw DomainError("irreducible of degree 0");
  const std::uint64_t Q = base->order();
  Fe zero = Fe::zero(base);
  std::vector<Fe> c(degree + 1, zero);
  c[degree] = Fe::one(base);
  // index over the lower coefficients, digit i in base Q
  for (std::uint64_t idx = 0;; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < degree; ++i) {
      c[i] = Fe::from_index(base, rest % Q);
      rest /= Q;
    }
    if (rest) break;
    if (degree > 1 && c[0].is_zero()) continue;
    PolyFe f(c, zero);
    if (is_irreducible(f)) return f;
  }
  throw DomainError("no irreducible polynomial found");
}

FieldPtr make_fq(std::uint32_t p, unsigned e, const std::optional<std::vector<std::uint32_t>>& modulus) {
  if (e == 0) throw DomainError("extension degree must be positive");
  auto fp = FiniteField::prime(p);
  if (e == 1) return fp;
  std::vector<std::uint32_t> m;
  if (modulus) {
    m = *modulus;
  } else {
    m = conway_modulus(p, e);
    if (m.empty()) {
      for (const auto& c : smallest_irreducible(fp, e).coeffs()) m.push_back(c.coords()[0]);
    }
  }
  if (m.size() != e + 1 || m.back() % p != 1) throw DomainError("F_q modulus must be monic of degree e");
  std::vector<Fe> mc;
  for (auto c : m) mc.push_back(Fe::from_int(fp, c));
  if (!is_irreducible(PolyFe(mc, Fe::zero(fp)))) throw DomainError("F_q modulus is reducible");
  return FiniteField::constants(p, m);
}

FieldPtr extend(const FieldPtr& base, unsigned degree, const std::optional<PolyFe>& modulus) {
  if (degree == 0) throw DomainError("extension degree must be positive");
  if (degree == 1 && !modulus) return base;
  PolyFe f = modulus ? *modulus : smallest_irreducible(base, degree);
  if (f.degree() != static_cast<int>(degree) || !f.is_monic()) throw DomainError("extension modulus must be monic of the stated degree");
  if (!same_field(f.proto().field(), base)) throw DomainError("extension modulus over the wrong field");
  if (!is_irreducible(f)) throw DomainError("extension modulus is reducible");
  return FiniteField::extension_unchecked(base, f.coeffs());
}

std::vector<Fe> all_elements(const FieldPtr& field, std::uint64_t cap) {
  const std::uint64_t n = field->order();
  if (n > cap) throw ResourceCapError("field too large to enumerate");
  std::vector<Fe> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Fe::from_index(field, i));
  return out;
}

FieldPtr constant_field(const FieldPtr& field) {
  FieldPtr f = field;
  while (f->base() && f->degree() > f->fq_degree()) f = f->base();
  return f;
}

}  // namespace drinfeld
