#include <numeric>

#include "drinfeld/module.hpp"
#include "drinfeld/residue.hpp"
#include "drinfeld/tower.hpp"

namespace drinfeld {

namespace {

// modular inverse of a mod m (gcd 1 assumed)
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr) {
    __int128 qq = r / nr;
    std::swap(t, nt);
    nt -= qq * t;
    std::swap(r, nr);
    nr -= qq * r;
  }
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool h_structure_exists(const DrinfeldModule<Fe>& E) {
  if (E.rank() != 2) throw DomainError("h-structures need rank 2");
  const Fe w = -E.alpha(2);
  const std::uint64_t Q = w.field()->order(), d = w.field()->q() - 1;
  return w.pow((Q - 1) / d).is_one();
}

std::optional<HStructure<Fe>> h_structure_find(const DrinfeldModule<Fe>& E) {
  if (!h_structure_exists(E)) return std::nullopt;
  const Fe w = -E.alpha(2);
  const FieldPtr L = w.field();
  const std::uint64_t Q = L->order(), d = L->q() - 1;
  if (d == 1) return HStructure<Fe>{E, w};
  const std::uint64_t m = (Q - 1) / d;
  if (std::gcd(d, m) == 1) {
    // w = g^{dk}; H = w^{d^{-1} mod m} satisfies H^d = w
    Fe H = w.pow(m == 1 ? 1 : inv_mod(d % m, m));
    if (H.pow(d) == w) return HStructure<Fe>{E, H};
  }
  for (const Fe& H : all_elements(L)) {
    if (!H.is_zero() && H.pow(d) == w) return HStructure<Fe>{E, H};
  }
  return std::nullopt;
}

std::optional<HStructure<SeriesA>> h_structure_find(const DrinfeldModule<SeriesA>& E) {
  if (E.rank() != 2) throw DomainError("h-structures need rank 2");
  const SeriesA w = -E.alpha(2);
  const long q = static_cast<long>(q_of(w));
  const long v = w.valuation();
  if (v % (q - 1) != 0) return std::nullopt;
  SeriesA u = w.shift(-v);
  if (!(u.leading() == one_like(u.proto()))) return std::nullopt;
  SeriesA s = series_root_q_minus_1(u);
  return HStructure<SeriesA>{E, s.shift(v / (q - 1))};
}

}  // namespace drinfeld
