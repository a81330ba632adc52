#ifndef DRINFELD_POLY_HPP
#define DRINFELD_POLY_HPP

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/field.hpp"

namespace drinfeld {

// Dense univariate polynomials in t over a commutative coefficient ring R.
// R is Fe in practice (A = F_q[t], k[t]); anything with the ring interface of
// field.hpp (zero_like, one_like, is_zero, inverse, frob, q_of) works.
//
// A zero prototype of R is carried along because Fe needs its field to make
// a zero.
template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(R proto) : proto_(zero_like(proto)) {}
  Poly(std::vector<R> coeffs, const R& proto) : proto_(zero_like(proto)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const R& c) { return Poly(std::vector<R>{c}, c); }
  static Poly monomial(const R& c, std::size_t k) {
    std::vector<R> v(k + 1, zero_like(c));
    v[k] = c;
    return Poly(std::move(v), c);
  }
  // the variable t
  static Poly variable(const R& proto) { return monomial(one_like(proto), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  const R& proto() const { return proto_; }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : proto_; }
  R lc() const { return c_.empty() ? proto_ : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == one_like(proto_); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), proto_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), proto_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.proto_);
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, a.proto_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ring_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out), a.proto_);
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(const R& s, const Poly& a) {
    std::vector<R> out = a.c_;
    for (auto& c : out) c = s * c;
    return Poly(std::move(out), a.proto_);
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // (quotient, remainder) with deg r < deg b; b's leading coefficient must be a unit.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    R inv_lc = ring_inverse(b.lc());
    std::vector<R> rem = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {Poly(a.proto_), a};
    std::vector<R> quo(a.degree() - db + 1, a.proto_);
    for (int k = a.degree(); k >= db; --k) {
      if (ring_is_zero(rem[k])) continue;
      R f = rem[k] * inv_lc;
      quo[k - db] = f;
      for (int i = 0; i <= db; ++i) rem[k - db + i] -= f * b.c_[i];
    }
    rem.resize(db);
    return {Poly(std::move(quo), a.proto_), Poly(std::move(rem), a.proto_)};
  }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

  // Horner evaluation at a point of an R-algebra S (embed maps R into S).
  template <class S>
  S eval(const S& x) const {
    S acc = zero_like(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + embed(*it, x);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(proto_);
    std::vector<R> out;
    out.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(scale_by_int(c_[i], static_cast<long long>(i)));
    return Poly(std::move(out), proto_);
  }

  // the ring q-th power: sum frob(c_i) t^{q i}
  Poly frobenius() const {
    if (c_.empty()) return *this;
    const std::uint64_t q = q_of(proto_);
    std::vector<R> out((c_.size() - 1) * q + 1, proto_);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i * q] = frob(c_[i]);
    return Poly(std::move(out), proto_);
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return ring_inverse(lc()) * *this;
  }

  // apply a coefficient map (e.g. sigma on k[t], lifting into an extension)
  template <class F>
  auto map(F&& f) const {
    using S = decltype(f(proto_));
    std::vector<S> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return Poly<S>(std::move(out), f(proto_));
  }

 private:
  static R scale_by_int(const R& c, long long k) {
    R acc = zero_like(c);
    long long p = static_cast<long long>(char_of(c));
    k %= p;
    for (long long i = 0; i < k; ++i) acc += c;
    return acc;
  }
  void trim() {
    while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
  }

  R proto_{};
  std::vector<R> c_;
};

template <class R>
Poly<R> pow(const Poly<R>& a, std::uint64_t e) {
  Poly<R> r = Poly<R>::constant(one_like(a.proto()));
  Poly<R> b = a;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

template <class R>
Poly<R> powmod(const Poly<R>& a, std::uint64_t e, const Poly<R>& m) {
  Poly<R> r = Poly<R>::constant(one_like(a.proto())) % m;
  Poly<R> b = a % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return r;
}

template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
  while (!b.is_zero()) {
    Poly<R> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Bezout: returns (g, s) with s*a = g mod b, g = gcd monic.
template <class R>
std::pair<Poly<R>, Poly<R>> half_gcdext(const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r0 = a, r1 = b;
  Poly<R> s0 = Poly<R>::constant(one_like(a.proto())), s1(a.proto());
  while (!r1.is_zero()) {
    auto [qq, rr] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rr);
    Poly<R> s2 = s0 - qq * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  R inv = inverse(r0.lc());
  return {inv * r0, inv * s0};
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Poly<R>& a) {
  if (a.is_zero()) return os << "0";
  bool first = true;
  for (int i = a.degree(); i >= 0; --i) {
    const R& c = a.coeffs()[i];
    if (ring_is_zero(c)) continue;
    if (!first) os << " + ";
    first = false;
    os << c;
    if (i > 0) os << "*t";
    if (i > 1) os << "^" << i;
  }
  return os;
}

// ring interface, so Poly can be a coefficient ring of Series / OrePoly
template <class R>
Poly<R> zero_like(const Poly<R>& a) {
  return Poly<R>(a.proto());
}
template <class R>
Poly<R> one_like(const Poly<R>& a) {
  return Poly<R>::constant(one_like(a.proto()));
}
template <class R>
bool is_zero(const Poly<R>& a) {
  return a.is_zero();
}
template <class R>
bool is_unit(const Poly<R>& a) {
  return a.degree() == 0 && is_unit(a.coeffs()[0]);
}
template <class R>
Poly<R> inverse(const Poly<R>& a) {
  if (!is_unit(a)) throw DomainError("inverse of a non-unit polynomial");
  return Poly<R>::constant(inverse(a.coeffs()[0]));
}
template <class R>
Poly<R> frob(const Poly<R>& a) {
  return a.frobenius();
}
template <class R>
std::uint64_t q_of(const Poly<R>& a) {
  return q_of(a.proto());
}
template <class R>
std::uint32_t char_of(const Poly<R>& a) {
  return char_of(a.proto());
}
template <class R>
Poly<R> embed(const R& c, const Poly<R>& like) {
  return Poly<R>::constant(embed(c, like.proto()));
}
template <class R>
Poly<R> embed(const Poly<R>& c, const Poly<R>&) {
  return c;
}

using PolyFe = Poly<Fe>;

}  // namespace drinfeld

#endif  // DRINFELD_POLY_HPP
