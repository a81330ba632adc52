#ifndef DRINFELD_ORE_HPP
#define DRINFELD_ORE_HPP

#include <algorithm>
#include <limits>
#include <ostream>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/field.hpp"

namespace drinfeld {

// Twisted polynomials sum b_i tau^i over a commutative ring B with
// tau b = b^q tau, where b^q is the ring q-th power frob(b).
template <class B>
class OrePoly {
 public:
  static constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

  OrePoly() = default;
  explicit OrePoly(const B& proto) : proto_(zero_like(proto)) {}
  OrePoly(std::vector<B> coeffs, const B& proto) : proto_(zero_like(proto)), c_(std::move(coeffs)) { trim(); }

  static OrePoly constant(const B& b) { return OrePoly(std::vector<B>{b}, b); }
  static OrePoly tau(const B& proto, std::size_t k = 1) {
    std::vector<B> v(k + 1, zero_like(proto));
    v[k] = one_like(proto);
    return OrePoly(std::move(v), proto);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<B>& coeffs() const { return c_; }
  const B& proto() const { return proto_; }
  B coeff(std::size_t i) const { return i < c_.size() ? c_[i] : proto_; }
  B lc() const { return c_.empty() ? proto_ : c_.back(); }

  OrePoly& operator+=(const OrePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), proto_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  OrePoly& operator-=(const OrePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), proto_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
  OrePoly operator-() const {
    OrePoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  // left scalar multiplication b * f
  friend OrePoly operator*(const B& s, const OrePoly& f) {
    std::vector<B> v = f.c_;
    for (auto& c : v) c = s * c;
    return OrePoly(std::move(v), f.proto_);
  }
  friend OrePoly operator*(const OrePoly& f, const OrePoly& g) { return mul_trunc(f, g, kNoCap); }
  OrePoly& operator*=(const OrePoly& o) { return *this = *this * o; }
  friend bool operator==(const OrePoly& a, const OrePoly& b) {
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (!(a.coeff(i) == b.coeff(i))) return false;
    return true;
  }

  // Product with tau-degrees above maxdeg dropped. Coefficient k only uses
  // factor coefficients of degree <= k, so the kept part is exact.
  static OrePoly mul_trunc(const OrePoly& f, const OrePoly& g, std::size_t maxdeg) {
    if (f.c_.empty() || g.c_.empty()) return OrePoly(f.proto_);
    std::size_t len = f.c_.size() + g.c_.size() - 1;
    if (maxdeg != kNoCap) len = std::min(len, maxdeg + 1);
    std::vector<B> out(len, f.proto_);
    // twisted copies frob^i(g)
    std::vector<B> tw(g.c_.begin(), g.c_.begin() + static_cast<long>(std::min(g.c_.size(), len)));
    for (std::size_t i = 0; i < f.c_.size() && i < len; ++i) {
      if (i > 0)
        for (auto& c : tw) c = frob(c);
      if (ring_is_zero(f.c_[i])) continue;
      for (std::size_t j = 0; j < tw.size() && i + j < len; ++j) out[i + j] += f.c_[i] * tw[j];
    }
    return OrePoly(std::move(out), f.proto_);
  }

  OrePoly truncate(std::size_t maxdeg) const {
    std::vector<B> v(c_.begin(), c_.begin() + static_cast<long>(std::min(c_.size(), maxdeg + 1)));
    return OrePoly(std::move(v), proto_);
  }

  // apply a map to every coefficient (base change)
  template <class F>
  auto map(F&& fn) const {
    using S = decltype(fn(proto_));
    std::vector<S> v;
    for (const auto& c : c_) v.push_back(fn(c));
    return OrePoly<S>(std::move(v), fn(proto_));
  }

 private:
  void trim() {
    while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
  }

  B proto_{};
  std::vector<B> c_;
};

template <class B>
OrePoly<B> pow(const OrePoly<B>& f, unsigned e) {
  OrePoly<B> r = OrePoly<B>::constant(one_like(f.proto()));
  for (unsigned i = 0; i < e; ++i) r = r * f;
  return r;
}

// sum b_i pt^{q^i} for pt in a B-algebra S (embed maps B into S).
template <class B, class S>
S ore_eval(const OrePoly<B>& f, const S& pt) {
  S acc = zero_like(pt);
  S power = pt;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) power = frob(power);
    if (ring_is_zero(f.coeffs()[i])) continue;
    acc += embed(f.coeffs()[i], pt) * power;
  }
  return acc;
}

template <class B>
std::ostream& operator<<(std::ostream& os, const OrePoly<B>& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (ring_is_zero(f.coeffs()[i])) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << f.coeffs()[i] << ")";
    if (i > 0) os << "*tau";
    if (i > 1) os << "^" << i;
  }
  return os;
}

}  // namespace drinfeld

#endif  // DRINFELD_ORE_HPP
