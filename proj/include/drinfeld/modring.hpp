#ifndef DRINFELD_MODRING_HPP
#define DRINFELD_MODRING_HPP

#include <memory>
#include <ostream>

#include "drinfeld/poly.hpp"

namespace drinfeld {

// Elements of R[t]/(n) for a monic n: A/(n) when R = F_q, k[t]/(n) for the
// motive. n need not be irreducible; nothing here factors it.
template <class R>
class ModElem {
 public:
  using P = Poly<R>;

  ModElem() = default;
  ModElem(P value, std::shared_ptr<const P> modulus) : n_(std::move(modulus)) {
    if (!n_ || n_->degree() < 1) throw DomainError("quotient ring modulus must have positive degree");
    v_ = value % *n_;
  }
  static ModElem make(const P& value, const P& modulus) {
    if (!modulus.is_monic()) throw DomainError("quotient ring modulus must be monic");
    return ModElem(value, std::make_shared<const P>(modulus));
  }

  const P& value() const { return v_; }
  const P& modulus() const { return *n_; }
  const std::shared_ptr<const P>& modulus_ptr() const { return n_; }
  bool is_zero() const { return v_.is_zero(); }

  ModElem& operator+=(const ModElem& o) {
    check(o);
    v_ += o.v_;
    return *this;
  }
  ModElem& operator-=(const ModElem& o) {
    check(o);
    v_ -= o.v_;
    return *this;
  }
  ModElem& operator*=(const ModElem& o) {
    check(o);
    v_ = (v_ * o.v_) % *n_;
    return *this;
  }
  friend ModElem operator+(ModElem a, const ModElem& b) { return a += b; }
  friend ModElem operator-(ModElem a, const ModElem& b) { return a -= b; }
  friend ModElem operator*(ModElem a, const ModElem& b) { return a *= b; }
  friend ModElem operator*(const R& s, ModElem a) {
    a.v_ = s * a.v_;
    return a;
  }
  ModElem operator-() const { return ModElem(-v_, n_); }
  friend bool operator==(const ModElem& a, const ModElem& b) { return a.v_ == b.v_ && *a.n_ == *b.n_; }

  ModElem with_value(const P& v) const { return ModElem(v, n_); }
  ModElem pow(std::uint64_t e) const { return ModElem(powmod(v_, e, *n_), n_); }
  bool is_unit() const { return half_gcdext(v_, *n_).first.degree() == 0; }
  ModElem inverse() const {
    auto [g, s] = half_gcdext(v_, *n_);
    if (g.degree() != 0) throw DomainError("inverse of a non-unit in the quotient ring");
    return ModElem(s, n_);
  }
  // sigma (x) 1: Frobenius on the coefficients, t fixed
  ModElem sigma() const { return ModElem(v_.map([](const R& c) { return frob(c); }), n_); }

 private:
  void check(const ModElem& o) const {
    if (n_ != o.n_ && !(*n_ == *o.n_)) throw DomainError("quotient ring elements with different moduli");
  }

  P v_;
  std::shared_ptr<const P> n_;
};

template <class R>
std::ostream& operator<<(std::ostream& os, const ModElem<R>& a) {
  return os << a.value();
}

template <class R>
ModElem<R> zero_like(const ModElem<R>& a) {
  return a.with_value(Poly<R>(a.value().proto()));
}
template <class R>
ModElem<R> one_like(const ModElem<R>& a) {
  return a.with_value(Poly<R>::constant(one_like(a.value().proto())));
}
template <class R>
bool is_zero(const ModElem<R>& a) {
  return a.is_zero();
}
template <class R>
bool is_unit(const ModElem<R>& a) {
  return a.is_unit();
}
template <class R>
ModElem<R> inverse(const ModElem<R>& a) {
  return a.inverse();
}
// ring q-th power (on k[t]/(n) this is not sigma (x) 1; see ModElem::sigma)
template <class R>
ModElem<R> frob(const ModElem<R>& a) {
  return a.pow(q_of(a.value().proto()));
}
template <class R>
std::uint64_t q_of(const ModElem<R>& a) {
  return q_of(a.value().proto());
}
template <class R>
std::uint32_t char_of(const ModElem<R>& a) {
  return char_of(a.value().proto());
}
template <class R>
ModElem<R> embed(const R& c, const ModElem<R>& like) {
  return like.with_value(Poly<R>::constant(embed(c, like.value().proto())));
}

using ModFe = ModElem<Fe>;

}  // namespace drinfeld

#endif  // DRINFELD_MODRING_HPP
