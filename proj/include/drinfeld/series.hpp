#ifndef DRINFELD_SERIES_HPP
#define DRINFELD_SERIES_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

// Truncated Laurent series sum_{n >= val} c_n x^n known modulo x^prec.
//
// Stored coefficients start at x^val with c_val != 0; anything between the
// last stored coefficient and prec is zero. prec == kExact marks a series
// known exactly (a Laurent polynomial). A series whose known digits are all
// zero is the tracked zero: valuation() reports kExact and prec stays honest.
//
// Reading a coefficient at or above prec throws PrecisionError.
template <class R>
class Series {
 public:
  static constexpr long kExact = 1L << 40;

  Series() = default;
  // tracked zero known mod x^prec
  Series(const R& proto, long prec) : proto_(zero_like(proto)), prec_(clamp(prec)) {}

  static Series exact_zero(const R& proto) { return Series(proto, kExact); }
  static Series constant(const R& c, long prec = kExact) { return from_coeffs(0, {c}, prec, c); }
  static Series monomial(const R& c, long k, long prec = kExact) { return from_coeffs(k, {c}, prec, c); }
  // sum coeffs[i] x^{val+i} mod x^prec
  static Series from_coeffs(long val, std::vector<R> coeffs, long prec, const R& proto) {
    Series s(proto, prec);
    s.val_ = val;
    s.c_ = std::move(coeffs);
    s.normalize();
    return s;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_exact() const { return prec_ >= kExact; }
  long precision() const { return prec_; }
  long valuation() const { return c_.empty() ? kExact : val_; }
  // lowest exponent whose digit may be nonzero: valuation, or prec for a tracked zero
  long effective_valuation() const { return c_.empty() ? prec_ : val_; }
  const R& proto() const { return proto_; }
  // stored coefficients from x^valuation(); empty for zero
  const std::vector<R>& stored() const { return c_; }
  long stored_end() const { return c_.empty() ? effective_valuation() : val_ + static_cast<long>(c_.size()); }

  R coeff(long n) const {
    if (n >= prec_) throw PrecisionError("coefficient of x^" + std::to_string(n) + " beyond precision " + std::to_string(prec_));
    if (c_.empty() || n < val_ || n >= val_ + static_cast<long>(c_.size())) return proto_;
    return c_[n - val_];
  }
  R leading() const {
    if (c_.empty()) throw PrecisionError("leading coefficient of a tracked zero");
    return c_.front();
  }

  Series truncate(long N) const {
    Series r = *this;
    r.prec_ = std::min(prec_, clamp(N));
    r.normalize();
    return r;
  }

  Series& operator+=(const Series& o) { return *this = combine(*this, o, false); }
  Series& operator-=(const Series& o) { return *this = combine(*this, o, true); }
  friend Series operator+(const Series& a, const Series& b) { return combine(a, b, false); }
  friend Series operator-(const Series& a, const Series& b) { return combine(a, b, true); }
  Series operator-() const {
    Series r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) { return mul(a, b, kExact); }
  Series& operator*=(const Series& o) { return *this = mul(*this, o, kExact); }
  friend Series operator*(const R& s, const Series& a) {
    Series r = a;
    for (auto& c : r.c_) c = s * c;
    r.normalize();
    return r;
  }
  // equal to the common precision
  friend bool operator==(const Series& a, const Series& b) { return (a - b).is_zero(); }
  // same digits and same precision
  bool identical(const Series& o) const { return prec_ == o.prec_ && valuation() == o.valuation() && c_ == o.c_; }

  // product known mod x^min(natural precision, cap); the cap just saves work
  static Series mul(const Series& a, const Series& b, long cap) {
    const long va = a.effective_valuation(), vb = b.effective_valuation();
    long prec = std::min({sat_add(va, b.prec_), sat_add(vb, a.prec_), clamp(cap)});
    Series r(a.proto_, prec);
    if (a.c_.empty() || b.c_.empty()) return r;
    const long v = va + vb;
    if (v >= prec) return r;
    long len = static_cast<long>(a.c_.size() + b.c_.size()) - 1;
    len = std::min(len, prec - v);
    std::vector<R> out(static_cast<std::size_t>(len), a.proto_);
    for (long i = 0; i < static_cast<long>(a.c_.size()) && i < len; ++i) {
      if (ring_is_zero(a.c_[i])) continue;
      const long jmax = std::min(static_cast<long>(b.c_.size()), len - i);
      for (long j = 0; j < jmax; ++j) {
        if (ring_is_zero(b.c_[j])) continue;
        out[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.val_ = v;
    r.c_ = std::move(out);
    r.normalize();
    return r;
  }

  // Multiplicative inverse. The leading coefficient must be a unit. An exact
  // input with more than one term needs `cap` (its inverse is infinite).
  Series inverse(long cap = kExact) const {
    if (c_.empty()) throw PrecisionError("inverse of a tracked zero (no known nonzero digit)");
    if (!ring_is_unit(c_.front())) throw DomainError("series inverse: leading coefficient is not a unit");
    const long v = val_;
    long prec = is_exact() ? kExact : prec_ - 2 * v;
    prec = std::min(prec, clamp(cap));
    if (prec >= kExact) {
      if (c_.size() == 1) return monomial(ring_inverse(c_.front()), -v);
      throw PrecisionError("inverse of an exact non-monomial series needs a precision cap");
    }
    const long len = prec - (-v);
    if (len <= 0) return Series(proto_, prec);
    R u0i = ring_inverse(c_.front());
    std::vector<R> b(static_cast<std::size_t>(len), proto_);
    b[0] = u0i;
    for (long n = 1; n < len; ++n) {
      R acc = proto_;
      const long imax = std::min(n, static_cast<long>(c_.size()) - 1);
      for (long i = 1; i <= imax; ++i) {
        if (ring_is_zero(c_[i])) continue;
        acc += c_[i] * b[n - i];
      }
      b[n] = -(u0i * acc);
    }
    return from_coeffs(-v, std::move(b), prec, proto_);
  }

  // d/dx; coefficients pass through (so t is a constant)
  Series derivative() const {
    Series r(proto_, prec_ >= kExact ? kExact : prec_ - 1);
    if (c_.empty()) return r;
    std::vector<R> out(c_.size(), proto_);
    const long p = static_cast<long>(char_of(proto_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      long n = val_ + static_cast<long>(i);
      long k = ((n % p) + p) % p;
      for (long j = 0; j < k; ++j) out[i] += c_[i];
    }
    r.val_ = val_ - 1;
    r.c_ = std::move(out);
    r.normalize();
    return r;
  }

  // multiply by x^k
  Series shift(long k) const {
    Series r = *this;
    r.val_ += k;
    if (!r.is_exact()) r.prec_ = clamp(prec_ + k);
    r.normalize();
    return r;
  }

  // ring q-th power: sum frob(c_n) x^{qn}; optionally truncated at cap
  Series frobenius(long cap = kExact) const {
    const long q = static_cast<long>(q_of(proto_));
    long prec = std::min(is_exact() ? kExact : sat_mul(prec_, q), clamp(cap));
    if (!is_exact() && c_.empty()) return Series(proto_, prec);
    Series r(proto_, prec);
    if (c_.empty()) return r;
    const long v = val_ * q;
    if (v >= prec) return r;
    long len = (static_cast<long>(c_.size()) - 1) * q + 1;
    len = std::min(len, prec - v);
    std::vector<R> out(static_cast<std::size_t>(len), proto_);
    for (std::size_t i = 0; i < c_.size() && static_cast<long>(i) * q < len; ++i) out[i * q] = frob(c_[i]);
    r.val_ = v;
    r.c_ = std::move(out);
    r.normalize();
    return r;
  }

  // f(n, c_n) -> new c_n
  template <class F>
  Series map_indexed(F&& f) const {
    Series r = *this;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f(val_ + static_cast<long>(i), r.c_[i]);
    r.normalize();
    return r;
  }

  static long clamp(long n) { return n >= kExact / 2 ? kExact : n; }

 private:
  static long sat_add(long a, long b) {
    if (a >= kExact / 2 || b >= kExact / 2) return kExact;
    return clamp(a + b);
  }
  static long sat_mul(long a, long b) {
    if (a >= kExact / 2) return kExact;
    if (a > 0 && a > kExact / 2 / b) return kExact;
    return a * b;
  }

  static Series combine(const Series& a, const Series& b, bool subtract) {
    long prec = std::min(a.prec_, b.prec_);
    Series r(a.proto_, prec);
    if (a.c_.empty() && b.c_.empty()) return r;
    long lo = std::min(a.c_.empty() ? prec : a.val_, b.c_.empty() ? prec : b.val_);
    long hi = std::min(prec, std::max(a.c_.empty() ? lo : a.stored_end(), b.c_.empty() ? lo : b.stored_end()));
    if (lo >= hi) return r;
    std::vector<R> out(static_cast<std::size_t>(hi - lo), a.proto_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      long n = a.val_ + static_cast<long>(i);
      if (n >= hi) break;
      out[n - lo] = a.c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
      long n = b.val_ + static_cast<long>(i);
      if (n >= hi) break;
      if (subtract)
        out[n - lo] -= b.c_[i];
      else
        out[n - lo] += b.c_[i];
    }
    r.val_ = lo;
    r.c_ = std::move(out);
    r.normalize();
    return r;
  }

  void normalize() {
    prec_ = clamp(prec_);
    // drop digits at or beyond prec
    if (!c_.empty() && val_ + static_cast<long>(c_.size()) > prec_) {
      long keep = prec_ - val_;
      c_.resize(static_cast<std::size_t>(std::max(0L, keep)), proto_);
    }
    while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && ring_is_zero(c_[lead])) ++lead;
    if (lead) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      val_ += static_cast<long>(lead);
    }
    if (c_.empty()) val_ = 0;
  }

  R proto_{};
  long val_ = 0;
  long prec_ = kExact;
  std::vector<R> c_;
};

template <class R>
Series<R> pow(const Series<R>& a, std::uint64_t e) {
  Series<R> r = Series<R>::constant(one_like(a.proto()));
  Series<R> b = a;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Series<R>& a) {
  if (a.is_zero()) {
    os << "0";
  } else {
    bool first = true;
    for (std::size_t i = 0; i < a.stored().size(); ++i) {
      if (is_zero(a.stored()[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << a.stored()[i] << ")*x^" << a.valuation() + static_cast<long>(i);
    }
  }
  if (!a.is_exact()) os << " + O(x^" << a.precision() << ")";
  return os;
}

// ring interface
template <class R>
Series<R> zero_like(const Series<R>& a) {
  return Series<R>::exact_zero(a.proto());
}
template <class R>
Series<R> one_like(const Series<R>& a) {
  return Series<R>::constant(one_like(a.proto()));
}
template <class R>
bool is_zero(const Series<R>& a) {
  return a.is_zero();
}
template <class R>
bool is_unit(const Series<R>& a) {
  return !a.is_zero() && is_unit(a.leading());
}
template <class R>
Series<R> inverse(const Series<R>& a) {
  return a.inverse();
}
template <class R>
Series<R> frob(const Series<R>& a) {
  return a.frobenius();
}
template <class R>
std::uint64_t q_of(const Series<R>& a) {
  return q_of(a.proto());
}
template <class R>
std::uint32_t char_of(const Series<R>& a) {
  return char_of(a.proto());
}
template <class R, class C>
Series<R> embed(const C& c, const Series<R>& like) {
  return Series<R>::constant(embed(c, like.proto()));
}
template <class R>
Series<R> embed(const R& c, const Series<R>& like) {
  (void)like;
  return Series<R>::constant(c);
}
template <class R>
Series<R> embed(const Series<R>& c, const Series<R>&) {
  return c;
}

// Series over A = F_q[t]: the home of every cusp expansion.
using SeriesA = Series<PolyFe>;

}  // namespace drinfeld

#endif  // DRINFELD_SERIES_HPP
