#include "drinfeld/field.hpp"

#include <algorithm>
#include <limits>

namespace drinfeld {

namespace {

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FieldPtr FiniteField::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw DomainError("characteristic must be prime");
  if (p > (1u << 30)) throw UnsupportedError("characteristic too large");
  auto f = std::shared_ptr<FiniteField>(new FiniteField());
  f->p_ = p;
  f->n_ = 1;
  f->d_ = 1;
  f->e_ = 1;
  f->q_ = p;
  return f;
}

FieldPtr FiniteField::constants(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  auto fp = prime(p);
  if (modulus.size() <= 2) return fp;  // degree 1: F_q = F_p
  std::vector<Fe> m;
  m.reserve(modulus.size());
  for (auto c : modulus) m.push_back(Fe::from_int(fp, c));
  auto f = extension_unchecked(fp, m);
  auto mut = std::const_pointer_cast<FiniteField>(f);
  mut->e_ = mut->n_;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < mut->n_; ++i) q *= p;
  mut->q_ = q;
  return f;
}

FieldPtr FiniteField::extension_unchecked(const FieldPtr& base, const std::vector<Fe>& modulus) {
  if (!base) throw DomainError("extension of a null field");
  if (modulus.size() < 2) throw DomainError("extension modulus must have degree >= 1");
  if (!modulus.back().is_one()) throw DomainError("extension modulus must be monic");
  auto f = std::shared_ptr<FiniteField>(new FiniteField());
  f->p_ = base->p_;
  f->d_ = static_cast<unsigned>(modulus.size() - 1);
  f->n_ = base->n_ * f->d_;
  f->e_ = base->e_;
  f->q_ = base->q_;
  f->base_ = base;
  f->mod_.reserve(f->n_);
  for (unsigned i = 0; i < f->d_; ++i) {
    if (!same_field(modulus[i].field(), base))
      throw DomainError("extension modulus coefficients must lie in the base field");
    for (auto c : modulus[i].coords()) f->mod_.push_back(c);
  }
  return f;
}

std::uint64_t FiniteField::order() const {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n_; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / 2 / p_)
      throw ResourceCapError("field order exceeds 63 bits");
    r *= p_;
  }
  return r;
}

std::vector<Fe> FiniteField::modulus() const {
  std::vector<Fe> m;
  if (!base_) return m;
  const unsigned nb = base_->n_;
  for (unsigned i = 0; i < d_; ++i) {
    Fe::Coords c(mod_.begin() + i * nb, mod_.begin() + (i + 1) * nb);
    m.push_back(Fe::from_coords(base_, c));
  }
  m.push_back(Fe::one(base_));
  return m;
}

bool FiniteField::same_as(const FiniteField& o) const {
  if (this == &o) return true;
  if (p_ != o.p_ || n_ != o.n_ || d_ != o.d_ || q_ != o.q_ || mod_ != o.mod_) return false;
  if (!base_ || !o.base_) return !base_ && !o.base_;
  return base_->same_as(*o.base_);
}

bool FiniteField::contains(const FiniteField& sub) const {
  for (const FiniteField* f = this; f; f = f->base_.get())
    if (f->same_as(sub)) return true;
  return false;
}

unsigned FiniteField::height() const { return base_ ? base_->height() + 1 : 0; }

void FiniteField::mul_raw(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  if (!base_) {
    out[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[0]) * b[0] % p_);
    return;
  }
  const unsigned nb = base_->n_;
  const unsigned d = d_;
  std::vector<std::uint32_t> tmp((2 * d - 1) * nb, 0);
  std::vector<std::uint32_t> scratch(nb);
  auto add_into = [&](std::uint32_t* dst, const std::uint32_t* src) {
    for (unsigned k = 0; k < nb; ++k) {
      std::uint32_t s = dst[k] + src[k];
      dst[k] = s >= p_ ? s - p_ : s;
    }
  };
  auto sub_into = [&](std::uint32_t* dst, const std::uint32_t* src) {
    for (unsigned k = 0; k < nb; ++k) dst[k] = dst[k] >= src[k] ? dst[k] - src[k] : dst[k] + p_ - src[k];
  };
  auto chunk_zero = [&](const std::uint32_t* x) {
    for (unsigned k = 0; k < nb; ++k)
      if (x[k]) return false;
    return true;
  };
  for (unsigned i = 0; i < d; ++i) {
    if (chunk_zero(a + i * nb)) continue;
    for (unsigned j = 0; j < d; ++j) {
      if (chunk_zero(b + j * nb)) continue;
      base_->mul_raw(a + i * nb, b + j * nb, scratch.data());
      add_into(tmp.data() + (i + j) * nb, scratch.data());
    }
  }
  // z^d = -sum m_i z^i
  for (unsigned k = 2 * d - 2; k >= d; --k) {
    const std::uint32_t* c = tmp.data() + k * nb;
    if (!chunk_zero(c)) {
      for (unsigned i = 0; i < d; ++i) {
        base_->mul_raw(c, mod_.data() + i * nb, scratch.data());
        sub_into(tmp.data() + (k - d + i) * nb, scratch.data());
      }
    }
    if (k == d) break;
  }
  std::copy(tmp.begin(), tmp.begin() + d * nb, out);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

// ---------------------------------------------------------------- Fe

Fe::Fe(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw DomainError("element of a null field");
  c_.assign(field_->degree(), 0);
}

Fe Fe::one(const FieldPtr& field) {
  Fe r(field);
  r.c_[0] = 1;
  return r;
}

Fe Fe::from_int(const FieldPtr& field, long long v) {
  Fe r(field);
  long long p = field->characteristic();
  long long m = v % p;
  if (m < 0) m += p;
  r.c_[0] = static_cast<std::uint32_t>(m);
  return r;
}

Fe Fe::from_coords(const FieldPtr& field, Coords coords) {
  Fe r(field);
  if (coords.size() > r.c_.size()) throw DomainError("too many coordinates for field");
  const std::uint32_t p = field->characteristic();
  for (std::size_t i = 0; i < coords.size(); ++i) r.c_[i] = coords[i] % p;
  return r;
}

Fe Fe::from_index(const FieldPtr& field, std::uint64_t index) {
  Fe r(field);
  const std::uint32_t p = field->characteristic();
  for (auto& c : r.c_) {
    c = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  if (index != 0) throw DomainError("element index out of range");
  return r;
}

std::uint64_t Fe::index() const {
  std::uint64_t r = 0;
  const std::uint32_t p = field_->characteristic();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * p + *it;
  return r;
}

bool Fe::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t c) { return c == 0; });
}

bool Fe::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t c) { return c == 0; });
}

void Fe::require_same(const Fe& o) const {
  if (!field_ || !o.field_) throw DomainError("arithmetic on a detached field element");
  if (!same_field(field_, o.field_)) throw DomainError("field elements from different fields");
}

Fe& Fe::operator+=(const Fe& o) {
  require_same(o);
  const std::uint32_t p = field_->characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::uint32_t s = c_[i] + o.c_[i];
    c_[i] = s >= p ? s - p : s;
  }
  return *this;
}

Fe& Fe::operator-=(const Fe& o) {
  require_same(o);
  const std::uint32_t p = field_->characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
  return *this;
}

Fe& Fe::operator*=(const Fe& o) {
  require_same(o);
  if (c_.size() == 1) {
    c_[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c_[0]) * o.c_[0] % field_->characteristic());
    return *this;
  }
  Coords out(c_.size());
  field_->mul_raw(c_.data(), o.c_.data(), out.data());
  c_ = std::move(out);
  return *this;
}

Fe Fe::operator-() const {
  Fe r = *this;
  const std::uint32_t p = field_->characteristic();
  for (auto& c : r.c_) c = c ? p - c : 0;
  return r;
}

bool operator==(const Fe& a, const Fe& b) {
  if (!a.field_ || !b.field_) return !a.field_ && !b.field_;
  if (!same_field(a.field_, b.field_)) return false;
  return a.c_ == b.c_;
}

bool operator<(const Fe& a, const Fe& b) {
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

Fe Fe::pow(std::uint64_t e) const {
  Fe result = one(field_);
  Fe base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Fe Fe::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero field element");
  return pow(field_->order() - 2);
}

Fe Fe::frobenius() const { return pow(field_->q()); }

Fe Fe::lift_to(const FieldPtr& target) const {
  if (same_field(field_, target)) return *this;
  if (!target || !target->base()) throw DomainError("cannot lift: target does not contain the field");
  Fe below = lift_to(target->base());
  Fe r(target);
  std::copy(below.c_.begin(), below.c_.end(), r.c_.begin());
  return r;
}

std::optional<Fe> Fe::descend_to(const FieldPtr& sub) const {
  if (same_field(field_, sub)) return *this;
  if (!field_->base()) return std::nullopt;
  const unsigned nb = field_->base()->degree();
  for (std::size_t i = nb; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  Fe below = Fe::from_coords(field_->base(), Coords(c_.begin(), c_.begin() + nb));
  return below.descend_to(sub);
}

std::ostream& operator<<(std::ostream& os, const Fe& x) {
  if (!x.field_) return os << "<detached>";
  if (x.c_.size() == 1) return os << x.c_[0];
  os << '[';
  for (std::size_t i = 0; i < x.c_.size(); ++i) os << (i ? "," : "") << x.c_[i];
  return os << ']';
}

}  // namespace drinfeld
