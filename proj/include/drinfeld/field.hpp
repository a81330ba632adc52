#ifndef DRINFELD_FIELD_HPP
#define DRINFELD_FIELD_HPP

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include "drinfeld/errors.hpp"

namespace drinfeld {

class Fe;
class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

// One level of a finite field tower F_p = L_0 ⊂ L_1 ⊂ ... where
// L_{i+1} = L_i[z]/(modulus). Elements of a level are stored as flat vectors
// of F_p coordinates, chunked by the relative basis 1, z, ..., z^{d-1}.
//
// Every level also records q, the order of the designated constant field
// F_q of the tower; the Frobenius used by Ore polynomials is x -> x^q.
class FiniteField {
 public:
  // F_p, itself serving as F_q.
  static FieldPtr prime(std::uint32_t p);
  // F_q = F_p[z]/(modulus) with a monic modulus given by F_p coefficients,
  // lowest degree first (leading 1 included). Irreducibility is not checked
  // here; see make_fq in tower.hpp.
  static FieldPtr constants(std::uint32_t p, const std::vector<std::uint32_t>& modulus);
  // base[w]/(modulus) for a monic modulus over base (leading 1 included).
  // Irreducibility is checked by extend() in tower.hpp, not here.
  static FieldPtr extension_unchecked(const FieldPtr& base, const std::vector<Fe>& modulus);

  std::uint32_t characteristic() const { return p_; }
  // Degree over F_p.
  unsigned degree() const { return n_; }
  // Degree over the level below.
  unsigned relative_degree() const { return d_; }
  const FieldPtr& base() const { return base_; }
  bool is_prime() const { return base_ == nullptr; }
  std::uint64_t q() const { return q_; }
  // Degree over the constant field F_q.
  unsigned degree_over_fq() const { return n_ / e_; }
  unsigned fq_degree() const { return e_; }
  // |L|; throws if it does not fit in 63 bits.
  std::uint64_t order() const;
  // Monic modulus over base(), leading coefficient included.
  std::vector<Fe> modulus() const;
  const std::vector<std::uint32_t>& raw_modulus() const { return mod_; }

  // Structural equality of the whole tower below and including this level.
  bool same_as(const FiniteField& other) const;
  // True iff `sub` is this level or one of the levels below it.
  bool contains(const FiniteField& sub) const;
  // Number of levels above F_p.
  unsigned height() const;

  // Raw kernels on coordinate arrays of length degree().
  void mul_raw(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;

 private:
  FiniteField() = default;

  std::uint32_t p_ = 0;
  unsigned n_ = 1;
  unsigned d_ = 1;
  unsigned e_ = 1;
  std::uint64_t q_ = 0;
  FieldPtr base_;
  // d_ chunks of base_->degree() coordinates: the non-leading modulus coefficients.
  std::vector<std::uint32_t> mod_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

// An element of a finite field tower level.
class Fe {
 public:
  using Coords = boost::container::small_vector<std::uint32_t, 4>;

  Fe() = default;
  explicit Fe(FieldPtr field);

  static Fe zero(const FieldPtr& field) { return Fe(field); }
  static Fe one(const FieldPtr& field);
  static Fe from_int(const FieldPtr& field, long long v);
  static Fe from_coords(const FieldPtr& field, Coords coords);
  // Enumeration order: base-p digits of `index` are the F_p coordinates.
  static Fe from_index(const FieldPtr& field, std::uint64_t index);

  std::uint64_t index() const;
  const FieldPtr& field() const { return field_; }
  const Coords& coords() const { return c_; }
  bool attached() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  Fe& operator+=(const Fe& o);
  Fe& operator-=(const Fe& o);
  Fe& operator*=(const Fe& o);
  friend Fe operator+(Fe a, const Fe& b) { return a += b; }
  friend Fe operator-(Fe a, const Fe& b) { return a -= b; }
  friend Fe operator*(Fe a, const Fe& b) { return a *= b; }
  Fe operator-() const;
  friend bool operator==(const Fe& a, const Fe& b);
  friend bool operator<(const Fe& a, const Fe& b);

  Fe pow(std::uint64_t e) const;
  // Multiplicative inverse; DomainError on zero.
  Fe inverse() const;
  // x -> x^q for the tower's constant field.
  Fe frobenius() const;

  // Image under the inclusion into a level above (or equal to) field().
  Fe lift_to(const FieldPtr& target) const;
  // The element as a member of a lower level, if it lies there.
  std::optional<Fe> descend_to(const FieldPtr& sub) const;

  friend std::ostream& operator<<(std::ostream& os, const Fe& x);

 private:
  void require_same(const Fe& o) const;

  FieldPtr field_;
  Coords c_;
};

// Ring interface used by the generic containers (Poly, Series, OrePoly, ...).
inline Fe zero_like(const Fe& x) { return Fe::zero(x.field()); }
inline Fe one_like(const Fe& x) { return Fe::one(x.field()); }
inline bool is_zero(const Fe& x) { return x.is_zero(); }
inline bool is_unit(const Fe& x) { return !x.is_zero(); }
inline Fe inverse(const Fe& x) { return x.inverse(); }
inline Fe frob(const Fe& x) { return x.frobenius(); }
inline std::uint64_t q_of(const Fe& x) { return x.field()->q(); }
inline std::uint32_t char_of(const Fe& x) { return x.field()->characteristic(); }
// Image of an F_q constant in the ring of `like`.
inline Fe embed(const Fe& c, const Fe& like) { return c.lift_to(like.field()); }

// Unqualified forwarding, so class templates with a member is_zero()/inverse()
// still reach the free functions through ADL.
template <class T>
bool ring_is_zero(const T& x) {
  return is_zero(x);
}
template <class T>
bool ring_is_unit(const T& x) {
  return is_unit(x);
}
template <class T>
T ring_inverse(const T& x) {
  return inverse(x);
}

}  // namespace drinfeld

#endif  // DRINFELD_FIELD_HPP
