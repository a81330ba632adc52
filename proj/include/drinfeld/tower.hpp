#ifndef DRINFELD_TOWER_HPP
#define DRINFELD_TOWER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "drinfeld/field.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

// Default F_p-modulus of F_{p^e} (Conway polynomials for p <= 7, e <= 4),
// lowest degree first, leading 1 included. Empty if not tabulated.
std::vector<std::uint32_t> conway_modulus(std::uint32_t p, unsigned e);

// F_q with q = p^e. Without an explicit modulus the Conway table is used,
// then the smallest irreducible. DomainError if the given modulus is reducible.
FieldPtr make_fq(std::uint32_t p, unsigned e, const std::optional<std::vector<std::uint32_t>>& modulus = std::nullopt);

// Rabin's test over the coefficient field.
bool is_irreducible(const PolyFe& f);

// Smallest monic irreducible of the given degree over `base` (index order).
PolyFe smallest_irreducible(const FieldPtr& base, unsigned degree);

// base[w]/(f). Uses smallest_irreducible when no modulus is given.
FieldPtr extend(const FieldPtr& base, unsigned degree, const std::optional<PolyFe>& modulus = std::nullopt);

// Every element, in index order. ResourceCapError above `cap` elements.
std::vector<Fe> all_elements(const FieldPtr& field, std::uint64_t cap = 1u << 22);

// The designated constant field F_q under a tower level.
FieldPtr constant_field(const FieldPtr& field);

}  // namespace drinfeld

#endif  // DRINFELD_TOWER_HPP
