#ifndef DRINFELD_JSON_IO_HPP
#define DRINFELD_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include <string>

#include "drinfeld/module.hpp"
#include "drinfeld/ore.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// {"p": p, "levels": [[modulus over the level below, F_p digits]...]}
json field_to_json(const FieldPtr& f);

// coordinate vector over F_p
json to_json(const Fe& x);
// {"t": [c0, c1, ...]}
json to_json(const PolyFe& a);
// {"var": "x", "val": v, "prec": N, "coeffs": [...]}, coeffs dense from x^val
// up to x^{prec-1}; an exact series has prec null and lists what is stored.
json to_json(const SeriesA& s);
// {"tau": [...]}
json to_json(const OrePoly<Fe>& f);
json to_json(const DrinfeldModule<Fe>& E);

Fe fe_from_json(const FieldPtr& f, const json& j);
PolyFe poly_from_json(const FieldPtr& f, const json& j);
SeriesA series_from_json(const FieldPtr& fq, const json& j);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

// JSON pointer of the first place where a and b differ, empty if equal.
std::string first_difference(const json& a, const json& b);

}  // namespace drinfeld

#endif  // DRINFELD_JSON_IO_HPP
