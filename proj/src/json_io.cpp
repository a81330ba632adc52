#include "drinfeld/json_io.hpp"

#include <algorithm>
#include <vector>

namespace drinfeld {

json field_to_json(const FieldPtr& f) {
  std::vector<FieldPtr> chain;
  for (FieldPtr l = f; l && !l->is_prime(); l = l->base()) chain.push_back(l);
  std::reverse(chain.begin(), chain.end());
  json levels = json::array();
  for (const auto& l : chain) levels.push_back({{"degree", l->relative_degree()}, {"modulus", l->raw_modulus()}});
  return {{"p", f->characteristic()}, {"q", f->q()}, {"levels", levels}};
}

json to_json(const Fe& x) {
  json a = json::array();
  for (auto c : x.coords()) a.push_back(c);
  return a;
}

json to_json(const PolyFe& a) {
  json c = json::array();
  for (const Fe& x : a.coeffs()) c.push_back(to_json(x));
  return {{"t", c}};
}

json to_json(const SeriesA& s) {
  json c = json::array();
  json out{{"var", "x"}};
  if (s.is_exact()) {
    for (const PolyFe& a : s.stored()) c.push_back(to_json(a));
    out["prec"] = nullptr;
    out["val"] = s.is_zero() ? json(nullptr) : json(s.valuation());
  } else {
    const long v = s.effective_valuation();
    for (long n = v; n < s.precision(); ++n) c.push_back(to_json(s.coeff(n)));
    out["prec"] = s.precision();
    out["val"] = v;
  }
  out["coeffs"] = c;
  return out;
}

json to_json(const OrePoly<Fe>& f) {
  json c = json::array();
  for (const Fe& x : f.coeffs()) c.push_back(to_json(x));
  return {{"tau", c}};
}

json to_json(const DrinfeldModule<Fe>& E) {
  return {{"base", field_to_json(E.theta().field())}, {"theta", to_json(E.theta())}, {"rank", E.rank()}, {"phi_t", to_json(E.phi_t())}};
}

Fe fe_from_json(const FieldPtr& f, const json& j) {
  if (!j.is_array() || j.size() != f->degree()) throw DomainError("field element: expected " + std::to_string(f->degree()) + " coordinates");
  Fe::Coords c;
  for (const auto& x : j) {
    auto v = x.get<std::uint32_t>();
    if (v >= f->characteristic()) throw DomainError("field element: coordinate out of range");
    c.push_back(v);
  }
  return Fe::from_coords(f, c);
}

PolyFe poly_from_json(const FieldPtr& f, const json& j) {
  std::vector<Fe> c;
  for (const auto& x : j.at("t")) c.push_back(fe_from_json(f, x));
  return PolyFe(c, Fe::zero(f));
}

SeriesA series_from_json(const FieldPtr& fq, const json& j) {
  if (j.at("var") != "x") throw DomainError("series: unexpected variable");
  const PolyFe zero(Fe::zero(fq));
  std::vector<PolyFe> c;
  for (const auto& x : j.at("coeffs")) c.push_back(poly_from_json(fq, x));
  const long prec = j.at("prec").is_null() ? SeriesA::kExact : j.at("prec").get<long>();
  const long val = j.at("val").is_null() ? 0 : j.at("val").get<long>();
  return SeriesA::from_coeffs(val, c, prec, zero);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string first_difference(const json& a, const json& b) {
  json patch = json::diff(a, b);
  if (patch.empty()) return "";
  auto path = patch.front().at("path").get<std::string>();
  return path.empty() ? "/" : path;
}

}  // namespace drinfeld
