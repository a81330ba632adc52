#ifndef DRINFELD_COMMANDS_HPP
#define DRINFELD_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/json_io.hpp"

namespace drinfeld {

// F_q for a prime power q; DomainError otherwise. p, if given, must match.
FieldPtr fq_from_q(std::uint64_t q, std::optional<std::uint32_t> p = std::nullopt);

// "t^2+t+1", "2t+1", "t" or a coefficient list "1,1,1" (lowest degree first)
PolyFe parse_poly(const FieldPtr& fq, const std::string& s);

// {a1, a2, bh, l} mod x^prec, with a header naming q and prec
json td_coeffs_json(std::uint64_t q, long prec);

struct WeilRequest {
  std::uint64_t q = 2;
  unsigned ext = 2;  // k = F_{q^ext}
  std::string n = "t";
  std::uint64_t seed = 1;
  // theta, alpha1, alpha2 as element indices of k; otherwise a seeded sample
  std::optional<std::vector<std::uint64_t>> module;
  // indices into the sorted list of E[n]; default: the A/(n)-basis
  std::optional<std::uint64_t> P, Q;
  std::optional<long long> scale_h;  // c in F_q^x, replaces H by c^{-1} H
};
json weil_json(const WeilRequest& r);

// Cusp de Rham data: pi(i(dX)), <dX, b_h tau>, coordinate determinant,
// KS(d/dx), its autodual form and the pairing on {dX, eta}.
json derham_json(std::uint64_t q, long prec);

struct Check {
  std::string key;
  std::string identity;
  std::string status;  // "pass", "fail" or "unverified"
  std::string detail;
};

struct VerifyOptions {
  std::vector<std::uint64_t> q{2, 3};
  unsigned ext = 2;
  long prec = 16;
  std::string n = "t";
  std::uint64_t seed = 1;
  std::optional<std::string> golden_dir;
};

struct Report {
  std::string suite;
  json grid;
  std::vector<Check> checks;  // sorted by key

  bool failed() const;
  json to_json() const;
};

const std::vector<std::string>& suite_names();  // algebra ... derham
// Grid points run concurrently; the report does not depend on their order.
// ResourceCapError propagates.
Report run_verify(const std::string& suite, const VerifyOptions& opt);

std::string golden_file_name(std::uint64_t q, long prec);

}  // namespace drinfeld

#endif  // DRINFELD_COMMANDS_HPP
