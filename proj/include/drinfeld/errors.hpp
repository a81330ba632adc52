#ifndef DRINFELD_ERRORS_HPP
#define DRINFELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace drinfeld {

// Raised when a truncated computation would report digits it does not know.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inverting a non-unit, dividing by zero, mixing incompatible rings.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// An extension-degree or precision budget was exhausted.
struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Additive polynomial with zero constant coefficient where a separable one is required.
struct InseparableError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace drinfeld

#endif  // DRINFELD_ERRORS_HPP
