#ifndef DRINFELD_ADDITIVE_KERNEL_HPP
#define DRINFELD_ADDITIVE_KERNEL_HPP

#include <vector>

#include "drinfeld/field.hpp"
#include "drinfeld/ore.hpp"

namespace drinfeld {

struct KernelResult {
  FieldPtr field;          // F_{q^{mM}}, where the points live
  unsigned extension = 1;  // M
  std::vector<Fe> basis;   // over F_q
  std::vector<Fe> points;  // all of them, sorted by index, 0 first
};

// Zeros of y -> sum b_i y^{q^i} as an F_q-linear map on F_{q^{mM}}, for the
// smallest M <= maxdeg where the kernel has full size q^{deg f}. Linear
// algebra over F_p; no root finding.
//
// Constant coefficient 0 throws InseparableError, unless allow_inseparable,
// in which case the kernel over the coefficient field itself is returned.
KernelResult additive_kernel(const OrePoly<Fe>& f, unsigned maxdeg = 12, bool allow_inseparable = false);

// Kernel over one given field containing the coefficients.
std::vector<Fe> additive_kernel_over(const OrePoly<Fe>& f, const FieldPtr& field);

// All F_q-combinations of the basis, sorted by index.
std::vector<Fe> span_fq(const std::vector<Fe>& basis, const FieldPtr& field);

// A greedy F_q-basis of an F_q-subspace given by its full point set.
std::vector<Fe> fq_basis(const std::vector<Fe>& points, const FieldPtr& field);

}  // namespace drinfeld

#endif  // DRINFELD_ADDITIVE_KERNEL_HPP
