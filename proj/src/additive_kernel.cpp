#include "drinfeld/additive_kernel.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "drinfeld/matrix.hpp"
#include "drinfeld/tower.hpp"

namespace drinfeld {

namespace {

constexpr std::uint64_t kMaxPoints = 1u << 20;

bool by_index(const Fe& a, const Fe& b) { return a.index() < b.index(); }

FpMatrix eval_matrix(const OrePoly<Fe>& f, const FieldPtr& field) {
  const unsigned n = field->degree();
  FpMatrix m(n, n, field->characteristic());
  OrePoly<Fe> g = f.map([&](const Fe& c) { return c.lift_to(field); });
  for (unsigned j = 0; j < n; ++j) {
    Fe::Coords e(n, 0);
    e[j] = 1;
    Fe img = ore_eval(g, Fe::from_coords(field, e));
    for (unsigned i = 0; i < n; ++i) m(i, j) = img.coords()[i];
  }
  return m;
}

std::vector<Fe> points_from_fp_basis(const std::vector<std::vector<std::uint32_t>>& basis, const FieldPtr& field) {
  const std::uint32_t p = field->characteristic();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    count *= p;
    if (count > kMaxPoints) throw ResourceCapError("kernel too large to enumerate");
  }
  std::vector<Fe> out;
  out.reserve(count);
  const unsigned n = field->degree();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Fe::Coords c(n, 0);
    std::uint64_t rest = idx;
    for (const auto& b : basis) {
      const std::uint64_t a = rest % p;
      rest /= p;
      if (!a) continue;
      for (unsigned i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>((c[i] + a * b[i]) % p);
    }
    out.push_back(Fe::from_coords(field, c));
  }
  std::sort(out.begin(), out.end(), by_index);
  return out;
}

}  // namespace

std::vector<Fe> additive_kernel_over(const OrePoly<Fe>& f, const FieldPtr& field) {
  if (f.is_zero()) throw DomainError("kernel of the zero additive polynomial");
  return points_from_fp_basis(eval_matrix(f, field).kernel(), field);
}

KernelResult additive_kernel(const OrePoly<Fe>& f, unsigned maxdeg, bool allow_inseparable) {
  if (f.is_zero()) throw DomainError("kernel of the zero additive polynomial");
  const FieldPtr k = f.proto().field();
  if (f.coeffs()[0].is_zero()) {
    if (!allow_inseparable) throw InseparableError("additive polynomial with zero constant coefficient is inseparable");
    KernelResult r;
    r.field = k;
    r.points = additive_kernel_over(f, k);
    r.basis = fq_basis(r.points, k);
    return r;
  }
  const unsigned e = k->fq_degree();
  const std::size_t want = static_cast<std::size_t>(e) * static_cast<std::size_t>(f.degree());
  std::size_t best = 0;
  for (unsigned M = 1; M <= maxdeg; ++M) {
    FieldPtr K = extend(k, M);
    FpMatrix m = eval_matrix(f, K);
    const std::size_t dim = K->degree() - m.rank();
    best = std::max(best, dim);
    if (dim == want) {
      KernelResult r;
      r.field = K;
      r.extension = M;
      r.points = points_from_fp_basis(m.kernel(), K);
      r.basis = fq_basis(r.points, K);
      return r;
    }
  }
  throw ResourceCapError("additive_kernel: extension degree cap " + std::to_string(maxdeg) + " exceeded; largest kernel found has F_p-dimension " +
                         std::to_string(best) + " of " + std::to_string(want));
}

std::vector<Fe> span_fq(const std::vector<Fe>& basis, const FieldPtr& field) {
  std::vector<Fe> fq;
  for (const Fe& c : all_elements(constant_field(field))) fq.push_back(c.lift_to(field));
  std::vector<Fe> pts{Fe::zero(field)};
  for (const Fe& b : basis) {
    std::vector<Fe> next;
    next.reserve(pts.size() * fq.size());
    for (const Fe& pt : pts)
      for (const Fe& c : fq) next.push_back(pt + c * b);
    pts = std::move(next);
    if (pts.size() > kMaxPoints) throw ResourceCapError("span too large to enumerate");
  }
  std::sort(pts.begin(), pts.end(), by_index);
  return pts;
}

std::vector<Fe> fq_basis(const std::vector<Fe>& points, const FieldPtr& field) {
  std::vector<Fe> basis;
  std::set<std::uint64_t> span{0};
  std::vector<Fe> sorted = points;
  std::sort(sorted.begin(), sorted.end(), by_index);
  for (const Fe& pt : sorted) {
    if (span.count(pt.index())) continue;
    basis.push_back(pt);
    span.clear();
    for (const Fe& s : span_fq(basis, field)) span.insert(s.index());
  }
  return basis;
}

}  // namespace drinfeld
