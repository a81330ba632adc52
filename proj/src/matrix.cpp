#include "drinfeld/matrix.hpp"

namespace drinfeld {

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DomainError("inverse of zero mod p");
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::vector<std::size_t> FpMatrix::rref(std::vector<std::uint32_t>* rhs) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t col = 0; col < c_ && r < r_; ++col) {
    std::size_t pr = r;
    while (pr < r_ && (*this)(pr, col) == 0) ++pr;
    if (pr == r_) continue;
    if (pr != r) {
      for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(pr, j), (*this)(r, j));
      if (rhs) std::swap((*rhs)[pr], (*rhs)[r]);
    }
    const std::uint64_t inv = inv_mod_p((*this)(r, col), p_);
    for (std::size_t j = col; j < c_; ++j) (*this)(r, j) = static_cast<std::uint32_t>((*this)(r, j) * inv % p_);
    if (rhs) (*rhs)[r] = static_cast<std::uint32_t>((*rhs)[r] * inv % p_);
    for (std::size_t i = 0; i < r_; ++i) {
      if (i == r) continue;
      const std::uint64_t f = (*this)(i, col);
      if (!f) continue;
      const std::uint64_t nf = p_ - f;
      for (std::size_t j = col; j < c_; ++j) (*this)(i, j) = static_cast<std::uint32_t>(((*this)(i, j) + nf * (*this)(r, j)) % p_);
      if (rhs) (*rhs)[i] = static_cast<std::uint32_t>(((*rhs)[i] + nf * (*rhs)[r]) % p_);
    }
    piv.push_back(col);
    ++r;
  }
  return piv;
}

std::vector<std::vector<std::uint32_t>> FpMatrix::kernel() const {
  FpMatrix m = *this;
  auto piv = m.rref(nullptr);
  std::vector<bool> is_piv(c_, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < c_; ++free) {
    if (is_piv[free]) continue;
    std::vector<std::uint32_t> v(c_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) {
      std::uint32_t a = m(i, free);
      v[piv[i]] = a ? p_ - a : 0;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t FpMatrix::rank() const {
  FpMatrix m = *this;
  return m.rref(nullptr).size();
}

std::optional<std::vector<std::uint32_t>> FpMatrix::solve(const std::vector<std::uint32_t>& b) const {
  FpMatrix m = *this;
  std::vector<std::uint32_t> rhs = b;
  auto piv = m.rref(&rhs);
  for (std::size_t i = piv.size(); i < r_; ++i)
    if (rhs[i] % p_) return std::nullopt;
  std::vector<std::uint32_t> x(c_, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = rhs[i];
  return x;
}

}  // namespace drinfeld
