#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace antidiag {

bool is_prime(std::uint64_t n) noexcept;

/// (p, m) with q = p^m, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power_decomposition(std::uint64_t q);

/// The field F_q with elements encoded as integers sum c_i p^i, where the c_i
/// are the coefficients of the residue polynomial. The defining modulus is
/// the lexicographically least monic irreducible polynomial of degree m,
/// comparing coefficient vectors from the top.
class FiniteField {
 public:
  /// Throws Error(InvalidParams) unless q is a prime power.
  explicit FiniteField(std::uint64_t q);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint64_t size() const noexcept { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
  /// Multiplicative inverse; a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const noexcept { return inv_[a]; }

  /// Smallest encoded generator of the multiplicative group.
  std::uint32_t primitive_element() const noexcept { return primitive_; }
  /// 1, x, x^2, ... as encoded elements: a basis of F_q over F_p.
  std::vector<std::uint32_t> additive_basis() const;
  /// Coefficients c_0..c_{m-1} of the monic modulus (leading 1 implied).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

 private:
  std::uint64_t p_ = 0;
  unsigned m_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
  std::uint32_t primitive_ = 1;
};

}  // namespace antidiag
