#pragma once

#include "antidiag/limits.hpp"

#include <cstdint>
#include <vector>

namespace antidiag::modp {

__extension__ typedef unsigned __int128 u128;

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) noexcept;
/// Inverse of a nonzero residue modulo the prime p.
std::uint64_t inv(std::uint64_t a, std::uint64_t p) noexcept;
/// Least generator of (Z/p)^*.
std::uint64_t primitive_root(std::uint64_t p);

using Matrix = std::vector<std::vector<std::uint64_t>>;

/// Characteristic polynomial det(xI - A), coefficients from x^0 upward
/// (monic, length n + 1), via reduction to upper Hessenberg form.
std::vector<std::uint64_t> charpoly(Matrix a, std::uint64_t p);

/// Basis of the right null space {u : A u = 0}.
std::vector<std::vector<std::uint64_t>> nullspace(Matrix a, std::uint64_t p);

/// Reduced row echelon form; zero rows are dropped, pivot columns returned.
std::vector<std::size_t> rref(Matrix& rows, std::uint64_t p);

}  // namespace antidiag::modp

namespace antidiag {

/// Prime and root of unity for the modular character computation:
/// p is the least prime with p = 1 (mod exponent) and p^2 > 4|G|, and
/// root = g^((p-1)/exponent) for the least primitive root g.
struct DixonParams {
  std::uint64_t exponent = 1;
  std::uint64_t prime = 2;
  std::uint64_t root = 1;
};

/// Throws Error(NoPrimeFound) if no prime is found below limits.prime_search_bound.
DixonParams choose_dixon_params(std::uint64_t order, std::uint64_t exponent,
                                const Limits& limits = {});

}  // namespace antidiag
