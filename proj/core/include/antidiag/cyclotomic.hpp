#pragma once

#include "antidiag/rational.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace antidiag {

/// Arithmetic in Z[zeta_e], zeta_e = exp(2 pi i / e). Values are integer
/// coefficient vectors on 1, zeta, ..., zeta^(phi(e)-1), i.e. polynomials
/// reduced modulo the e-th cyclotomic polynomial; this representation is
/// unique, so a value is zero exactly when all its coefficients are.
class CyclotomicField {
 public:
  using Value = std::vector<BigInt>;

  explicit CyclotomicField(std::uint64_t e);

  std::uint64_t order() const noexcept { return e_; }
  std::size_t dimension() const noexcept { return phi_; }
  /// Coefficients of Phi_e from x^0 up (monic).
  const std::vector<BigInt>& cyclotomic_polynomial() const noexcept { return phi_poly_; }

  Value zero() const { return Value(phi_, 0); }
  Value from_integer(const BigInt& n) const;
  /// zeta^k for any integer k.
  const Value& root_power(std::int64_t k) const;
  /// sum over l of counts[l] * zeta^l; counts has length e.
  Value from_exponent_counts(std::span<const std::uint64_t> counts) const;

  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value mul(const Value& a, const Value& b) const;
  Value scale(const Value& a, const BigInt& s) const;
  /// Complex conjugate (zeta -> zeta^-1).
  Value conj(const Value& a) const;

  static bool is_zero(const Value& a);
  /// The value as an ordinary integer, if it is one.
  static std::optional<BigInt> as_integer(const Value& a);

  std::complex<double> to_complex(const Value& a) const;
  /// e.g. "1 + 2z^3 - z^5" with z = zeta_e; "0" for zero.
  std::string to_string(const Value& a) const;

 private:
  Value reduce(const std::vector<BigInt>& poly) const;

  std::uint64_t e_;
  std::size_t phi_;
  std::vector<BigInt> phi_poly_;
  std::vector<Value> powers_;  // zeta^l reduced, l in [0, e)
};

}  // namespace antidiag
