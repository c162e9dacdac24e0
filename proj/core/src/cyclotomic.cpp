#include "antidiag/cyclotomic.hpp"

#include "antidiag/error.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace antidiag {

namespace {

using IntPoly = std::vector<BigInt>;

/// Quotient of f by a monic g, assuming exact divisibility.
IntPoly divide_exact(IntPoly f, const IntPoly& g) {
  const std::size_t dg = g.size() - 1;
  IntPoly q(f.size() - dg, 0);
  for (std::size_t i = f.size(); i-- > dg;) {
    const BigInt c = f[i];
    if (c == 0) continue;
    q[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) f[i - dg + j] -= c * g[j];
  }
  return q;
}

/// x^e - 1 divided by Phi_d for every proper divisor d, built bottom-up.
IntPoly cyclotomic_poly(std::uint64_t e) {
  std::map<std::uint64_t, IntPoly> by_divisor;
  for (std::uint64_t d = 1; d <= e; ++d) {
    if (e % d != 0) continue;
    IntPoly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    for (const auto& [c, phi_c] : by_divisor) {
      if (d % c == 0) f = divide_exact(f, phi_c);
    }
    by_divisor.emplace(d, std::move(f));
  }
  return by_divisor.at(e);
}

}  // namespace

CyclotomicField::CyclotomicField(std::uint64_t e) : e_(e) {
  if (e == 0) throw Error(ErrorCode::InvalidArgs, "cyclotomic order must be positive");
  phi_poly_ = cyclotomic_poly(e);
  phi_ = phi_poly_.size() - 1;
  powers_.reserve(e);
  for (std::uint64_t l = 0; l < e; ++l) {
    IntPoly mono(l + 1, 0);
    mono[l] = 1;
    powers_.push_back(reduce(mono));
  }
}

CyclotomicField::Value CyclotomicField::reduce(const std::vector<BigInt>& poly) const {
  IntPoly r = poly;
  // Phi_e is monic: eliminate the top coefficients one at a time.
  for (std::size_t i = r.size(); i-- > phi_;) {
    const BigInt c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= phi_; ++j) r[i - phi_ + j] -= c * phi_poly_[j];
  }
  r.resize(phi_, 0);
  return r;
}

CyclotomicField::Value CyclotomicField::from_integer(const BigInt& n) const {
  Value v(phi_, 0);
  v[0] = n;
  return v;
}

const CyclotomicField::Value& CyclotomicField::root_power(std::int64_t k) const {
  const auto e = static_cast<std::int64_t>(e_);
  return powers_[static_cast<std::size_t>(((k % e) + e) % e)];
}

CyclotomicField::Value CyclotomicField::from_exponent_counts(
    std::span<const std::uint64_t> counts) const {
  Value v(phi_, 0);
  for (std::size_t l = 0; l < counts.size(); ++l) {
    if (counts[l] == 0) continue;
    const Value& z = powers_[l % e_];
    for (std::size_t i = 0; i < phi_; ++i) v[i] += z[i] * counts[l];
  }
  return v;
}

CyclotomicField::Value CyclotomicField::add(const Value& a, const Value& b) const {
  Value v(a);
  for (std::size_t i = 0; i < phi_; ++i) v[i] += b[i];
  return v;
}

CyclotomicField::Value CyclotomicField::sub(const Value& a, const Value& b) const {
  Value v(a);
  for (std::size_t i = 0; i < phi_; ++i) v[i] -= b[i];
  return v;
}

CyclotomicField::Value CyclotomicField::scale(const Value& a, const BigInt& s) const {
  Value v(a);
  for (auto& c : v) c *= s;
  return v;
}

CyclotomicField::Value CyclotomicField::mul(const Value& a, const Value& b) const {
  IntPoly prod(2 * phi_ - 1, 0);
  for (std::size_t i = 0; i < phi_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < phi_; ++j) {
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
  }
  return reduce(prod);
}

CyclotomicField::Value CyclotomicField::conj(const Value& a) const {
  Value v(phi_, 0);
  for (std::size_t i = 0; i < phi_; ++i) {
    if (a[i] == 0) continue;
    const Value& z = root_power(-static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < phi_; ++j) v[j] += a[i] * z[j];
  }
  return v;
}

bool CyclotomicField::is_zero(const Value& a) {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

std::optional<BigInt> CyclotomicField::as_integer(const Value& a) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return std::nullopt;
  return a.empty() ? BigInt(0) : a[0];
}

std::complex<double> CyclotomicField::to_complex(const Value& a) const {
  std::complex<double> z = 0;
  for (std::size_t i = 0; i < phi_; ++i) {
    if (a[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(e_);
    z += a[i].convert_to<double>() * std::polar(1.0, angle);
  }
  return z;
}

std::string CyclotomicField::to_string(const Value& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < phi_; ++i) {
    const BigInt& c = a[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace antidiag
