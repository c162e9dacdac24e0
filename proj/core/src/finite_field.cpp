#include "antidiag/finite_field.hpp"

#include "antidiag/error.hpp"

#include <string>

namespace antidiag {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power_decomposition(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, m);
}

namespace {

using Poly = std::vector<std::uint64_t>;  // low degree first, no trailing zeros

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

/// Remainder of f modulo g over F_p; g nonzero.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  const std::uint64_t lead_inv = inverse_mod(g.back(), p);
  trim(f);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = (f[shift + i] + p * p - factor * g[i] % p) % p;
    }
    trim(f);
  }
  return f;
}

/// Monic polynomial of degree m whose tail coefficients encode `code` in base p.
Poly monic_from_code(std::uint64_t code, unsigned m, std::uint64_t p) {
  Poly f(m + 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    f[i] = code % p;
    code /= p;
  }
  f[m] = 1;
  return f;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool irreducible(const Poly& f, std::uint64_t p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= m / 2; ++d) {
    for (std::uint64_t code = 0; code < ipow(p, d); ++code) {
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint64_t q) {
  const auto pm = prime_power_decomposition(q);
  if (!pm) throw Error(ErrorCode::InvalidParams, std::to_string(q) + " is not a prime power");
  p_ = pm->first;
  m_ = pm->second;
  q_ = q;

  // Least candidate in the order that compares c_{m-1} first: iterate codes
  // whose most significant base-p digit is c_{m-1}.
  Poly modulus;
  for (std::uint64_t code = 0; code < q_; ++code) {
    Poly f = monic_from_code(code, m_, p_);
    if (m_ == 1 || irreducible(f, p_)) {
      modulus = std::move(f);
      break;
    }
  }
  modulus_.assign(modulus.begin(), modulus.end() - 1);

  auto digits = [&](std::uint64_t a) {
    Poly f(m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
      f[i] = a % p_;
      a /= p_;
    }
    return f;
  };
  auto encode = [&](const Poly& f) {
    std::uint64_t a = 0;
    for (std::size_t i = f.size(); i-- > 0;) a = a * p_ + f[i];
    return static_cast<std::uint32_t>(a);
  };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (std::uint64_t a = 0; a < q_; ++a) {
    const Poly fa = digits(a);
    Poly na(m_);
    for (unsigned i = 0; i < m_; ++i) na[i] = (p_ - fa[i]) % p_;
    neg_[a] = encode(na);
    for (std::uint64_t b = 0; b < q_; ++b) {
      const Poly fb = digits(b);
      Poly sum(m_);
      for (unsigned i = 0; i < m_; ++i) sum[i] = (fa[i] + fb[i]) % p_;
      add_[a * q_ + b] = encode(sum);
      Poly prod(2 * m_, 0);
      for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
      Poly rem = poly_mod(prod, modulus, p_);
      rem.resize(m_, 0);
      mul_[a * q_ + b] = encode(rem);
    }
  }
  for (std::uint64_t a = 1; a < q_; ++a)
    for (std::uint64_t b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<std::uint32_t>(b);

  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint64_t order = 1;
    for (std::uint32_t x = g; x != 1; x = mul(x, g)) ++order;
    if (order == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

std::vector<std::uint32_t> FiniteField::additive_basis() const {
  std::vector<std::uint32_t> basis;
  std::uint64_t v = 1;
  for (unsigned i = 0; i < m_; ++i, v *= p_) basis.push_back(static_cast<std::uint32_t>(v));
  return basis;
}

}  // namespace antidiag
