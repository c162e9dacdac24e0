#include "antidiag/modular.hpp"

#include "antidiag/error.hpp"
#include "antidiag/finite_field.hpp"

#include <string>
#include <utility>

namespace antidiag::modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) noexcept {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) noexcept { return pow(a, p - 2, p); }

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t n = p - 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generator = true;
    for (auto f : factors) generator = generator && pow(g, (p - 1) / f, p) != 1;
    if (generator) return g;
  }
  throw Error(ErrorCode::NoPrimeFound, "no primitive root modulo " + std::to_string(p));
}

std::vector<std::size_t> rref(Matrix& rows, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const std::uint64_t scale = inv(rows[r][c], p);
    for (auto& v : rows[r]) v = mul(v, scale, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = sub(rows[i][j], mul(f, rows[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<std::vector<std::uint64_t>> nullspace(Matrix a, std::uint64_t p) {
  const std::size_t n = a.empty() ? 0 : a.front().size();
  const auto pivots = rref(a, p);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> u(n, 0);
    u[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) u[pivots[r]] = sub(0, a[r][free], p);
    basis.push_back(std::move(u));
  }
  return basis;
}

std::vector<std::uint64_t> charpoly(Matrix h, std::uint64_t p) {
  const std::size_t n = h.size();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (auto& row : h) std::swap(row[i], row[j + 1]);
    }
    const std::uint64_t t_inv = inv(h[j + 1][j], p);
    for (i = j + 2; i < n; ++i) {
      const std::uint64_t u = mul(h[i][j], t_inv, p);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[i][c] = sub(h[i][c], mul(u, h[j + 1][c], p), p);
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = add(h[r][j + 1], mul(u, h[r][i], p), p);
    }
  }

  // polys[m] = characteristic polynomial of the leading m x m block.
  std::vector<std::vector<std::uint64_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    const auto& prev = polys[m - 1];
    std::vector<std::uint64_t> cur(m + 1, 0);
    const std::uint64_t diag = h[m - 1][m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = add(cur[d + 1], prev[d], p);
      cur[d] = sub(cur[d], mul(diag, prev[d], p), p);
    }
    std::uint64_t t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = mul(t, h[i][i - 1], p);
      const std::uint64_t coef = mul(h[i - 1][m - 1], t, p);
      if (coef != 0) {
        for (std::size_t d = 0; d < polys[i - 1].size(); ++d) {
          cur[d] = sub(cur[d], mul(coef, polys[i - 1][d], p), p);
        }
      }
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

}  // namespace antidiag::modp

namespace antidiag {

DixonParams choose_dixon_params(std::uint64_t order, std::uint64_t exponent, const Limits& limits) {
  DixonParams params;
  params.exponent = exponent;
  for (std::uint64_t p = exponent + 1; p < limits.prime_search_bound; p += exponent) {
    if (static_cast<modp::u128>(p) * p <= static_cast<modp::u128>(4) * order) continue;
    if (!is_prime(p)) continue;
    params.prime = p;
    const std::uint64_t g = modp::primitive_root(p);
    params.root = modp::pow(g, (p - 1) / exponent, p);
    return params;
  }
  throw Error(ErrorCode::NoPrimeFound,
              "no prime = 1 mod " + std::to_string(exponent) + " below search bound");
}

}  // namespace antidiag
