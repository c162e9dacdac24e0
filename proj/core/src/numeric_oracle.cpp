#include "antidiag/chartab.hpp"
#include "antidiag/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <random>
#include <string>

namespace antidiag {

namespace {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

std::optional<DegreeMultiset> try_numeric(const Group& g, const ClassPartition& part,
                                          const ClassConstants& a, std::mt19937_64& rng) {
  const std::size_t k = part.k();
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (std::size_t j = 0; j < k; ++j) {
    const double c = coeff(rng);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l)) += c * static_cast<double>(a(j, i, l));
  }

  Eigen::ComplexEigenSolver<CMatrix> solver(m);
  if (solver.info() != Eigen::Success) return std::nullopt;

  // Eigenvalues must be well separated for the eigenvectors to be meaningful.
  const auto& values = solver.eigenvalues();
  double scale = 1.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) scale = std::max(scale, std::abs(values[i]));
  for (Eigen::Index i = 0; i < values.size(); ++i)
    for (Eigen::Index j = i + 1; j < values.size(); ++j)
      if (std::abs(values[i] - values[j]) < 1e-6 * scale) return std::nullopt;

  const double order = static_cast<double>(g.order());
  std::vector<std::uint64_t> degrees;
  for (Eigen::Index col = 0; col < values.size(); ++col) {
    CVector w = solver.eigenvectors().col(col);
    if (std::abs(w[0]) < 1e-9) return std::nullopt;
    w /= w[0];
    // sum_i |omega_i|^2 / h_i = |G| / d^2
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      s += std::norm(w[static_cast<Eigen::Index>(i)]) / static_cast<double>(part.sizes[i]);
    }
    const double d = std::sqrt(order / s);
    const double rounded = std::round(d);
    if (rounded < 1.0 || std::abs(d - rounded) > 1e-4) return std::nullopt;
    degrees.push_back(static_cast<std::uint64_t>(rounded));
  }
  auto result = DegreeMultiset::from_degrees(degrees);
  if (result.sum_of_squares() != g.order()) return std::nullopt;
  return result;
}

}  // namespace

DegreeMultiset degree_oracle_numeric(const Group& g, const Limits& limits, std::uint64_t seed) {
  if (g.order() > limits.numeric_oracle_cap) {
    throw Error(ErrorCode::CapExceeded,
                g.name() + ": order " + std::to_string(g.order()) + " above numeric oracle cap");
  }
  const ClassPartition part = conjugacy_classes(g);
  const ClassConstants a = class_constants(g, part, limits);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 5; ++attempt) {
    if (auto result = try_numeric(g, part, a, rng)) return *result;
  }
  throw Error(ErrorCode::IllConditioned, g.name() + ": numeric eigenvectors did not separate");
}

}  // namespace antidiag
