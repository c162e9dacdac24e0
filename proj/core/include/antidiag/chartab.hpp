#pragma once

#include "antidiag/classes.hpp"
#include "antidiag/cyclotomic.hpp"
#include "antidiag/group.hpp"
#include "antidiag/limits.hpp"
#include "antidiag/modular.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace antidiag {

/// Irreducible degrees with multiplicity: counts[n] = |Irr_n(G)|.
struct DegreeMultiset {
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t count(std::uint64_t degree) const;
  std::uint64_t total() const;            // k(G)
  std::uint64_t sum_of_squares() const;   // |G|
  std::uint64_t maxdeg() const;
  /// Least degree >= 2; empty for abelian groups.
  std::optional<std::uint64_t> mindeg() const;
  /// Distinct degrees (c.d.), ascending.
  std::vector<std::uint64_t> cd_set() const;
  /// Degrees with multiplicity, ascending.
  std::vector<std::uint64_t> expanded() const;

  static DegreeMultiset from_degrees(const std::vector<std::uint64_t>& degrees);
  friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;
};

/// The irreducible characters reduced modulo the Dixon prime.
struct ModularCharacters {
  DixonParams params;
  std::vector<std::uint64_t> degrees;
  /// values[r][c] = chi_r(class c) mod p. Row 0 is the trivial character.
  std::vector<std::vector<std::uint64_t>> values;
};

/// Simultaneous eigenvectors of the class matrices over F_p, one per
/// irreducible character, split with the class matrices in class order.
/// Throws Error(NoPrimeFound | DegenerateEigenspace).
ModularCharacters modular_characters(const Group& g, const ClassPartition& part,
                                     const ClassConstants& constants, const Limits& limits = {});

/// Exact degree multiset. Asserts sum n^2 |Irr_n| = |G|, |Irr_1| = [G:G'] and
/// sum |Irr_n| = k(G) (std::logic_error on failure).
DegreeMultiset dixon_degrees(const Group& g, const Limits& limits = {});
DegreeMultiset dixon_degrees(const Group& g, const ClassPartition& part, const Limits& limits = {});

struct CharacterTable {
  Group group;
  ClassPartition classes;
  DixonParams params;
  CyclotomicField field;  // zeta of order exp(G)
  std::vector<std::uint64_t> degrees;
  /// values[r][c] in Z[zeta]; row 0 trivial, column 0 the degrees.
  std::vector<std::vector<CyclotomicField::Value>> values;

  std::size_t k() const noexcept { return degrees.size(); }
  DegreeMultiset degree_multiset() const { return DegreeMultiset::from_degrees(degrees); }
  /// Value of row r on element x (via its class).
  const CyclotomicField::Value& at_element(std::size_t r, ElementIndex x) const {
    return values[r][classes.class_of[x]];
  }
};

/// Exact character table by lifting the modular characters through the
/// eigenvalue multiplicities of each rho(g). Exact row orthogonality is
/// asserted. Throws Error(CapExceeded) above limits.full_table_cap.
CharacterTable character_table(const Group& g, const Limits& limits = {});

struct CharacterSupport {
  std::vector<std::uint32_t> classes;
  std::vector<ElementIndex> elements;
};

/// Classes (and elements) where the character value is exactly nonzero.
CharacterSupport character_support(const CharacterTable& table, std::size_t row);

/// <chi, psi> computed exactly; both arguments are class functions on `table`.
Rational inner_product(const CharacterTable& table, const std::vector<CyclotomicField::Value>& chi,
                       const std::vector<CyclotomicField::Value>& psi);

/// Independent check on dixon_degrees: floating-point eigenvectors of a random
/// combination of class matrices, degrees rounded from the orthogonality
/// relation. Retries with fresh coefficients up to five times, then throws
/// Error(IllConditioned). Throws Error(CapExceeded) above limits.numeric_oracle_cap.
DegreeMultiset degree_oracle_numeric(const Group& g, const Limits& limits = {},
                                     std::uint64_t seed = 0);

}  // namespace antidiag
