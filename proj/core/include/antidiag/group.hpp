#pragma once

#include "antidiag/limits.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace antidiag {

/// Index of an element inside its group; 0 is always the identity.
using ElementIndex = std::uint32_t;

/// A bijection on [0, degree). Composition reads left to right:
/// (a * b)(i) = b(a(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error(InvalidPermutation) unless images is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Cycles are given as lists of points, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

 private:
  std::vector<std::uint32_t> images_;
};

/// An immutable finite group stored as a validated Cayley table.
///
/// Copies are cheap: the table is shared. Direct products remember their
/// factors so multiplicativity of invariants can be checked downstream.
class Group {
 public:
  /// Validates the table (Latin square, identity, associativity) and throws
  /// Error(NotLatinSquare | NoIdentity | NotAssociative) on failure. If the
  /// identity is not at index 0 the elements are renumbered so that it is.
  static Group from_cayley_table(const std::vector<std::vector<ElementIndex>>& table,
                                 std::vector<std::string> labels, std::string name,
                                 const Limits& limits = {});

  /// Same as from_cayley_table but with a flat row-major table.
  static Group from_flat_table(std::size_t order, std::vector<ElementIndex> table,
                               std::vector<std::string> labels, std::string name,
                               const Limits& limits = {});

  std::size_t order() const noexcept;
  ElementIndex mul(ElementIndex a, ElementIndex b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  ElementIndex inv(ElementIndex a) const noexcept { return inverse_[a]; }
  ElementIndex conjugate(ElementIndex x, ElementIndex by) const noexcept {
    return mul(mul(inv(by), x), by);
  }
  ElementIndex commutator(ElementIndex a, ElementIndex b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  ElementIndex power(ElementIndex a, std::uint64_t k) const noexcept;
  std::uint64_t element_order(ElementIndex a) const noexcept;

  const std::string& name() const noexcept;
  const std::string& label(ElementIndex a) const;
  const std::vector<std::string>& labels() const noexcept;
  std::span<const ElementIndex> table() const noexcept;

  /// Factors recorded by direct_product, empty otherwise.
  const std::vector<Group>& factors() const noexcept;

  Group renamed(std::string name) const;
  Group with_factors(std::vector<Group> factors) const;

 private:
  struct Data;
  explicit Group(std::shared_ptr<const Data> data);

  std::shared_ptr<const Data> data_;
  // Hot-path copies of pointers into data_.
  const ElementIndex* table_ = nullptr;
  const ElementIndex* inverse_ = nullptr;
  std::size_t order_ = 0;
};

/// A subgroup of a parent group, stored as a sorted element list.
class SubgroupSet {
 public:
  SubgroupSet(Group parent, std::vector<ElementIndex> elements);

  const Group& parent() const noexcept { return parent_; }
  const std::vector<ElementIndex>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t index() const noexcept { return parent_.order() / elements_.size(); }
  bool contains(ElementIndex x) const noexcept { return member_[x]; }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  Group parent_;
  std::vector<ElementIndex> elements_;
  std::vector<bool> member_;
};

/// Closure of the generators under composition. Elements are numbered in
/// breadth-first order from the identity, right-multiplying by the generators
/// in the order given. Throws Error(ClosureExceedsCap | InvalidPermutation).
Group from_permutation_generators(std::span<const Permutation> generators, std::string name,
                                  const Limits& limits = {});

/// Componentwise product; the result remembers {g, h} as its factors.
Group direct_product(const Group& g, const Group& h, const Limits& limits = {});

SubgroupSet trivial_subgroup(const Group& g);
SubgroupSet whole_group(const Group& g);

SubgroupSet subgroup_generated(const Group& g, std::span<const ElementIndex> seeds);
SubgroupSet normal_closure(const Group& g, std::span<const ElementIndex> seeds);

/// Subgroup of g generated by the commutators of elements of h.
SubgroupSet derived_subgroup_of(const SubgroupSet& h);
SubgroupSet derived_subgroup(const Group& g);
SubgroupSet center(const Group& g);

bool is_abelian(const Group& g);
bool is_normal(const SubgroupSet& n);

struct Quotient {
  Group group;
  /// projection[x] is the coset of x, as an element of `group`.
  std::vector<ElementIndex> projection;
};

/// Cosets are numbered by their least element. Throws Error(NotNormal).
Quotient quotient(const Group& g, const SubgroupSet& n, const Limits& limits = {});

/// Re-indexes a subgroup as a group in its own right (elements in sorted order).
Group subgroup_as_group(const SubgroupSet& h, std::string name, const Limits& limits = {});

struct StructureFlags {
  bool is_abelian = false;
  bool is_solvable = false;
  bool is_perfect = false;
  SubgroupSet perfect_core;
  std::size_t derived_length = 0;
  /// G = G^(0) > G^(1) > ... down to the perfect core.
  std::vector<SubgroupSet> derived_series;
};

StructureFlags structure_flags(const Group& g);

/// All subgroups of index two, as kernels of the surjections onto C2.
std::vector<SubgroupSet> index_two_subgroups(const Group& g);

/// Least common multiple of the element orders.
std::uint64_t exponent(const Group& g);

/// Returns true iff the order is p^k for a prime p (k >= 1), storing p.
bool is_prime_power_order(const Group& g, std::uint64_t* prime = nullptr);

}  // namespace antidiag
