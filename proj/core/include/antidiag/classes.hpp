#pragma once

#include "antidiag/group.hpp"
#include "antidiag/limits.hpp"
#include "antidiag/rational.hpp"

#include <cstdint>
#include <vector>

namespace antidiag {

struct ClassPartition {
  std::vector<std::uint32_t> class_of;  // per element
  std::vector<ElementIndex> reps;       // least element of each class
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> inverse_class;
  std::vector<std::uint64_t> element_orders;  // per class

  std::size_t k() const noexcept { return reps.size(); }
  /// Members of one class in increasing order.
  std::vector<ElementIndex> members(const Group& g, std::uint32_t cls) const;
};

/// Classes ordered by least element; the identity is class 0.
ClassPartition conjugacy_classes(const Group& g);

/// Number of classes over |G|, in lowest terms.
Rational cp(const Group& g);
Rational cp(const Group& g, const ClassPartition& part);

/// Exhaustive count of commuting ordered pairs. Throws Error(CapExceeded)
/// above limits.commuting_pair_cap.
std::uint64_t commuting_pair_count(const Group& g, const Limits& limits = {});

/// Class-sum structure constants: C_i C_j = sum_k a(i, j, k) C_k.
class ClassConstants {
 public:
  explicit ClassConstants(std::size_t k) : k_(k), a_(k * k * k, 0) {}

  std::size_t k() const noexcept { return k_; }
  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t l) const noexcept {
    return a_[(i * k_ + j) * k_ + l];
  }
  std::uint64_t& at(std::size_t i, std::size_t j, std::size_t l) noexcept {
    return a_[(i * k_ + j) * k_ + l];
  }
  friend bool operator==(const ClassConstants&, const ClassConstants&) = default;

 private:
  std::size_t k_;
  std::vector<std::uint64_t> a_;
};

/// a(i, j, l) = #{(x, y) in C_i x C_j : xy = z} for a fixed z in C_l. Up to
/// limits.class_constant_recheck_cap the count is repeated with a second
/// representative of each class and compared (std::logic_error on mismatch).
ClassConstants class_constants(const Group& g, const ClassPartition& part,
                               const Limits& limits = {});

/// Class of g^j for the representative of `cls`.
std::uint32_t power_class(const Group& g, const ClassPartition& part, std::uint32_t cls,
                          std::uint64_t j);

}  // namespace antidiag
