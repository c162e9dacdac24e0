#include "antidiag/classes.hpp"

#include "antidiag/error.hpp"

#include <stdexcept>

namespace antidiag {

std::vector<ElementIndex> ClassPartition::members(const Group& g, std::uint32_t cls) const {
  std::vector<ElementIndex> out;
  for (ElementIndex x = 0; x < g.order(); ++x)
    if (class_of[x] == cls) out.push_back(x);
  return out;
}

ClassPartition conjugacy_classes(const Group& g) {
  constexpr std::uint32_t unassigned = static_cast<std::uint32_t>(-1);
  ClassPartition part;
  part.class_of.assign(g.order(), unassigned);
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (part.class_of[x] != unassigned) continue;
    const auto id = static_cast<std::uint32_t>(part.reps.size());
    std::uint64_t size = 0;
    for (ElementIndex by = 0; by < g.order(); ++by) {
      const ElementIndex c = g.conjugate(x, by);
      if (part.class_of[c] == unassigned) {
        part.class_of[c] = id;
        ++size;
      }
    }
    part.reps.push_back(x);
    part.sizes.push_back(size);
    part.element_orders.push_back(g.element_order(x));
  }
  part.inverse_class.resize(part.k());
  for (std::size_t c = 0; c < part.k(); ++c) {
    part.inverse_class[c] = part.class_of[g.inv(part.reps[c])];
  }
  return part;
}

Rational cp(const Group& g, const ClassPartition& part) {
  return Rational(BigInt(part.k()), BigInt(g.order()));
}

Rational cp(const Group& g) { return cp(g, conjugacy_classes(g)); }

std::uint64_t commuting_pair_count(const Group& g, const Limits& limits) {
  if (g.order() > limits.commuting_pair_cap) {
    throw Error(ErrorCode::CapExceeded, g.name() + ": order " + std::to_string(g.order()) +
                                            " above brute-force cap");
  }
  std::uint64_t count = 0;
  for (ElementIndex x = 0; x < g.order(); ++x)
    for (ElementIndex y = 0; y < g.order(); ++y) count += g.mul(x, y) == g.mul(y, x);
  return count;
}

namespace {

void count_for_target(const Group& g, const ClassPartition& part, ElementIndex z, std::size_t l,
                      ClassConstants& out) {
  for (ElementIndex x = 0; x < g.order(); ++x) {
    const ElementIndex y = g.mul(g.inv(x), z);
    ++out.at(part.class_of[x], part.class_of[y], l);
  }
}

}  // namespace

ClassConstants class_constants(const Group& g, const ClassPartition& part, const Limits& limits) {
  const std::size_t k = part.k();
  ClassConstants a(k);
  for (std::size_t l = 0; l < k; ++l) count_for_target(g, part, part.reps[l], l, a);

  if (g.order() <= limits.class_constant_recheck_cap) {
    // Same counts from the largest member of every class.
    std::vector<ElementIndex> alt(part.reps);
    for (ElementIndex x = 0; x < g.order(); ++x) alt[part.class_of[x]] = x;
    ClassConstants b(k);
    for (std::size_t l = 0; l < k; ++l) count_for_target(g, part, alt[l], l, b);
    if (!(a == b)) throw std::logic_error(g.name() + ": class constants depend on representative");
  }
  return a;
}

std::uint32_t power_class(const Group& g, const ClassPartition& part, std::uint32_t cls,
                          std::uint64_t j) {
  return part.class_of[g.power(part.reps[cls], j)];
}

}  // namespace antidiag
