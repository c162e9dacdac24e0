#pragma once

// Internal helpers shared by the group constructors.

#include "antidiag/error.hpp"
#include "antidiag/group.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace antidiag::detail {

/// Breadth-first closure of `generators` from `identity` under `mul`, followed
/// by a full Cayley table. Elem must be hashable with Hash and comparable.
template <class Elem, class Hash, class Mul, class Label>
Group closure_group(const std::vector<Elem>& generators, const Elem& identity, Mul mul,
                    Label label, std::string name, const Limits& limits) {
  std::vector<Elem> elements{identity};
  std::unordered_map<Elem, ElementIndex, Hash> index{{identity, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& gen : generators) {
      Elem next = mul(elements[i], gen);
      if (index.find(next) != index.end()) continue;
      if (elements.size() >= limits.order_cap) {
        throw Error(ErrorCode::ClosureExceedsCap,
                    name + ": closure exceeds order cap " + std::to_string(limits.order_cap));
      }
      index.emplace(next, static_cast<ElementIndex>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  std::vector<ElementIndex> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = index.at(mul(elements[a], elements[b]));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elements) labels.push_back(label(e));
  return Group::from_flat_table(n, std::move(table), std::move(labels), std::move(name), limits);
}

/// Incrementally maintained subgroup closure inside a parent group.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const Group& g) : g_(g), member_(g.order(), false), elements_{0} {
    member_[0] = true;
  }

  bool contains(ElementIndex x) const { return member_[x]; }
  const std::vector<ElementIndex>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  void add_generator(ElementIndex x) {
    if (member_[x]) return;
    generators_.push_back(x);
    const std::size_t old_size = elements_.size();
    // Old elements are already closed under the old generators.
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      const ElementIndex e = elements_[i];
      if (i < old_size) {
        push(g_.mul(e, x));
      } else {
        for (ElementIndex gen : generators_) push(g_.mul(e, gen));
      }
    }
  }

  SubgroupSet finish() const { return SubgroupSet(g_, elements_); }

 private:
  void push(ElementIndex y) {
    if (member_[y]) return;
    member_[y] = true;
    elements_.push_back(y);
  }

  const Group& g_;
  std::vector<bool> member_;
  std::vector<ElementIndex> elements_;
  std::vector<ElementIndex> generators_;
};

}  // namespace antidiag::detail
