#include "antidiag/group.hpp"

#include "antidiag/error.hpp"
#include "closure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>

namespace antidiag {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw Error(ErrorCode::InvalidPermutation, "images do not form a bijection");
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto from = cycle[i];
      if (from >= degree || used[from]) {
        throw Error(ErrorCode::InvalidPermutation, "cycles overlap or leave the domain");
      }
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) {
    throw Error(ErrorCode::InvalidPermutation, "degree mismatch in composition");
  }
  std::vector<std::uint32_t> images(degree());
  for (std::size_t i = 0; i < degree(); ++i) images[i] = rhs.images_[images_[i]];
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (std::uint32_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    os << '(';
    std::uint32_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) os << ' ';
      os << p;
      first = false;
      p = images_[p];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

// ---------------------------------------------------------------------------
// Group

struct Group::Data {
  std::size_t order = 0;
  std::vector<ElementIndex> table;
  std::vector<ElementIndex> inverse;
  std::vector<std::string> labels;
  std::string name;
  std::vector<Group> factors;
};

Group::Group(std::shared_ptr<const Data> data)
    : data_(std::move(data)),
      table_(data_->table.data()),
      inverse_(data_->inverse.data()),
      order_(data_->order) {}

namespace {

void check_associative(std::size_t n, const std::vector<ElementIndex>& t, const Limits& limits) {
  auto m = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(t[a * n + b]); };
  auto fail = [](std::size_t x, std::size_t y, std::size_t z) {
    throw Error(ErrorCode::NotAssociative, "(xy)z != x(yz) for x=" + std::to_string(x) +
                                               ", y=" + std::to_string(y) +
                                               ", z=" + std::to_string(z));
  };
  if (n <= limits.full_associativity_cap) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t xy = m(x, y);
        for (std::size_t z = 0; z < n; ++z)
          if (m(xy, z) != m(x, m(y, z))) fail(x, y, z);
      }
    return;
  }
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t s = 0; s < limits.associativity_samples; ++s) {
    const std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
    if (m(m(x, y), z) != m(x, m(y, z))) fail(x, y, z);
  }
}

}  // namespace

Group Group::from_flat_table(std::size_t n, std::vector<ElementIndex> table,
                             std::vector<std::string> labels, std::string name,
                             const Limits& limits) {
  if (n == 0 || table.size() != n * n) {
    throw Error(ErrorCode::NotLatinSquare, name + ": table is not a non-empty square");
  }
  if (n > limits.order_cap) {
    throw Error(ErrorCode::ClosureExceedsCap,
                name + ": order " + std::to_string(n) + " exceeds cap");
  }
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorCode::InvalidArgs, name + ": label count does not match order");
  }

  // Latin square: every row and every column is a permutation of [0, n).
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t round = 0;
  for (std::size_t r = 0; r < n; ++r) {
    ++round;
    for (std::size_t c = 0; c < n; ++c) {
      const auto v = table[r * n + c];
      if (v >= n || stamp[v] == round) {
        throw Error(ErrorCode::NotLatinSquare, name + ": row " + std::to_string(r));
      }
      stamp[v] = round;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    ++round;
    for (std::size_t r = 0; r < n; ++r) {
      const auto v = table[r * n + c];
      if (stamp[v] == round) {
        throw Error(ErrorCode::NotLatinSquare, name + ": column " + std::to_string(c));
      }
      stamp[v] = round;
    }
  }

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = table[e * n + x] == x && table[x * n + e] == x;
    }
    if (ok) identity = e;
  }
  if (identity == n) throw Error(ErrorCode::NoIdentity, name);

  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
  }

  if (identity != 0) {
    // Swap the identity into slot 0.
    auto swap_index = [&](std::size_t x) -> std::size_t {
      return x == 0 ? identity : (x == identity ? 0 : x);
    };
    std::vector<ElementIndex> renumbered(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        renumbered[swap_index(a) * n + swap_index(b)] =
            static_cast<ElementIndex>(swap_index(table[a * n + b]));
    table = std::move(renumbered);
    std::swap(labels[0], labels[identity]);
  }

  std::vector<ElementIndex> inverse(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = 0;
    while (table[x * n + y] != 0) ++y;
    if (table[y * n + x] != 0) {
      throw Error(ErrorCode::NotAssociative, name + ": left and right inverses differ");
    }
    inverse[x] = static_cast<ElementIndex>(y);
  }

  check_associative(n, table, limits);

  auto data = std::make_shared<Data>();
  data->order = n;
  data->table = std::move(table);
  data->inverse = std::move(inverse);
  data->labels = std::move(labels);
  data->name = std::move(name);
  return Group(std::move(data));
}

Group Group::from_cayley_table(const std::vector<std::vector<ElementIndex>>& table,
                               std::vector<std::string> labels, std::string name,
                               const Limits& limits) {
  const std::size_t n = table.size();
  std::vector<ElementIndex> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::NotLatinSquare, name + ": table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_flat_table(n, std::move(flat), std::move(labels), std::move(name), limits);
}

std::size_t Group::order() const noexcept { return order_; }

ElementIndex Group::power(ElementIndex a, std::uint64_t k) const noexcept {
  ElementIndex result = 0;
  ElementIndex base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t Group::element_order(ElementIndex a) const noexcept {
  std::uint64_t k = 1;
  for (ElementIndex x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

const std::string& Group::name() const noexcept { return data_->name; }
const std::string& Group::label(ElementIndex a) const { return data_->labels.at(a); }
const std::vector<std::string>& Group::labels() const noexcept { return data_->labels; }
std::span<const ElementIndex> Group::table() const noexcept { return data_->table; }
const std::vector<Group>& Group::factors() const noexcept { return data_->factors; }

Group Group::renamed(std::string name) const {
  auto data = std::make_shared<Data>(*data_);
  data->name = std::move(name);
  return Group(std::move(data));
}

Group Group::with_factors(std::vector<Group> factors) const {
  auto data = std::make_shared<Data>(*data_);
  data->factors = std::move(factors);
  return Group(std::move(data));
}

// ---------------------------------------------------------------------------
// SubgroupSet

SubgroupSet::SubgroupSet(Group parent, std::vector<ElementIndex> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)), member_(parent_.order(), false) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (auto x : elements_) member_.at(x) = true;
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p.images()) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

Group from_permutation_generators(std::span<const Permutation> generators, std::string name,
                                  const Limits& limits) {
  const std::size_t degree = generators.empty() ? 0 : generators.front().degree();
  for (const auto& gen : generators) {
    if (gen.degree() != degree) {
      throw Error(ErrorCode::InvalidPermutation, name + ": generators differ in degree");
    }
  }
  std::vector<Permutation> gens(generators.begin(), generators.end());
  return detail::closure_group<Permutation, PermutationHash>(
      gens, Permutation::identity(degree),
      [](const Permutation& a, const Permutation& b) { return a * b; },
      [](const Permutation& p) { return p.to_cycle_string(); }, std::move(name), limits);
}

Group direct_product(const Group& g, const Group& h, const Limits& limits) {
  const std::size_t n = g.order(), m = h.order();
  const std::string name = g.name() + "x" + h.name();
  if (n * m > limits.order_cap) {
    throw Error(ErrorCode::ClosureExceedsCap,
                name + ": product order " + std::to_string(n * m) + " exceeds cap");
  }
  const std::size_t order = n * m;
  std::vector<ElementIndex> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    const auto a1 = static_cast<ElementIndex>(a / m), a2 = static_cast<ElementIndex>(a % m);
    for (std::size_t b = 0; b < order; ++b) {
      const auto b1 = static_cast<ElementIndex>(b / m), b2 = static_cast<ElementIndex>(b % m);
      table[a * order + b] = static_cast<ElementIndex>(g.mul(a1, b1) * m + h.mul(a2, b2));
    }
  }
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    labels[a] = "(" + g.label(static_cast<ElementIndex>(a / m)) + "," +
                h.label(static_cast<ElementIndex>(a % m)) + ")";
  }
  return Group::from_flat_table(order, std::move(table), std::move(labels), name, limits)
      .with_factors({g, h});
}

// ---------------------------------------------------------------------------
// Subgroups

SubgroupSet trivial_subgroup(const Group& g) { return SubgroupSet(g, {0}); }

SubgroupSet whole_group(const Group& g) {
  std::vector<ElementIndex> all(g.order());
  std::iota(all.begin(), all.end(), 0u);
  return SubgroupSet(g, std::move(all));
}

SubgroupSet subgroup_generated(const Group& g, std::span<const ElementIndex> seeds) {
  detail::SubgroupBuilder builder(g);
  for (auto s : seeds) builder.add_generator(s);
  return builder.finish();
}

SubgroupSet normal_closure(const Group& g, std::span<const ElementIndex> seeds) {
  detail::SubgroupBuilder builder(g);
  for (auto s : seeds) builder.add_generator(s);
  // The element list grows while we scan it; every member gets conjugated.
  for (std::size_t i = 0; i < builder.size(); ++i) {
    const ElementIndex x = builder.elements()[i];
    for (ElementIndex by = 0; by < g.order(); ++by) {
      const ElementIndex c = g.conjugate(x, by);
      if (!builder.contains(c)) builder.add_generator(c);
    }
  }
  return builder.finish();
}

SubgroupSet derived_subgroup_of(const SubgroupSet& h) {
  const Group& g = h.parent();
  detail::SubgroupBuilder builder(g);
  const auto& elems = h.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      // [b, a] = [a, b]^-1, so one ordering per pair suffices.
      const ElementIndex c = g.commutator(elems[i], elems[j]);
      if (!builder.contains(c)) builder.add_generator(c);
    }
  }
  return builder.finish();
}

SubgroupSet derived_subgroup(const Group& g) { return derived_subgroup_of(whole_group(g)); }

SubgroupSet center(const Group& g) {
  std::vector<ElementIndex> central;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (ElementIndex y = 0; y < g.order() && commutes; ++y) commutes = g.mul(x, y) == g.mul(y, x);
    if (commutes) central.push_back(x);
  }
  return SubgroupSet(g, std::move(central));
}

bool is_abelian(const Group& g) {
  for (ElementIndex x = 0; x < g.order(); ++x)
    for (ElementIndex y = x + 1; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

bool is_normal(const SubgroupSet& n) {
  const Group& g = n.parent();
  for (auto x : n.elements())
    for (ElementIndex by = 0; by < g.order(); ++by)
      if (!n.contains(g.conjugate(x, by))) return false;
  return true;
}

Quotient quotient(const Group& g, const SubgroupSet& n, const Limits& limits) {
  if (!is_normal(n)) throw Error(ErrorCode::NotNormal, g.name() + ": subgroup is not normal");
  constexpr ElementIndex unassigned = static_cast<ElementIndex>(-1);
  std::vector<ElementIndex> coset(g.order(), unassigned);
  std::vector<ElementIndex> reps;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (coset[x] != unassigned) continue;
    const auto id = static_cast<ElementIndex>(reps.size());
    reps.push_back(x);
    for (auto y : n.elements()) coset[g.mul(x, y)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<ElementIndex> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = coset[g.mul(reps[a], reps[b])];
  std::vector<std::string> labels(q);
  for (std::size_t a = 0; a < q; ++a) labels[a] = "[" + g.label(reps[a]) + "]";
  const std::string name = g.name() + "/N" + std::to_string(n.size());
  return Quotient{Group::from_flat_table(q, std::move(table), std::move(labels), name, limits),
                  std::move(coset)};
}

Group subgroup_as_group(const SubgroupSet& h, std::string name, const Limits& limits) {
  const Group& g = h.parent();
  const auto& elems = h.elements();
  const std::size_t n = elems.size();
  std::vector<ElementIndex> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[elems[i]] = static_cast<ElementIndex>(i);
  std::vector<ElementIndex> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = local[g.mul(elems[a], elems[b])];
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = g.label(elems[i]);
  return Group::from_flat_table(n, std::move(table), std::move(labels), std::move(name), limits);
}

StructureFlags structure_flags(const Group& g) {
  std::vector<SubgroupSet> series{whole_group(g)};
  while (true) {
    SubgroupSet next = derived_subgroup_of(series.back());
    if (next.size() == series.back().size()) break;
    series.push_back(std::move(next));
  }
  const SubgroupSet& core = series.back();
  const bool solvable = core.size() == 1;
  return StructureFlags{
      .is_abelian = is_abelian(g),
      .is_solvable = solvable,
      .is_perfect = series.size() == 1,
      .perfect_core = core,
      .derived_length = series.size() - 1,
      .derived_series = std::move(series),
  };
}

std::vector<SubgroupSet> index_two_subgroups(const Group& g) {
  // Every index-2 subgroup contains all squares; G / <squares> is elementary
  // abelian of order 2^r and its hyperplanes give the 2^r - 1 subgroups.
  std::vector<ElementIndex> squares;
  std::vector<bool> seen(g.order(), false);
  for (ElementIndex x = 0; x < g.order(); ++x) {
    const ElementIndex s = g.mul(x, x);
    if (!seen[s]) {
      seen[s] = true;
      squares.push_back(s);
    }
  }
  const SubgroupSet s = subgroup_generated(g, squares);
  if (s.size() == g.order()) return {};
  const Quotient q = quotient(g, s);
  const Group& e = q.group;

  std::vector<std::uint64_t> coord(e.order(), 0);
  std::vector<bool> in_span(e.order(), false);
  std::vector<ElementIndex> span{0};
  in_span[0] = true;
  unsigned rank = 0;
  for (ElementIndex x = 1; x < e.order() && span.size() < e.order(); ++x) {
    if (in_span[x]) continue;
    const std::size_t old = span.size();
    for (std::size_t i = 0; i < old; ++i) {
      const ElementIndex t = e.mul(span[i], x);
      coord[t] = coord[span[i]] | (std::uint64_t{1} << rank);
      in_span[t] = true;
      span.push_back(t);
    }
    ++rank;
  }

  std::vector<SubgroupSet> result;
  for (std::uint64_t f = 1; f < (std::uint64_t{1} << rank); ++f) {
    std::vector<ElementIndex> kernel;
    for (ElementIndex x = 0; x < g.order(); ++x) {
      if (std::popcount(coord[q.projection[x]] & f) % 2 == 0) kernel.push_back(x);
    }
    result.emplace_back(g, std::move(kernel));
  }
  return result;
}

std::uint64_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (ElementIndex x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

bool is_prime_power_order(const Group& g, std::uint64_t* prime) {
  std::uint64_t n = g.order();
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return false;
  if (prime) *prime = p;
  return true;
}

}  // namespace antidiag
