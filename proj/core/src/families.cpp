#include "antidiag/families.hpp"

#include "antidiag/error.hpp"
#include "antidiag/finite_field.hpp"
#include "closure.hpp"

#include <array>
#include <limits>
#include <stdexcept>

namespace antidiag {

namespace {

constexpr std::array kKinds{
    std::pair{FamilyKind::cyclic, std::string_view{"cyclic"}},
    std::pair{FamilyKind::dihedral, std::string_view{"dihedral"}},
    std::pair{FamilyKind::symmetric, std::string_view{"symmetric"}},
    std::pair{FamilyKind::alternating, std::string_view{"alternating"}},
    std::pair{FamilyKind::sl2, std::string_view{"sl2"}},
    std::pair{FamilyKind::gl2_3, std::string_view{"gl2_3"}},
    std::pair{FamilyKind::psl2_7, std::string_view{"psl2_7"}},
    std::pair{FamilyKind::extraspecial, std::string_view{"extraspecial"}},
    std::pair{FamilyKind::affine, std::string_view{"affine"}},
    std::pair{FamilyKind::product, std::string_view{"product"}},
};

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r = sat_mul(r, b);
  return r;
}

[[noreturn]] void invalid(const FamilySpec& spec, const std::string& why) {
  throw Error(ErrorCode::InvalidParams, std::string(to_string(spec.kind)) + ": " + why);
}

void expect_params(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count) {
    invalid(spec, "expected " + std::to_string(count) + " parameter(s), got " +
                      std::to_string(spec.params.size()));
  }
}

// 2x2 matrices over F_q packed as a + q b + q^2 c + q^3 d for [[a, b], [c, d]].
struct Mat2 {
  std::uint32_t a, b, c, d;
};

std::uint64_t pack(const Mat2& m, std::uint64_t q) { return m.a + q * (m.b + q * (m.c + q * m.d)); }

Mat2 unpack(std::uint64_t v, std::uint64_t q) {
  Mat2 m{};
  m.a = static_cast<std::uint32_t>(v % q);
  v /= q;
  m.b = static_cast<std::uint32_t>(v % q);
  v /= q;
  m.c = static_cast<std::uint32_t>(v % q);
  v /= q;
  m.d = static_cast<std::uint32_t>(v);
  return m;
}

Group matrix_group(const FiniteField& f, const std::vector<Mat2>& gens, std::string name,
                   const Limits& limits) {
  const std::uint64_t q = f.size();
  auto mul = [&f, q](std::uint64_t x, std::uint64_t y) {
    const Mat2 l = unpack(x, q), r = unpack(y, q);
    const Mat2 out{f.add(f.mul(l.a, r.a), f.mul(l.b, r.c)), f.add(f.mul(l.a, r.b), f.mul(l.b, r.d)),
                   f.add(f.mul(l.c, r.a), f.mul(l.d, r.c)), f.add(f.mul(l.c, r.b), f.mul(l.d, r.d))};
    return pack(out, q);
  };
  auto label = [q](std::uint64_t x) {
    const Mat2 m = unpack(x, q);
    return "[" + std::to_string(m.a) + " " + std::to_string(m.b) + "; " + std::to_string(m.c) +
           " " + std::to_string(m.d) + "]";
  };
  std::vector<std::uint64_t> packed;
  for (const auto& g : gens) packed.push_back(pack(g, q));
  return detail::closure_group<std::uint64_t, std::hash<std::uint64_t>>(
      packed, pack(Mat2{1, 0, 0, 1}, q), mul, label, std::move(name), limits);
}

std::vector<Mat2> transvections(const FiniteField& f) {
  std::vector<Mat2> gens;
  for (auto t : f.additive_basis()) {
    gens.push_back(Mat2{1, t, 0, 1});
    gens.push_back(Mat2{1, 0, t, 1});
  }
  return gens;
}

Group permutation_family(std::vector<Permutation> gens, std::size_t degree, std::string name,
                         const Limits& limits) {
  if (gens.empty()) gens.push_back(Permutation::identity(degree));
  return from_permutation_generators(gens, std::move(name), limits);
}

Group cyclic_group(std::size_t n, std::string name, const Limits& limits) {
  std::vector<ElementIndex> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<ElementIndex>((a + b) % n);
  std::vector<std::string> labels(n);
  labels[0] = "e";
  for (std::size_t i = 1; i < n; ++i) labels[i] = i == 1 ? "a" : "a^" + std::to_string(i);
  return Group::from_flat_table(n, std::move(table), std::move(labels), std::move(name), limits);
}

Group dihedral_group(std::size_t k, std::string name, const Limits& limits) {
  // Element r^i s^j has index i + k j.
  const std::size_t n = 2 * k;
  std::vector<ElementIndex> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t i = x % k, a = x / k;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t j = y % k, b = y / k;
      const std::size_t rot = a == 0 ? (i + j) % k : (i + k - j) % k;
      table[x * n + y] = static_cast<ElementIndex>(rot + k * (a ^ b));
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t i = x % k, a = x / k;
    std::string r = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
    std::string s = a ? "s" : "";
    labels[x] = r.empty() && s.empty() ? "e" : r + s;
  }
  return Group::from_flat_table(n, std::move(table), std::move(labels), std::move(name), limits);
}

Group extraspecial_group(std::uint64_t p, std::size_t n, std::string name, const Limits& limits) {
  // Tuples (a, b, c) with a, b in F_p^n and c in F_p;
  // (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a.b').
  const std::size_t width = 2 * n + 1;
  const std::size_t order = static_cast<std::size_t>(sat_pow(p, width));
  auto digits = [&](std::size_t x) {
    std::vector<std::uint64_t> d(width);
    for (auto& v : d) {
      v = x % p;
      x /= p;
    }
    return d;
  };
  std::vector<std::vector<std::uint64_t>> coords(order);
  for (std::size_t x = 0; x < order; ++x) coords[x] = digits(x);
  std::vector<ElementIndex> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const auto& u = coords[x];
    for (std::size_t y = 0; y < order; ++y) {
      const auto& v = coords[y];
      std::uint64_t code = 0;
      std::uint64_t c = u[2 * n] + v[2 * n];
      for (std::size_t i = 0; i < n; ++i) c += u[i] * v[n + i];
      code = c % p;
      for (std::size_t i = 2 * n; i-- > 0;) code = code * p + (u[i] + v[i]) % p;
      table[x * order + y] = static_cast<ElementIndex>(code);
    }
  }
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::string s = "(";
    for (std::size_t i = 0; i < width; ++i) {
      if (i == n || i == 2 * n) s += '|';
      s += std::to_string(coords[x][i]);
    }
    labels[x] = s + ")";
  }
  return Group::from_flat_table(order, std::move(table), std::move(labels), std::move(name),
                                limits);
}

Group affine_group(const FiniteField& f, std::string name, const Limits& limits) {
  // x -> a x + b packed as a q + b; composition applies the left factor first.
  const std::uint64_t q = f.size();
  auto mul = [&f, q](std::uint64_t x, std::uint64_t y) {
    const auto a = static_cast<std::uint32_t>(x / q), b = static_cast<std::uint32_t>(x % q);
    const auto c = static_cast<std::uint32_t>(y / q), d = static_cast<std::uint32_t>(y % q);
    return static_cast<std::uint64_t>(f.mul(c, a)) * q + f.add(f.mul(c, b), d);
  };
  auto label = [q](std::uint64_t x) {
    return std::to_string(x / q) + "x+" + std::to_string(x % q);
  };
  std::vector<std::uint64_t> gens{static_cast<std::uint64_t>(f.primitive_element()) * q};
  for (auto t : f.additive_basis()) gens.push_back(q + t);
  return detail::closure_group<std::uint64_t, std::hash<std::uint64_t>>(gens, q, mul, label,
                                                                        std::move(name), limits);
}

}  // namespace

std::string_view to_string(FamilyKind kind) noexcept {
  for (const auto& [k, s] : kKinds)
    if (k == kind) return s;
  return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view text) noexcept {
  for (const auto& [k, s] : kKinds)
    if (s == text) return k;
  return std::nullopt;
}

const std::vector<FamilyKind>& all_family_kinds() {
  static const std::vector<FamilyKind> kinds = [] {
    std::vector<FamilyKind> out;
    for (const auto& entry : kKinds) out.push_back(entry.first);
    return out;
  }();
  return kinds;
}

void validate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::cyclic:
    case FamilyKind::dihedral:
    case FamilyKind::symmetric:
    case FamilyKind::alternating:
      expect_params(spec, 1);
      if (spec.params[0] < 1) invalid(spec, "n must be at least 1");
      return;
    case FamilyKind::sl2:
    case FamilyKind::affine:
      expect_params(spec, 1);
      if (spec.params[0] < 2 ||
          !prime_power_decomposition(static_cast<std::uint64_t>(spec.params[0]))) {
        invalid(spec, "q = " + std::to_string(spec.params[0]) + " is not a prime power");
      }
      return;
    case FamilyKind::gl2_3:
    case FamilyKind::psl2_7:
      expect_params(spec, 0);
      return;
    case FamilyKind::extraspecial:
      expect_params(spec, 2);
      if (spec.params[0] < 2 || !is_prime(static_cast<std::uint64_t>(spec.params[0]))) {
        invalid(spec, "p = " + std::to_string(spec.params[0]) + " is not prime");
      }
      if (spec.params[1] < 1) invalid(spec, "n must be at least 1");
      return;
    case FamilyKind::product:
      if (spec.factors.empty()) invalid(spec, "product needs at least one factor");
      for (const auto& f : spec.factors) validate(f);
      return;
  }
}

std::uint64_t family_order(const FamilySpec& spec) {
  validate(spec);
  const auto n = spec.params.empty() ? 0 : static_cast<std::uint64_t>(spec.params[0]);
  switch (spec.kind) {
    case FamilyKind::cyclic: return n;
    case FamilyKind::dihedral: return sat_mul(2, n);
    case FamilyKind::symmetric:
    case FamilyKind::alternating: {
      std::uint64_t f = 1;
      for (std::uint64_t i = 2; i <= n; ++i) f = sat_mul(f, i);
      if (spec.kind == FamilyKind::alternating && n >= 2 && f != kSaturated) f /= 2;
      return f;
    }
    case FamilyKind::sl2: return sat_mul(n, sat_mul(n, n)) - n;
    case FamilyKind::affine: return n * (n - 1);
    case FamilyKind::gl2_3: return 48;
    case FamilyKind::psl2_7: return 168;
    case FamilyKind::extraspecial:
      return sat_pow(n, 2 * static_cast<std::uint64_t>(spec.params[1]) + 1);
    case FamilyKind::product: {
      std::uint64_t o = 1;
      for (const auto& f : spec.factors) o = sat_mul(o, family_order(f));
      return o;
    }
  }
  return 0;
}

std::string family_name(const FamilySpec& spec) {
  const std::string n = spec.params.empty() ? "" : std::to_string(spec.params[0]);
  switch (spec.kind) {
    case FamilyKind::cyclic: return "C" + n;
    case FamilyKind::dihedral:
      return "D" + (spec.params.empty() ? std::string() : std::to_string(2 * spec.params[0]));
    case FamilyKind::symmetric: return "S" + n;
    case FamilyKind::alternating: return "A" + n;
    case FamilyKind::sl2: return "SL(2," + n + ")";
    case FamilyKind::gl2_3: return "GL(2,3)";
    case FamilyKind::psl2_7: return "PSL(2,7)";
    case FamilyKind::extraspecial:
      if (spec.params.size() < 2) return "extraspecial";
      return n + "^(1+" + std::to_string(2 * spec.params[1]) + ")";
    case FamilyKind::affine: return "AGL(1," + n + ")";
    case FamilyKind::product: {
      std::string out;
      for (const auto& f : spec.factors) out += (out.empty() ? "" : "x") + family_name(f);
      return out;
    }
  }
  return "?";
}

Group make_family(const FamilySpec& spec, const Limits& limits) {
  const std::uint64_t order = family_order(spec);
  std::string name = family_name(spec);
  if (order > limits.order_cap) {
    throw Error(ErrorCode::ClosureExceedsCap,
                name + ": order " + std::to_string(order) + " exceeds cap " +
                    std::to_string(limits.order_cap));
  }
  const auto n = spec.params.empty() ? 0 : static_cast<std::size_t>(spec.params[0]);

  Group g = [&]() -> Group {
    switch (spec.kind) {
      case FamilyKind::cyclic: return cyclic_group(n, name, limits);
      case FamilyKind::dihedral: return dihedral_group(n, name, limits);
      case FamilyKind::symmetric: {
        std::vector<Permutation> gens;
        if (n >= 2) {
          gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
          std::vector<std::uint32_t> cycle(n);
          for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>(i);
          if (n > 2) gens.push_back(Permutation::from_cycles(n, {cycle}));
        }
        return permutation_family(std::move(gens), n, name, limits);
      }
      case FamilyKind::alternating: {
        std::vector<Permutation> gens;
        for (std::uint32_t i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
        return permutation_family(std::move(gens), n, name, limits);
      }
      case FamilyKind::sl2: {
        const FiniteField f(n);
        return matrix_group(f, transvections(f), name, limits);
      }
      case FamilyKind::gl2_3: {
        const FiniteField f(3);
        auto gens = transvections(f);
        gens.push_back(Mat2{2, 0, 0, 1});
        return matrix_group(f, gens, name, limits);
      }
      case FamilyKind::psl2_7: {
        const Group sl = make_family(FamilySpec{FamilyKind::sl2, {7}, {}}, limits);
        return quotient(sl, center(sl), limits).group.renamed(name);
      }
      case FamilyKind::extraspecial:
        return extraspecial_group(n, static_cast<std::size_t>(spec.params[1]), name, limits);
      case FamilyKind::affine: return affine_group(FiniteField(n), name, limits);
      case FamilyKind::product: {
        Group acc = make_family(spec.factors.front(), limits);
        for (std::size_t i = 1; i < spec.factors.size(); ++i) {
          acc = direct_product(acc, make_family(spec.factors[i], limits), limits);
        }
        return acc.renamed(name);
      }
    }
    throw Error(ErrorCode::InvalidParams, "unknown family");
  }();

  if (g.order() != order) {
    throw std::logic_error(name + ": constructed order " + std::to_string(g.order()) +
                           " != documented order " + std::to_string(order));
  }
  return g;
}

}  // namespace antidiag
