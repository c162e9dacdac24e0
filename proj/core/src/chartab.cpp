#include "antidiag/chartab.hpp"

#include "antidiag/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace antidiag {

// ---------------------------------------------------------------------------
// DegreeMultiset

std::uint64_t DegreeMultiset::count(std::uint64_t degree) const {
  const auto it = counts.find(degree);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t DegreeMultiset::total() const {
  std::uint64_t t = 0;
  for (const auto& [d, c] : counts) t += c;
  return t;
}

std::uint64_t DegreeMultiset::sum_of_squares() const {
  std::uint64_t t = 0;
  for (const auto& [d, c] : counts) t += d * d * c;
  return t;
}

std::uint64_t DegreeMultiset::maxdeg() const { return counts.empty() ? 0 : counts.rbegin()->first; }

std::optional<std::uint64_t> DegreeMultiset::mindeg() const {
  for (const auto& [d, c] : counts)
    if (d >= 2 && c > 0) return d;
  return std::nullopt;
}

std::vector<std::uint64_t> DegreeMultiset::cd_set() const {
  std::vector<std::uint64_t> out;
  for (const auto& [d, c] : counts)
    if (c > 0) out.push_back(d);
  return out;
}

std::vector<std::uint64_t> DegreeMultiset::expanded() const {
  std::vector<std::uint64_t> out;
  for (const auto& [d, c] : counts) out.insert(out.end(), c, d);
  return out;
}

DegreeMultiset DegreeMultiset::from_degrees(const std::vector<std::uint64_t>& degrees) {
  DegreeMultiset m;
  for (auto d : degrees) ++m.counts[d];
  return m;
}

// ---------------------------------------------------------------------------
// Modular characters

namespace {

using modp::Matrix;

struct Eigenspace {
  Matrix basis;  // rows, in reduced row echelon form
  std::vector<std::size_t> pivots;
};

/// (M_j v)_i = sum_l a(j, i, l) v_l
std::vector<std::uint64_t> apply_class_matrix(const ClassConstants& a, std::size_t j,
                                              const std::vector<std::uint64_t>& v,
                                              std::uint64_t p) {
  const std::size_t k = a.k();
  std::vector<std::uint64_t> out(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    modp::u128 acc = 0;
    for (std::size_t l = 0; l < k; ++l) {
      if (v[l] != 0) acc += static_cast<modp::u128>(a(j, i, l)) * v[l];
    }
    out[i] = static_cast<std::uint64_t>(acc % p);
  }
  return out;
}

std::vector<std::uint64_t> roots_mod_p(const std::vector<std::uint64_t>& poly, std::uint64_t p) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = modp::add(modp::mul(acc, x, p), poly[i], p);
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

/// Splits `space` into the eigenspaces of class matrix j restricted to it.
std::vector<Eigenspace> split(const Eigenspace& space, const ClassConstants& a, std::size_t j,
                              std::uint64_t p, const std::string& name) {
  const std::size_t m = space.basis.size();
  // Coordinates of M_j b_c in the echelon basis are read off at the pivots.
  Matrix action(m, std::vector<std::uint64_t>(m, 0));
  for (std::size_t c = 0; c < m; ++c) {
    const auto image = apply_class_matrix(a, j, space.basis[c], p);
    for (std::size_t r = 0; r < m; ++r) action[r][c] = image[space.pivots[r]];
  }
  const auto roots = roots_mod_p(modp::charpoly(action, p), p);
  if (roots.size() == 1) {
    // A single eigenvalue: the restriction must be scalar for a split algebra.
    return {space};
  }

  std::vector<Eigenspace> parts;
  std::size_t dims = 0;
  for (auto lambda : roots) {
    Matrix shifted = action;
    for (std::size_t i = 0; i < m; ++i) shifted[i][i] = modp::sub(shifted[i][i], lambda, p);
    Eigenspace part;
    for (const auto& u : modp::nullspace(shifted, p)) {
      std::vector<std::uint64_t> w(a.k(), 0);
      for (std::size_t c = 0; c < m; ++c) {
        if (u[c] == 0) continue;
        for (std::size_t i = 0; i < a.k(); ++i) {
          w[i] = modp::add(w[i], modp::mul(u[c], space.basis[c][i], p), p);
        }
      }
      part.basis.push_back(std::move(w));
    }
    part.pivots = modp::rref(part.basis, p);
    dims += part.basis.size();
    parts.push_back(std::move(part));
  }
  if (dims != m) {
    throw Error(ErrorCode::DegenerateEigenspace,
                name + ": class matrix " + std::to_string(j) + " is not diagonalizable mod " +
                    std::to_string(p));
  }
  return parts;
}

std::uint64_t integer_sqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

ModularCharacters modular_characters(const Group& g, const ClassPartition& part,
                                     const ClassConstants& constants, const Limits& limits) {
  const std::size_t k = part.k();
  const DixonParams params = choose_dixon_params(g.order(), exponent(g), limits);
  const std::uint64_t p = params.prime;

  Eigenspace whole;
  whole.basis.assign(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) whole.basis[i][i] = 1;
  whole.pivots.resize(k);
  std::iota(whole.pivots.begin(), whole.pivots.end(), std::size_t{0});

  std::vector<Eigenspace> spaces{whole};
  for (std::size_t j = 1; j < k; ++j) {
    const bool done =
        std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.basis.size() == 1; });
    if (done) break;
    std::vector<Eigenspace> next;
    for (const auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : split(s, constants, j, p, g.name())) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }

  ModularCharacters out;
  out.params = params;
  const std::uint64_t order_mod = g.order() % p;
  const std::uint64_t root_bound = integer_sqrt(g.order());
  for (const auto& s : spaces) {
    if (s.basis.size() != 1) {
      throw Error(ErrorCode::DegenerateEigenspace,
                  g.name() + ": common eigenspace of dimension " +
                      std::to_string(s.basis.size()) + " survives all class matrices");
    }
    std::vector<std::uint64_t> omega = s.basis.front();
    if (omega[0] == 0) {
      throw Error(ErrorCode::DegenerateEigenspace, g.name() + ": eigenvector vanishes at identity");
    }
    const std::uint64_t norm = modp::inv(omega[0], p);
    for (auto& w : omega) w = modp::mul(w, norm, p);

    // d^2 * sum_i omega_i omega_i* / h_i = |G|
    std::uint64_t s_sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t term = modp::mul(omega[i], omega[part.inverse_class[i]], p);
      s_sum = modp::add(s_sum, modp::mul(term, modp::inv(part.sizes[i] % p, p), p), p);
    }
    if (s_sum == 0) {
      throw Error(ErrorCode::DegenerateEigenspace, g.name() + ": zero norm for eigenvector");
    }
    const std::uint64_t d_squared = modp::mul(order_mod, modp::inv(s_sum, p), p);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= root_bound; ++d) {
      if (d * d % p == d_squared) {
        degree = d;
        break;
      }
    }
    if (degree == 0) {
      throw Error(ErrorCode::DegenerateEigenspace,
                  g.name() + ": no degree lifts d^2 = " + std::to_string(d_squared));
    }

    std::vector<std::uint64_t> chi(k);
    for (std::size_t i = 0; i < k; ++i) {
      chi[i] = modp::mul(modp::mul(omega[i], degree % p, p), modp::inv(part.sizes[i] % p, p), p);
    }
    out.degrees.push_back(degree);
    out.values.push_back(std::move(chi));
  }

  // Trivial character first, then by degree, then by the residues.
  std::vector<std::size_t> order(out.degrees.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto is_trivial = [&](std::size_t r) {
    return std::all_of(out.values[r].begin(), out.values[r].end(),
                       [](std::uint64_t v) { return v == 1; });
  };
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const bool tx = is_trivial(x), ty = is_trivial(y);
    if (tx != ty) return tx;
    if (out.degrees[x] != out.degrees[y]) return out.degrees[x] < out.degrees[y];
    return out.values[x] < out.values[y];
  });
  ModularCharacters sorted;
  sorted.params = out.params;
  for (auto r : order) {
    sorted.degrees.push_back(out.degrees[r]);
    sorted.values.push_back(std::move(out.values[r]));
  }
  return sorted;
}

DegreeMultiset dixon_degrees(const Group& g, const ClassPartition& part, const Limits& limits) {
  if (g.order() > limits.order_cap) {
    throw Error(ErrorCode::CapExceeded, g.name() + ": order above cap");
  }
  DegreeMultiset result;
  if (part.k() == g.order()) {
    // Abelian: every irreducible is linear.
    result.counts[1] = g.order();
  } else {
    const ClassConstants constants = class_constants(g, part, limits);
    result = DegreeMultiset::from_degrees(modular_characters(g, part, constants, limits).degrees);
  }

  const std::uint64_t linear = g.order() / derived_subgroup(g).size();
  if (result.sum_of_squares() != g.order() || result.count(1) != linear ||
      result.total() != part.k()) {
    throw std::logic_error(g.name() + ": degree multiset fails the square-sum, linear-count or "
                                      "class-count identity");
  }
  return result;
}

DegreeMultiset dixon_degrees(const Group& g, const Limits& limits) {
  return dixon_degrees(g, conjugacy_classes(g), limits);
}

// ---------------------------------------------------------------------------
// Exact table

namespace {

void assert_orthogonality(const CharacterTable& t) {
  const auto& f = t.field;
  const std::size_t k = t.k();
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r; s < k; ++s) {
      CyclotomicField::Value acc = f.zero();
      for (std::size_t c = 0; c < k; ++c) {
        const auto term = f.mul(t.values[r][c], t.values[s][t.classes.inverse_class[c]]);
        acc = f.add(acc, f.scale(term, BigInt(t.classes.sizes[c])));
      }
      const BigInt expected = r == s ? BigInt(t.group.order()) : BigInt(0);
      if (!CyclotomicField::is_zero(f.sub(acc, f.from_integer(expected)))) {
        throw std::logic_error(t.group.name() + ": rows " + std::to_string(r) + " and " +
                               std::to_string(s) + " are not orthogonal");
      }
    }
  }
}

}  // namespace

CharacterTable character_table(const Group& g, const Limits& limits) {
  if (g.order() > limits.full_table_cap) {
    throw Error(ErrorCode::CapExceeded,
                g.name() + ": order " + std::to_string(g.order()) + " above full-table cap");
  }
  ClassPartition part = conjugacy_classes(g);
  const ClassConstants constants = class_constants(g, part, limits);
  const ModularCharacters modular = modular_characters(g, part, constants, limits);
  const DixonParams& params = modular.params;
  const std::uint64_t p = params.prime, e = params.exponent;
  const std::size_t k = part.k();

  CharacterTable table{g, part, params, CyclotomicField(e), modular.degrees, {}};
  table.values.assign(k, std::vector<CyclotomicField::Value>(k));

  // zpow[t] = z^t for the chosen primitive e-th root z mod p.
  std::vector<std::uint64_t> zpow(e);
  zpow[0] = 1;
  for (std::uint64_t t = 1; t < e; ++t) zpow[t] = modp::mul(zpow[t - 1], params.root, p);

  for (std::size_t c = 0; c < k; ++c) {
    // rho(g) has eigenvalues among the o-th roots of unity, o = ord(g);
    // zeta_o = zeta_e^(e/o) corresponds to w = z^(e/o).
    const std::uint64_t o = part.element_orders[c];
    const std::uint64_t step = e / o;
    std::vector<std::uint32_t> powers(o);
    for (std::uint64_t j = 0; j < o; ++j) powers[j] = power_class(g, part, static_cast<std::uint32_t>(c), j);
    const std::uint64_t inv_o = modp::inv(o % p, p);

    for (std::size_t r = 0; r < k; ++r) {
      const std::uint64_t d = modular.degrees[r];
      std::vector<std::uint64_t> counts(e, 0);
      std::uint64_t total = 0;
      for (std::uint64_t t = 0; t < o; ++t) {
        std::uint64_t acc = 0;
        for (std::uint64_t j = 0; j < o; ++j) {
          const std::uint64_t exp_index = (o - (j * t) % o) % o * step;
          acc = modp::add(acc, modp::mul(modular.values[r][powers[j]], zpow[exp_index], p), p);
        }
        const std::uint64_t mult = modp::mul(acc, inv_o, p);
        if (mult > d) {
          throw std::logic_error(g.name() + ": eigenvalue multiplicity does not lift");
        }
        counts[t * step] = mult;
        total += mult;
      }
      if (total != d) throw std::logic_error(g.name() + ": multiplicities do not sum to degree");
      table.values[r][c] = table.field.from_exponent_counts(counts);
    }
  }

  for (std::size_t c = 0; c < k; ++c) {
    if (table.values[0][c] != table.field.from_integer(1)) {
      throw std::logic_error(g.name() + ": row 0 is not the trivial character");
    }
  }
  for (std::size_t r = 0; r < k; ++r) {
    if (table.values[r][0] != table.field.from_integer(table.degrees[r])) {
      throw std::logic_error(g.name() + ": identity column differs from degrees");
    }
  }
  assert_orthogonality(table);
  return table;
}

CharacterSupport character_support(const CharacterTable& table, std::size_t row) {
  if (row >= table.k()) throw Error(ErrorCode::InvalidArgs, "character row out of range");
  CharacterSupport support;
  std::vector<bool> nonzero(table.k(), false);
  for (std::uint32_t c = 0; c < table.k(); ++c) {
    if (!CyclotomicField::is_zero(table.values[row][c])) {
      nonzero[c] = true;
      support.classes.push_back(c);
    }
  }
  for (ElementIndex x = 0; x < table.group.order(); ++x) {
    if (nonzero[table.classes.class_of[x]]) support.elements.push_back(x);
  }
  return support;
}

Rational inner_product(const CharacterTable& table, const std::vector<CyclotomicField::Value>& chi,
                       const std::vector<CyclotomicField::Value>& psi) {
  const auto& f = table.field;
  CyclotomicField::Value acc = f.zero();
  for (std::size_t c = 0; c < table.k(); ++c) {
    acc = f.add(acc, f.scale(f.mul(chi[c], f.conj(psi[c])), BigInt(table.classes.sizes[c])));
  }
  const auto integer = CyclotomicField::as_integer(acc);
  if (!integer) throw std::logic_error("inner product is not rational");
  return Rational(*integer, BigInt(table.group.order()));
}

}  // namespace antidiag
