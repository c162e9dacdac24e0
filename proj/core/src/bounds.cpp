#include "antidiag/bounds.hpp"

#include "antidiag/error.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace antidiag {

namespace {

Rational q(std::uint64_t n) { return Rational(BigInt(n)); }
Rational frac(std::uint64_t n, std::uint64_t d) { return Rational(BigInt(n), BigInt(d)); }
Rational flag(bool b) { return Rational(b ? 1 : 0); }

BoundCheckResult compare(std::string name, const Rational& lhs, std::string relation,
                         const Rational& rhs, std::string witness = {}) {
  BoundCheckResult r;
  r.bound_name = std::move(name);
  r.applicable = true;
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = std::move(relation);
  if (r.relation == ">=") r.holds = lhs >= rhs;
  else if (r.relation == ">") r.holds = lhs > rhs;
  else if (r.relation == "<=") r.holds = lhs <= rhs;
  else if (r.relation == "<") r.holds = lhs < rhs;
  else r.holds = lhs == rhs;  // "==" and "iff"
  r.witness = std::move(witness);
  return r;
}

/// A yes/no consequence, recorded as lhs = [consequence], rhs = 1.
BoundCheckResult truth(std::string name, bool consequence, std::string witness = {}) {
  return compare(std::move(name), flag(consequence), "==", Rational(1), std::move(witness));
}

BoundCheckResult equivalence(std::string name, bool left, bool right, std::string witness = {}) {
  return compare(std::move(name), flag(left), "iff", flag(right), std::move(witness));
}

BoundCheckResult skipped(std::string name, std::string why = {}) {
  BoundCheckResult r;
  r.bound_name = std::move(name);
  r.applicable = false;
  r.witness = std::move(why);
  return r;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ";" : "") << v[i];
  return os.str();
}

bool cd_is(const DegreeMultiset& d, std::initializer_list<std::uint64_t> set) {
  return d.cd_set() == std::vector<std::uint64_t>(set);
}

std::uint64_t derived_order_of(const Group& g) { return derived_subgroup(g).size(); }

}  // namespace

SubgroupProfile profile_subgroup(const SubgroupSet& h, const std::string& name,
                                 const Limits& limits) {
  Group sub = subgroup_as_group(h, name, limits);
  DegreeMultiset degrees = dixon_degrees(sub, limits);
  Rational value = ad_from_degrees(degrees);
  return SubgroupProfile{h, std::move(sub), std::move(degrees), std::move(value)};
}

GroupProfile make_profile(const Group& g, const Limits& limits) {
  ClassPartition part = conjugacy_classes(g);
  DegreeMultiset degrees = dixon_degrees(g, part, limits);
  StructureFlags flags = structure_flags(g);
  InvariantReport report = invariant_report(g, part, degrees, flags);
  GroupProfile p{g, std::move(part), std::move(degrees), std::move(flags), derived_subgroup(g),
                 center(g), std::move(report), {}, std::nullopt};
  const auto subs = index_two_subgroups(g);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    p.index_two.push_back(
        profile_subgroup(subs[i], g.name() + "[index2:" + std::to_string(i) + "]", limits));
  }
  if (g.order() <= limits.full_table_cap) p.table = character_table(g, limits);
  return p;
}

bool is_a5_certificate(const InvariantReport& r) {
  const std::map<std::uint64_t, std::uint64_t> a5{{1, 1}, {3, 2}, {4, 1}, {5, 1}};
  return r.order == 60 && r.is_perfect && r.irr_counts == a5;
}

bool is_sl25_certificate(const InvariantReport& r) {
  const std::map<std::uint64_t, std::uint64_t> sl25{{1, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 1}, {6, 1}};
  return r.order == 120 && r.is_perfect && r.irr_counts == sl25;
}

// ---------------------------------------------------------------------------

std::vector<BoundCheckResult> bound_suite(const GroupProfile& p, const Limits& limits) {
  const InvariantReport& r = p.report;
  const Rational& a = r.ad;
  const std::uint64_t dg = r.derived_order;
  const bool nonabelian = !r.is_abelian;
  std::vector<BoundCheckResult> out;

  if (nonabelian) {
    out.push_back(compare("hammer", a, ">=",
                          hammer_bound(static_cast<std::int64_t>(*r.mindeg),
                                       static_cast<std::int64_t>(dg)),
                          "mindeg=" + std::to_string(*r.mindeg) + " |G'|=" + std::to_string(dg)));
    out.push_back(equivalence("minimal AD equality", a == Rational(3, 2),
                              cd_is(p.degrees, {1, 2}) && dg == 2));
  } else {
    out.push_back(skipped("hammer", "abelian"));
    out.push_back(skipped("minimal AD equality", "abelian"));
  }

  const bool has_two = p.degrees.count(2) > 0;
  if (nonabelian && !has_two) out.push_back(compare("2 not in c.d.", a, ">=", Rational(7, 3)));
  else out.push_back(skipped("2 not in c.d."));

  if (r.maxdeg >= 3) out.push_back(compare("maxdeg >= 3", a, ">=", Rational(2) + frac(1, dg)));
  else out.push_back(skipped("maxdeg >= 3"));

  if (nonabelian) {
    out.push_back(compare("maxdeg general", a, ">=",
                          Rational(2) + Rational(BigInt(r.maxdeg) - 3, BigInt(dg))));
  } else {
    out.push_back(skipped("maxdeg general", "abelian"));
  }

  if (nonabelian && r.maxdeg <= 2) {
    out.push_back(compare("maxdeg <= 2 formula", a, "==", Rational(2) - frac(1, dg)));
  } else {
    out.push_back(skipped("maxdeg <= 2 formula"));
  }

  out.push_back(compare("hoelder", a * a * r.cp, nonabelian ? ">" : "==", Rational(1)));

  std::uint64_t prime = 0;
  if (nonabelian && is_prime_power_order(p.group, &prime)) {
    // mindeg >= p and |G'| >= p in the hammer bound: 1 + (p-1)(1 - 1/p).
    out.push_back(compare("p-group", a, ">=", q(prime) - 1 + frac(1, prime),
                          "p=" + std::to_string(prime)));
  } else {
    out.push_back(skipped("p-group"));
  }

  if (nonabelian && r.order % 2 == 1) out.push_back(compare("odd order", a, ">=", Rational(7, 3)));
  else out.push_back(skipped("odd order"));

  const auto& factors = p.group.factors();
  if (!factors.empty()) {
    Rational product = 1;
    std::string names;
    for (const auto& f : factors) {
      product *= ad(f, limits);
      names += (names.empty() ? "" : " x ") + f.name();
    }
    out.push_back(compare("product multiplicativity", a, "==", product, names));
  } else {
    out.push_back(skipped("product multiplicativity", "no recorded factors"));
  }
  return out;
}

std::vector<BoundCheckResult> bound_suite(const Group& g, const Limits& limits) {
  return bound_suite(make_profile(g, limits), limits);
}

// ---------------------------------------------------------------------------

std::vector<BoundCheckResult> threshold_suite(const GroupProfile& p, const Limits&) {
  const InvariantReport& r = p.report;
  const Rational& a = r.ad;
  const Rational a5(61, 15);
  std::vector<BoundCheckResult> out;

  if (a < a5) out.push_back(truth("solvability threshold", r.is_solvable));
  else out.push_back(skipped("solvability threshold"));

  const bool perfect = r.is_perfect && r.order > 1;
  if (perfect) {
    out.push_back(compare("perfect minimum", a, ">=", a5));
    if (a * a <= Rational(20)) {
      out.push_back(truth("perfect minimum certificate", is_a5_certificate(r)));
    } else {
      out.push_back(skipped("perfect minimum certificate", "AD^2 > 20"));
    }
    if (r.cp > Rational(1, 20)) {
      const bool a5c = is_a5_certificate(r), sl25c = is_sl25_certificate(r);
      out.push_back(truth("perfect cp", a5c || sl25c, a5c ? "A5" : (sl25c ? "SL(2,5)" : "none")));
    } else {
      out.push_back(skipped("perfect cp", "cp <= 1/20"));
    }
  } else {
    out.push_back(skipped("perfect minimum"));
    out.push_back(skipped("perfect minimum certificate"));
    out.push_back(skipped("perfect cp"));
  }

  out.push_back(equivalence("centre index 4", cd_is(p.degrees, {1, 2}) && r.derived_order == 2,
                            r.center_index == 4));

  if (a <= Rational(2)) {
    const auto gap = gap_classify(a);
    out.push_back(truth("gap theorem", gap.in_gap_set,
                        gap.n ? "n=" + gap.n->str() : std::string("not of the form 2-1/n")));
  } else {
    out.push_back(skipped("gap theorem"));
  }

  if (a < Rational(7, 3) && cd_is(p.degrees, {1, 2, 3})) {
    if (p.index_two.empty()) out.push_back(skipped("index-2 inheritance", "no index-2 subgroups"));
    for (const auto& h : p.index_two) {
      out.push_back(truth("index-2 inheritance", cd_is(h.degrees, {1, 2, 3}),
                          h.group.name() + " c.d.=" + join(h.degrees.cd_set())));
    }
  } else {
    out.push_back(skipped("index-2 inheritance"));
  }
  return out;
}

std::vector<BoundCheckResult> threshold_suite(const Group& g, const Limits& limits) {
  return threshold_suite(make_profile(g, limits), limits);
}

// ---------------------------------------------------------------------------

namespace {

void degree_identities(const GroupProfile& p, std::vector<BoundCheckResult>& out) {
  const auto& d = p.degrees;
  out.push_back(compare("degree square sum", q(d.sum_of_squares()), "==", q(p.group.order())));
  out.push_back(compare("linear count", q(d.count(1)), "==", q(p.derived.index())));
  out.push_back(compare("class count", q(d.total()), "==", q(p.classes.k())));
}

void gallagher(const GroupProfile& p, const Limits& limits, std::vector<BoundCheckResult>& out) {
  const auto one = [&](const char* name, const SubgroupSet& n) {
    const Quotient quo = quotient(p.group, n, limits);
    const Group sub = subgroup_as_group(n, p.group.name() + "[N]", limits);
    out.push_back(compare(name, cp(quo.group) * cp(sub), ">=", p.report.cp,
                          "|N|=" + std::to_string(n.size())));
  };
  one("gallagher derived", p.derived);
  one("gallagher centre", p.center);
}

void oracles(const GroupProfile& p, const Limits& limits, std::vector<BoundCheckResult>& out) {
  const std::uint64_t n = p.group.order();
  if (n <= limits.commuting_pair_cap) {
    out.push_back(compare("commuting pairs", p.report.cp, "==",
                          Rational(BigInt(commuting_pair_count(p.group, limits)), BigInt(n) * n)));
  } else {
    out.push_back(skipped("commuting pairs", "above cap"));
  }
  if (n <= limits.numeric_oracle_cap) {
    const DegreeMultiset numeric = degree_oracle_numeric(p.group, limits);
    auto r = compare("numeric degree oracle", ad_from_degrees(numeric), "==", p.report.ad);
    r.holds = r.holds && numeric == p.degrees;
    out.push_back(r);
  } else {
    out.push_back(skipped("numeric degree oracle", "above cap"));
  }
}

void degree_lemmas(const GroupProfile& p, std::vector<BoundCheckResult>& out) {
  const auto& d = p.degrees;
  const std::uint64_t linear = d.count(1);
  for (const auto& [n, c] : d.counts) {
    if (n < 2) continue;
    out.push_back(compare("crude Irr_n bound", q(c), ">=", frac(linear, n * n),
                          "n=" + std::to_string(n)));
  }

  if (p.report.derived_order == 2) {
    bool even = true;
    for (const auto& [n, c] : d.counts)
      if (n > 1 && n % 2 == 1) even = false;
    out.push_back(truth("|G'|=2 even degrees", even, "c.d.=" + join(d.cd_set())));
  } else {
    out.push_back(skipped("|G'|=2 even degrees"));
  }

  for (const auto& h : p.index_two) {
    out.push_back(compare("index-2 maxdeg", q(h.degrees.maxdeg()), "<=", q(d.maxdeg()),
                          h.group.name()));
    const auto sub_cd = h.degrees.cd_set();
    bool covered = true;
    for (auto n : d.cd_set()) {
      const bool in = std::binary_search(sub_cd.begin(), sub_cd.end(), n) ||
                      (n % 2 == 0 && std::binary_search(sub_cd.begin(), sub_cd.end(), n / 2));
      covered = covered && in;
    }
    out.push_back(truth("index-2 c.d. cover", covered,
                        h.group.name() + " c.d.=" + join(sub_cd)));
  }

  if (p.index_two.empty() && d.count(2) > 0) {
    const auto w = d.count(1) == 3 * d.count(3) ? std::string("equality") : std::string();
    out.push_back(compare("Irr_3 bound", q(d.count(3)), ">=", frac(linear, 3), w));
  } else {
    out.push_back(skipped("Irr_3 bound"));
  }
}

void table_lemmas(const GroupProfile& p, std::vector<BoundCheckResult>& out) {
  if (!p.table) {
    out.push_back(skipped("character table checks", "above table cap"));
    return;
  }
  const CharacterTable& t = *p.table;
  const auto& f = t.field;
  const std::uint64_t order = p.group.order();
  const std::size_t k = t.k();

  bool orthonormal = true;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s)
      if (inner_product(t, t.values[r], t.values[s]) != Rational(r == s ? 1 : 0)) orthonormal = false;
  out.push_back(truth("orthogonality", orthonormal));

  const std::uint64_t linear = p.degrees.count(1);
  for (std::size_t r = 0; r < k; ++r) {
    const std::uint64_t n = t.degrees[r];
    const CharacterSupport supp = character_support(t, r);
    const std::string row = "row " + std::to_string(r) + " deg " + std::to_string(n);
    out.push_back(compare("support size", q(supp.elements.size()), ">=", frac(order, n * n), row));
    std::vector<ElementIndex> reps;
    for (auto c : supp.classes) reps.push_back(t.classes.reps[c]);
    const SubgroupSet kernel_side = normal_closure(p.group, reps);
    out.push_back(compare("orbit method", q(p.degrees.count(n)), ">=",
                          frac(linear, kernel_side.index()), row + " [G:K]=" +
                                                                 std::to_string(kernel_side.index())));
  }

  const bool no_index_two = p.index_two.empty();
  for (std::size_t r = 0; r < k; ++r) {
    if (t.degrees[r] != 2) continue;
    std::vector<CyclotomicField::Value> beta(k);
    for (std::size_t c = 0; c < k; ++c) {
      beta[c] = f.sub(f.mul(t.values[r][c], f.conj(t.values[r][c])), f.from_integer(1));
    }
    const Rational with_trivial = inner_product(t, beta, t.values[0]);
    const Rational norm = inner_product(t, beta, beta);
    const std::string row = "row " + std::to_string(r);
    out.push_back(compare("tensor trivial part", with_trivial, "==", Rational(0), row));
    if (norm != Rational(1)) {
      out.push_back(truth("tensor index-2", !no_index_two, row + " <beta,beta>=" +
                                                                to_fraction_string(norm)));
    } else {
      out.push_back(skipped("tensor index-2", row + " beta irreducible"));
    }

    if (no_index_two) {
      std::vector<CyclotomicField::Value> values(order);
      for (ElementIndex x = 0; x < order; ++x) values[x] = beta[t.classes.class_of[x]];
      try {
        auto res = support_bound_check(f, values, Rational(3));
        res.witness = row + " " + res.witness;
        out.push_back(res);
      } catch (const Error& e) {
        BoundCheckResult res = skipped("support lemma");
        res.applicable = true;
        res.holds = false;
        res.witness = row + " " + e.what();
        out.push_back(res);
      }
    }
  }
}

void monotonicity(const GroupProfile& p, const Limits& limits, const StructureOptions& options,
                  std::vector<BoundCheckResult>& out) {
  const Rational& a = p.report.ad;
  for (const auto& h : p.index_two) {
    out.push_back(compare("monotone index-2", h.ad, "<=", a, h.group.name()));
  }
  // Cyclic subgroups are abelian, so AD(<x>) = 1.
  out.push_back(compare("monotone cyclic", Rational(1), "<=", a,
                        std::to_string(p.classes.k()) + " class representatives"));

  const std::uint64_t order = p.group.order();
  if (order < 2 || options.subgroup_samples == 0) {
    out.push_back(skipped("monotone sampled"));
    return;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(order - 1));
  std::set<std::vector<ElementIndex>> seen;
  const bool small_ad = a < Rational(7, 3);
  for (std::size_t s = 0; s < options.subgroup_samples; ++s) {
    const ElementIndex seeds[2] = {pick(rng), pick(rng)};
    const SubgroupSet h = subgroup_generated(p.group, seeds);
    if (!seen.insert(h.elements()).second) continue;
    const std::string name = p.group.name() + "<" + p.group.label(seeds[0]) + "," +
                             p.group.label(seeds[1]) + ">";
    if (h.size() == order) {
      out.push_back(compare("monotone sampled", a, "<=", a, name + " = G"));
      continue;
    }
    const SubgroupProfile sub = profile_subgroup(h, name, limits);
    out.push_back(compare("monotone sampled", sub.ad, "<=", a, name));
    if (small_ad && h.size() % 2 == 1) {
      out.push_back(truth("odd-order subgroups abelian", is_abelian(sub.group), name));
    }
  }
}

void perfect_extension(const GroupProfile& p, const Limits& limits,
                       std::vector<BoundCheckResult>& out) {
  const InvariantReport& r = p.report;
  if (!(r.is_perfect && r.order > 1 && p.center.size() > 1)) {
    out.push_back(skipped("perfect extension class bound"));
    return;
  }
  const Quotient quo = quotient(p.group, p.center, limits);
  const InvariantReport top = invariant_report(quo.group, limits);
  if (!is_a5_certificate(top)) {
    out.push_back(skipped("perfect extension class bound", "G/Z is not A5"));
    return;
  }
  std::uint64_t classes_in_n = 0;
  for (auto rep : p.classes.reps)
    if (p.center.contains(rep)) ++classes_in_n;
  out.push_back(compare("perfect extension class bound", Rational(12) * r.cp, "<=",
                        frac(classes_in_n, p.center.size()),
                        "N=Z, k_G(N)=" + std::to_string(classes_in_n)));
}

void descent_chain(const GroupProfile& p, const Limits& limits,
                   std::vector<BoundCheckResult>& out) {
  if (!(p.report.ad < Rational(7, 3) && cd_is(p.degrees, {1, 2, 3}))) {
    out.push_back(skipped("index-2 descent"));
    return;
  }
  Group h = p.group;
  DegreeMultiset degrees = p.degrees;
  Rational h_ad = p.report.ad;
  std::vector<SubgroupSet> next = index_two_subgroups(h);
  std::string chain = h.name();
  bool inherits = true;
  while (!next.empty()) {
    SubgroupProfile sub = profile_subgroup(next.front(), h.name() + "'", limits);
    h = sub.group;
    degrees = std::move(sub.degrees);
    h_ad = sub.ad;
    inherits = inherits && cd_is(degrees, {1, 2, 3});
    chain += " > |" + std::to_string(h.order()) + "|";
    next = index_two_subgroups(h);
  }
  const std::uint64_t hd = derived_order_of(h);
  auto r = compare("index-2 descent", h_ad, ">=", Rational(2) + frac(2, hd),
                   chain + " |H'|=" + std::to_string(hd));
  r.holds = r.holds && inherits && h_ad <= p.report.ad;
  out.push_back(r);
}

}  // namespace

std::vector<BoundCheckResult> structure_suite(const GroupProfile& p, const Limits& limits,
                                              const StructureOptions& options) {
  std::vector<BoundCheckResult> out;
  degree_identities(p, out);
  gallagher(p, limits, out);
  oracles(p, limits, out);
  degree_lemmas(p, out);
  table_lemmas(p, out);
  monotonicity(p, limits, options, out);
  perfect_extension(p, limits, out);
  descent_chain(p, limits, out);
  return out;
}

}  // namespace antidiag
