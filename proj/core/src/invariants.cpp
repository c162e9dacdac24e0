#include "antidiag/invariants.hpp"

#include "antidiag/error.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace antidiag {

Rational ad_from_degrees(const DegreeMultiset& degrees) {
  BigInt cubes = 0;
  for (const auto& [d, c] : degrees.counts) cubes += BigInt(d) * d * d * c;
  return Rational(cubes, BigInt(degrees.sum_of_squares()));
}

Rational f_from_degrees(const DegreeMultiset& degrees) {
  BigInt sum = 0;
  for (const auto& [d, c] : degrees.counts) sum += BigInt(d) * c;
  return Rational(sum, BigInt(degrees.sum_of_squares()));
}

Rational ad(const Group& g, const Limits& limits) {
  return ad_from_degrees(dixon_degrees(g, limits));
}

InvariantReport invariant_report(const Group& g, const Limits& limits) {
  const ClassPartition part = conjugacy_classes(g);
  return invariant_report(g, part, dixon_degrees(g, part, limits), structure_flags(g));
}

InvariantReport invariant_report(const Group& g, const ClassPartition& part,
                                 const DegreeMultiset& degrees, const StructureFlags& flags) {
  InvariantReport r;
  r.name = g.name();
  r.order = g.order();
  r.ad = ad_from_degrees(degrees);
  r.cp = cp(g, part);
  r.f = f_from_degrees(degrees);
  r.class_count = part.k();
  r.cd_set = degrees.cd_set();
  r.irr_counts = degrees.counts;
  r.mindeg = degrees.mindeg();
  r.maxdeg = degrees.maxdeg();
  r.derived_order = derived_subgroup(g).size();
  r.center_index = center(g).index();
  r.is_abelian = flags.is_abelian;
  r.is_solvable = flags.is_solvable;
  r.is_perfect = flags.is_perfect;

  const Rational one(1);
  const Rational holder = r.ad * r.ad * r.cp;
  const bool ok = r.is_abelian
                      ? (r.ad == one && holder == one)
                      : (r.ad > one && r.ad >= Rational(3, 2) && holder > one);
  if (!ok) throw std::logic_error(g.name() + ": report violates the basic AD invariants");
  return r;
}

Rational hammer_bound(std::int64_t m, std::int64_t n) {
  if (m < 2 || n < 2) {
    throw Error(ErrorCode::InvalidArgs, "hammer_bound needs m, n >= 2 (got " + std::to_string(m) +
                                            ", " + std::to_string(n) + ")");
  }
  return Rational(1) + Rational(m - 1) * (Rational(1) - Rational(BigInt(1), BigInt(n)));
}

GapClassification gap_classify(const Rational& value) {
  GapClassification out;
  out.value = value;
  if (value >= Rational(2)) return out;
  const Rational gap = Rational(2) - value;
  if (numerator(gap) == 1) {
    out.in_gap_set = true;
    out.n = denominator(gap);
  }
  return out;
}

namespace {

Rational q_rational(std::int64_t q) { return Rational(BigInt(q)); }

}  // namespace

Rational closed_form_ad(const FamilySpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case FamilyKind::dihedral: {
      const std::int64_t k = spec.params.at(0);
      return k % 2 == 1 ? Rational(2) - Rational(BigInt(1), BigInt(k))
                        : Rational(2) - Rational(BigInt(2), BigInt(k));
    }
    case FamilyKind::extraspecial: {
      const std::int64_t p = spec.params.at(0), n = spec.params.at(1);
      BigInt pn1 = 1;
      for (std::int64_t i = 0; i + 1 < n; ++i) pn1 *= p;
      return Rational(pn1 * (p - 1)) + Rational(BigInt(1), BigInt(p));
    }
    case FamilyKind::affine: {
      const Rational q = q_rational(spec.params.at(0));
      return q - 2 + Rational(2) / q;
    }
    case FamilyKind::sl2: {
      const std::int64_t qi = spec.params.at(0);
      const Rational q = q_rational(qi);
      if (qi % 2 == 0) return (q * q * q - 3) / (q * q - 1);
      return (2 * q * q * q - q * q - 9) / (2 * (q * q - 1));
    }
    default:
      throw Error(ErrorCode::UnsupportedFamily,
                  "no closed form for family " + std::string(to_string(spec.kind)));
  }
}

namespace {

struct SupportTally {
  std::size_t size = 0;
  std::size_t support = 0;
  std::size_t negative = 0;  // N: -1 <= f < 0
  std::size_t small = 0;     // P: 0 < f <= c
  std::size_t large = 0;     // R: c < f <= d
};

BoundCheckResult finish_support(const SupportTally& t, const Rational& d) {
  BoundCheckResult r;
  r.bound_name = "support lemma";
  r.applicable = true;
  r.lhs = Rational(BigInt(t.support));
  r.rhs = Rational(BigInt(t.size)) / d;
  r.relation = ">=";
  r.holds = r.lhs >= r.rhs;
  std::ostringstream w;
  w << "|X|=" << t.size << " |supp|=" << t.support << " N=" << t.negative << " P=" << t.small
    << " R=" << t.large;
  r.witness = w.str();
  return r;
}

void require_d(const Rational& d) {
  if (d < Rational(1)) throw Error(ErrorCode::HypothesisViolated, "support bound needs d >= 1");
}

}  // namespace

BoundCheckResult support_bound_check(std::span<const Rational> values, const Rational& d) {
  require_d(d);
  if (values.empty()) throw Error(ErrorCode::HypothesisViolated, "empty domain");
  const Rational c = d - 1;
  SupportTally t;
  t.size = values.size();
  Rational sum = 0, sum_sq = 0;
  for (const auto& v : values) {
    if (v < Rational(-1) || v > d) {
      throw Error(ErrorCode::HypothesisViolated, "value " + to_fraction_string(v) + " outside [-1, d]");
    }
    sum += v;
    sum_sq += v * v;
    if (v == 0) continue;
    ++t.support;
    if (v < 0) ++t.negative;
    else if (v <= c) ++t.small;
    else ++t.large;
  }
  if (sum != 0) throw Error(ErrorCode::HypothesisViolated, "mean is not zero");
  if (sum_sq != Rational(BigInt(t.size))) {
    throw Error(ErrorCode::HypothesisViolated, "variance is not one");
  }
  return finish_support(t, d);
}

BoundCheckResult support_bound_check(const CyclotomicField& field,
                                     std::span<const CyclotomicField::Value> values,
                                     const Rational& d) {
  require_d(d);
  if (values.empty()) throw Error(ErrorCode::HypothesisViolated, "empty domain");
  constexpr double tol = 1e-9;
  const double d_real = to_double(d);
  const Rational c = d - 1;
  const double c_real = to_double(c);

  SupportTally t;
  t.size = values.size();
  CyclotomicField::Value sum = field.zero(), sum_sq = field.zero();
  for (const auto& v : values) {
    const auto z = field.to_complex(v);
    if (std::abs(z.imag()) > tol || z.real() < -1 - tol || z.real() > d_real + tol) {
      throw Error(ErrorCode::HypothesisViolated, "value " + field.to_string(v) + " outside [-1, d]");
    }
    sum = field.add(sum, v);
    sum_sq = field.add(sum_sq, field.mul(v, v));
    if (CyclotomicField::is_zero(v)) continue;
    ++t.support;
    if (const auto exact = CyclotomicField::as_integer(v)) {
      const Rational q(*exact);
      if (q < 0) ++t.negative;
      else if (q <= c) ++t.small;
      else ++t.large;
    } else if (z.real() < 0) {
      ++t.negative;
    } else if (z.real() <= c_real) {
      ++t.small;
    } else {
      ++t.large;
    }
  }
  if (!CyclotomicField::is_zero(sum)) throw Error(ErrorCode::HypothesisViolated, "mean is not zero");
  if (CyclotomicField::as_integer(sum_sq) != std::optional<BigInt>(BigInt(t.size))) {
    throw Error(ErrorCode::HypothesisViolated, "variance is not one");
  }
  return finish_support(t, d);
}

}  // namespace antidiag
