#include "cyb/discriminant.hpp"

#include <algorithm>

#include "cyb/cy_invariants.hpp"
#include "cyb/errors.hpp"

namespace cyb {

std::array<int, 3> section_degrees(const BundleSpec& spec) {
  if (spec.base_dim != 3) throw InvalidSpec("discriminant needs a bundle over P^3", "wrong_base");
  const auto& d = spec.degrees();
  const auto spread = d[1] - d[0];
  if (spread > 4) {
    throw Inadmissible("b - a = " + std::to_string(spread) + " > 4 for " + spec.label(), "inadmissible");
  }
  return {static_cast<int>(4 - spread), 4, static_cast<int>(4 + spread)};
}

void validate_section(const QuadraticSection& q) {
  const auto deg = section_degrees(q.spec);
  const std::array<const MultiPoly*, 3> parts{&q.s00, &q.s01, &q.s11};
  static const char* const kNames[] = {"s00", "s01", "s11"};
  for (int i = 0; i < 3; ++i) {
    if (!parts[i]->is_homogeneous_of(deg[i])) {
      throw DomainError(std::string(kNames[i]) + " is not homogeneous of degree " + std::to_string(deg[i]),
                        "degree_mismatch");
    }
  }
}

QuadraticSection scale(const QuadraticSection& q, const Rational& r) {
  QuadraticSection out{q.spec, r * q.s00, r * q.s01, r * q.s11, false};
  out.degenerate = out.s00.is_zero() && out.s01.is_zero() && out.s11.is_zero();
  return out;
}

nlohmann::ordered_json Octic::to_json() const {
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : poly.terms()) terms.push_back({{"exp", e}, {"coeff", c.to_string()}});
  return {{"degree", 8}, {"text", poly.to_string()}, {"terms", terms}};
}

Octic build_discriminant(const QuadraticSection& q) {
  validate_section(q);
  return {q.s01 * q.s01 - Rational(4) * (q.s00 * q.s11)};
}

bool scaling_law_check(const QuadraticSection& q, const Rational& r) {
  return build_discriminant(scale(q, r)).poly == (r * r) * build_discriminant(q).poly;
}

bool gradient_identity_check(const QuadraticSection& q) {
  const auto grad = multipoly_gradient(build_discriminant(q).poly);
  const auto g00 = multipoly_gradient(q.s00), g01 = multipoly_gradient(q.s01), g11 = multipoly_gradient(q.s11);
  for (int i = 0; i < 4; ++i) {
    const MultiPoly rhs = Rational(2) * (q.s01 * g01[i]) - Rational(4) * (q.s11 * g00[i]) -
                          Rational(4) * (q.s00 * g11[i]);
    if (!(grad[i] == rhs)) return false;
  }
  return true;
}

std::int64_t base_locus_expected(const BundleSpec& spec) {
  const auto d = section_degrees(spec);
  const std::int64_t bezout = std::int64_t{d[0]} * d[1] * d[2];
  const std::int64_t fibers = fiber_count(spec);
  if (bezout != fibers) {
    throw OracleMismatch("Bezout count " + std::to_string(bezout) + " != fiber count " + std::to_string(fibers));
  }
  return bezout;
}

WitnessRecord singularity_witness(const QuadraticSection& q, const Point4& point) {
  if (std::all_of(point.begin(), point.end(), [](const Rational& r) { return r.is_zero(); })) {
    throw DomainError("witness point must be nonzero", "zero_point");
  }
  const MultiPoly delta = build_discriminant(q).poly;
  const auto grad = multipoly_gradient(delta);

  WitnessRecord rec;
  rec.point = point;
  rec.s00 = q.s00.evaluate(point);
  rec.s01 = q.s01.evaluate(point);
  rec.s11 = q.s11.evaluate(point);
  rec.delta = delta.evaluate(point);
  for (int i = 0; i < 4; ++i) rec.gradient[i] = grad[i].evaluate(point);
  rec.on_base_locus = rec.s00.is_zero() && rec.s01.is_zero() && rec.s11.is_zero();
  rec.on_discriminant = rec.delta.is_zero();
  rec.singular = rec.on_discriminant &&
                 std::all_of(rec.gradient.begin(), rec.gradient.end(), [](const Rational& r) { return r.is_zero(); });

  if (rec.on_base_locus) {
    if (!rec.singular) throw OracleMismatch("base-locus point is not singular on the discriminant");
    rec.note = "base point: full fibre, singular point of the discriminant";
  } else if (rec.on_discriminant) {
    rec.note = "on V, smooth-point test not performed";
  } else {
    rec.note = "off V";
  }
  return rec;
}

QuadraticSection plant_base_point(const QuadraticSection& q, const Point4& point) {
  const auto it = std::find_if(point.begin(), point.end(), [](const Rational& r) { return !r.is_zero(); });
  if (it == point.end()) throw DomainError("witness point must be nonzero", "zero_point");
  const int k = static_cast<int>(it - point.begin());
  const auto deg = section_degrees(q.spec);

  auto fix = [&](const MultiPoly& s, int d) {
    Exponent e{0, 0, 0, 0};
    e[k] = d;
    const Rational value = s.evaluate(point);
    return s - MultiPoly::monomial(e, value / pow(point[k], static_cast<unsigned>(d)));
  };
  QuadraticSection out{q.spec, fix(q.s00, deg[0]), fix(q.s01, deg[1]), fix(q.s11, deg[2]), false};
  out.degenerate = out.s00.is_zero() && out.s01.is_zero() && out.s11.is_zero();
  return out;
}

QuadraticSection sample_section(const BundleSpec& spec, std::uint64_t seed, std::int64_t bound) {
  if (bound < 0) throw DomainError("coefficient bound must be non-negative");
  const auto deg = section_degrees(spec);
  Lcg64 rng(seed);
  auto draw = [&](int d) {
    MultiPoly p;
    for (const auto& e : monomials_of_degree(d)) p.add_term(e, Rational(rng.next_in(bound)));
    return p;
  };
  QuadraticSection q{spec, {}, {}, {}, false};
  q.s00 = draw(deg[0]);
  q.s01 = draw(deg[1]);
  q.s11 = draw(deg[2]);
  q.degenerate = q.s00.is_zero() && q.s01.is_zero() && q.s11.is_zero();
  return q;
}

}  // namespace cyb
