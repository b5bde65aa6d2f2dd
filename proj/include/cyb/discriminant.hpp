#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "cyb/bundle_spec.hpp"
#include "cyb/multipoly.hpp"

namespace cyb {

/// Section s = s00 x0^2 + s01 x0 x1 + s11 x1^2 of -K_Z on P(O(a) + O(b)) over P^3, written in
/// the global split chart. Degrees: s00 is a - b + 4, s01 is 4, s11 is b - a + 4.
struct QuadraticSection {
  BundleSpec spec;
  MultiPoly s00;
  MultiPoly s01;
  MultiPoly s11;
  bool degenerate = false;  // all three components zero
};

/// (d00, d01, d11) for a split spec over P^3; throws Inadmissible when b - a > 4.
std::array<int, 3> section_degrees(const BundleSpec& spec);

/// Throws DomainError("degree_mismatch") unless every component is homogeneous of its degree.
void validate_section(const QuadraticSection& q);

QuadraticSection scale(const QuadraticSection& q, const Rational& r);

/// Degree-8 discriminant surface in P^3.
struct Octic {
  MultiPoly poly;
  /// {"degree": 8, "text": ..., "terms": [{"exp": [..], "coeff": "n/d"}, ...]}
  nlohmann::ordered_json to_json() const;
};

/// Delta = s01^2 - 4 s00 s11.
Octic build_discriminant(const QuadraticSection& q);

/// Delta(r q) == r^2 Delta(q), compared as polynomials.
bool scaling_law_check(const QuadraticSection& q, const Rational& r);

/// grad Delta == 2 s01 grad s01 - 4 s11 grad s00 - 4 s00 grad s11, compared as polynomials.
bool gradient_identity_check(const QuadraticSection& q);

/// d00 d01 d11, asserted equal to fiber_count(spec) (OracleMismatch otherwise).
std::int64_t base_locus_expected(const BundleSpec& spec);

struct WitnessRecord {
  Point4 point;
  Rational s00, s01, s11;
  Rational delta;
  std::array<Rational, 4> gradient;
  bool on_base_locus = false;   // s00 = s01 = s11 = 0
  bool on_discriminant = false; // Delta = 0
  bool singular = false;        // Delta = 0 and grad Delta = 0
  std::string note;
};

/// Evaluates the section, Delta and grad Delta at a point. On the base locus it asserts the
/// point is singular on Delta (OracleMismatch otherwise). Throws DomainError for the zero point.
WitnessRecord singularity_witness(const QuadraticSection& q, const Point4& point);

/// Replaces each s_ij by s_ij - s_ij(p) (z_k / p_k)^{d_ij} with p_k the first nonzero
/// coordinate, so that p lies in the base locus.
QuadraticSection plant_base_point(const QuadraticSection& q, const Point4& point);

/// 64-bit LCG (multiplier 6364136223846793005, increment 1442695040888963407).
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }
  /// Uniform-ish integer in [-bound, bound] from the high bits.
  std::int64_t next_in(std::int64_t bound) {
    const std::uint64_t width = static_cast<std::uint64_t>(2 * bound + 1);
    return static_cast<std::int64_t>((next() >> 33) % width) - bound;
  }

 private:
  std::uint64_t state_;
};

/// Integer coefficients in [-bound, bound] for every monomial of s00, s01, s11 (graded-lex
/// order, in that sequence). Throws Inadmissible for b - a > 4, DomainError for bound < 0.
QuadraticSection sample_section(const BundleSpec& spec, std::uint64_t seed, std::int64_t bound);

}  // namespace cyb
