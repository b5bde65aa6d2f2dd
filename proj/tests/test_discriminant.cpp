#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyb/cy_invariants.hpp"
#include "cyb/discriminant.hpp"
#include "cyb/errors.hpp"

using namespace cyb;

namespace {

QuadraticSection monomial_section(const BundleSpec& spec, const MultiPoly& s00, const MultiPoly& s01,
                                  const MultiPoly& s11) {
  return QuadraticSection{spec, s00, s01, s11, false};
}

Point4 pt(int a, int b, int c, int d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

// Drops the z0-pure monomial so the polynomial vanishes at (1,0,0,0).
MultiPoly vanish_at_e0(const MultiPoly& p, int degree) {
  MultiPoly out = p;
  out = out - MultiPoly::monomial({degree, 0, 0, 0}, p.coeff({degree, 0, 0, 0}));
  return out;
}

}  // namespace

TEST_CASE("monomial example") {
  const auto spec = BundleSpec::split(3, {0, 2});
  const auto q = monomial_section(spec, MultiPoly::monomial({2, 0, 0, 0}), MultiPoly::monomial({4, 0, 0, 0}),
                                  MultiPoly::monomial({6, 0, 0, 0}));
  CHECK(build_discriminant(q).poly == MultiPoly::monomial({8, 0, 0, 0}, Rational(-3)));
}

TEST_CASE("vanishing s00 leaves s01 squared") {
  const auto spec = BundleSpec::split(3, {0, 1});
  const auto q = sample_section(spec, 5, 3);
  QuadraticSection r = q;
  r.s00 = MultiPoly{};
  CHECK(build_discriminant(r).poly == q.s01 * q.s01);
}

TEST_CASE("section degrees") {
  CHECK(section_degrees(BundleSpec::split(3, {0, 0})) == std::array<int, 3>{4, 4, 4});
  CHECK(section_degrees(BundleSpec::split(3, {0, 4})) == std::array<int, 3>{0, 4, 8});
  CHECK(section_degrees(BundleSpec::split(3, {0, 1})) == std::array<int, 3>{3, 4, 5});
  CHECK_THROWS_AS(section_degrees(BundleSpec::split(3, {0, 5})), Inadmissible);
}

TEST_CASE("degree mismatch is rejected") {
  const auto spec = BundleSpec::split(3, {0, 2});
  const auto q = monomial_section(spec, MultiPoly::monomial({3, 0, 0, 0}), MultiPoly::monomial({4, 0, 0, 0}),
                                  MultiPoly::monomial({6, 0, 0, 0}));
  CHECK_THROWS_AS(validate_section(q), DomainError);
  CHECK_THROWS_AS(build_discriminant(q), DomainError);
}

TEST_CASE("discriminant is an octic with 165 possible monomials") {
  CHECK(monomials_of_degree(8).size() == 165);
  for (std::int64_t b = 0; b <= 4; ++b) {
    const auto spec = BundleSpec::split(3, {0, b});
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Octic o = build_discriminant(sample_section(spec, seed, 4));
      if (o.poly.is_zero()) continue;
      CHECK(o.poly.is_homogeneous_of(8));
      CHECK(o.poly.size() <= 165);
    }
  }
}

TEST_CASE("scaling law") {
  const auto spec = BundleSpec::split(3, {0, 2});
  const auto q = sample_section(spec, 1, 2);
  CHECK(scaling_law_check(q, Rational(1)));
  CHECK(scaling_law_check(q, Rational(0)));
  CHECK(build_discriminant(scale(q, Rational(0))).poly.is_zero());
  CHECK(scaling_law_check(q, Rational(3, 2)));
  CHECK(build_discriminant(scale(q, Rational(3, 2))).poly == Rational(9, 4) * build_discriminant(q).poly);
}

TEST_CASE("gradient identity (randomized)") {
  for (std::int64_t b = 0; b <= 4; ++b)
    for (std::uint64_t seed = 10; seed < 20; ++seed)
      CHECK(gradient_identity_check(sample_section(BundleSpec::split(3, {0, b}), seed, 3)));
}

TEST_CASE("base locus count agrees with the fibre count") {
  CHECK(base_locus_expected(BundleSpec::split(3, {0, 0})) == 64);
  CHECK(base_locus_expected(BundleSpec::split(3, {0, 4})) == 0);
  CHECK(base_locus_expected(BundleSpec::split(3, {0, 1})) == 60);
  for (std::int64_t b = 0; b <= 4; ++b) {
    const auto spec = BundleSpec::split(3, {0, b});
    CHECK(base_locus_expected(spec) == fiber_count(spec));
  }
}

TEST_CASE("witness at a constructed base point") {
  const auto spec = BundleSpec::split(3, {0, 1});
  const auto q0 = sample_section(spec, 3, 2);
  const auto d = section_degrees(spec);
  QuadraticSection q = q0;
  q.s00 = vanish_at_e0(q0.s00, d[0]);
  q.s01 = vanish_at_e0(q0.s01, d[1]);
  q.s11 = vanish_at_e0(q0.s11, d[2]);
  const auto w = singularity_witness(q, pt(1, 0, 0, 0));
  CHECK(w.on_base_locus);
  CHECK(w.delta == Rational(0));
  for (const auto& g : w.gradient) CHECK(g == Rational(0));
  CHECK(w.singular);
}

TEST_CASE("planted base points are singular (randomized)") {
  for (std::int64_t b = 0; b <= 4; ++b) {
    const auto spec = BundleSpec::split(3, {0, b});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Lcg64 rng(seed + 1000);
      Point4 p;
      for (auto& c : p) c = Rational(rng.next_in(3));
      if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero() && p[3].is_zero()) p[2] = Rational(1);
      const auto q = plant_base_point(sample_section(spec, seed, 3), p);
      const auto w = singularity_witness(q, p);
      CHECK(w.on_base_locus);
      CHECK(w.singular);
    }
  }
}

TEST_CASE("witness notes off the base locus") {
  const auto spec = BundleSpec::split(3, {0, 2});
  const auto generic = singularity_witness(
      monomial_section(spec, MultiPoly::monomial({2, 0, 0, 0}), MultiPoly::monomial({4, 0, 0, 0}),
                       MultiPoly::monomial({6, 0, 0, 0})),
      pt(1, 0, 0, 0));
  CHECK(!generic.on_discriminant);
  CHECK(!generic.singular);
  CHECK(generic.delta == Rational(-3));

  // s00 = z0^2, s01 = 2 z0^4, s11 = z0^6: Delta vanishes identically but s00 does not
  const auto on_v = singularity_witness(
      monomial_section(spec, MultiPoly::monomial({2, 0, 0, 0}), MultiPoly::monomial({4, 0, 0, 0}, Rational(2)),
                       MultiPoly::monomial({6, 0, 0, 0})),
      pt(1, 1, 0, 0));
  CHECK(on_v.on_discriminant);
  CHECK(!on_v.on_base_locus);
  CHECK(on_v.note == "on V, smooth-point test not performed");
  CHECK_THROWS_AS(singularity_witness(sample_section(spec, 0, 1), pt(0, 0, 0, 0)), DomainError);
}

TEST_CASE("sampling is deterministic") {
  const auto spec = BundleSpec::split(3, {0, 2});
  const auto a = sample_section(spec, 0, 1), b = sample_section(spec, 0, 1);
  CHECK(a.s00 == b.s00);
  CHECK(a.s01 == b.s01);
  CHECK(a.s11 == b.s11);
  CHECK(build_discriminant(a).to_json().dump() == build_discriminant(b).to_json().dump());
  const auto c = sample_section(spec, 1, 1);
  CHECK(!(a.s01 == c.s01 && a.s00 == c.s00 && a.s11 == c.s11));
}

TEST_CASE("bound zero gives the degenerate section") {
  const auto q = sample_section(BundleSpec::split(3, {0, 3}), 9, 0);
  CHECK(q.degenerate);
  CHECK(build_discriminant(q).poly.is_zero());
  CHECK_THROWS_AS(sample_section(BundleSpec::split(3, {0, 3}), 9, -1), DomainError);
  CHECK_THROWS_AS(sample_section(BundleSpec::split(3, {0, 6}), 9, 1), Inadmissible);
}

TEST_CASE("LCG stream") {
  Lcg64 rng(0);
  CHECK(rng.next() == 1442695040888963407ULL);
  CHECK(rng.next() == 1442695040888963407ULL * 6364136223846793005ULL + 1442695040888963407ULL);
  Lcg64 r2(123);
  for (int i = 0; i < 1000; ++i) {
    const auto v = r2.next_in(2);
    CHECK(v >= -2);
    CHECK(v <= 2);
  }
}

TEST_CASE("octic serialization") {
  const auto spec = BundleSpec::split(3, {0, 2});
  const auto q = monomial_section(spec, MultiPoly::monomial({2, 0, 0, 0}), MultiPoly::monomial({4, 0, 0, 0}),
                                  MultiPoly::monomial({6, 0, 0, 0}));
  const auto j = build_discriminant(q).to_json();
  CHECK(j["degree"] == 8);
  CHECK(j["text"] == "-3/1*z0^8");
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["coeff"] == "-3/1");
}
