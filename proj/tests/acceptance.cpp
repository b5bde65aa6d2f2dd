#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "cyb/bundle_cohomology.hpp"
#include "cyb/chow_ring.hpp"
#include "cyb/cy_invariants.hpp"
#include "cyb/discriminant.hpp"
#include "cyb/errors.hpp"
#include "cyb/kahler_cone.hpp"

using namespace cyb;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string deg_str(const std::vector<std::int64_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

// 0 = a <= b <= 8 for criterion 1; the admissible family a <= b <= 8, b - a <= 4 otherwise.
std::vector<BundleSpec> p3_normalized(std::int64_t max_b) {
  std::vector<BundleSpec> out;
  for (std::int64_t b = 0; b <= max_b; ++b) out.push_back(BundleSpec::split(3, {0, b}));
  return out;
}

std::vector<BundleSpec> p3_admissible() {
  std::vector<BundleSpec> out;
  for (std::int64_t a = 0; a <= 8; ++a)
    for (std::int64_t b = a; b <= 8 && b - a <= 4; ++b) out.push_back(BundleSpec::split(3, {a, b}));
  return out;
}

std::vector<BundleSpec> p1_family(std::int64_t max_entry, std::int64_t max_c1) {
  std::vector<BundleSpec> out;
  for (std::int64_t a1 = 0; a1 <= max_entry; ++a1)
    for (std::int64_t a2 = a1; a2 <= max_entry; ++a2)
      for (std::int64_t a3 = a2; a3 <= max_entry; ++a3)
        if (a1 + a2 + a3 <= max_c1) out.push_back(BundleSpec::split(1, {0, a1, a2, a3}));
  return out;
}

Outcome ac1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& spec : p3_normalized(8)) {
    const auto c = closed_form_intersections(spec);
    const Rational c1(spec.c1), c2(spec.c2);
    o.expect(c.xi_h3 == Rational(1) && c.xi2_h2 == c1 && c.xi3_h == c1 * c1 - c2 &&
                 c.xi4 == c1 * c1 * c1 - Rational(2) * c1 * c2,
             "closed form " + spec.label());
    o.expect(c == reduced_intersections(spec), "reduction " + spec.label());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  return o;
}

Outcome ac2() {
  Outcome o;
  const char* fields[] = {"c3", "h_c2", "xi_c2", "antican_c2", "h3", "xi_h2", "xi2_h", "xi3"};
  for (const auto& spec : p3_admissible()) {
    const auto rep = compute_invariants_p3(spec);
    for (const char* f : fields) {
      bool seen = false;
      for (const auto& c : rep.checks)
        if (c.field == f && c.oracle) seen = true;
      o.expect(seen, std::string("no oracle for ") + f + " at " + spec.label());
    }
    o.expect(rep.all_ok(), "mismatch at " + spec.label());
  }
  const auto v = invariants_p3(BundleSpec::split(3, {0, 0})).values;
  o.expect(v.c3 == Rational(-168) && v.h_c2 == Rational(44) && v.antican_c2 == Rational(224), "(0,0) values");
  return o;
}

Outcome ac3() {
  Outcome o;
  std::optional<Rational> min_c3;
  for (const auto& spec : p3_admissible()) {
    const Rational c3 = invariants_p3(spec).values.c3;
    if (!min_c3 || c3 < *min_c3) min_c3 = c3;
  }
  o.expect(min_c3 == Rational(-296), "minimum c3 is " + (min_c3 ? min_c3->to_string() : std::string("none")));
  for (const auto& spec : p3_admissible())
    if (invariants_p3(spec).values.c3 == Rational(-296)) o.expect(gamma(spec) == 16, "minimum off gamma=16");
  return o;
}

Outcome ac4() {
  Outcome o;
  for (const auto& spec : p3_admissible()) {
    const auto p = fiber_count_paths(spec);
    const std::int64_t s = spec.degrees()[1] - spec.degrees()[0];
    o.expect(p.closed_form == 64 - 4 * gamma(spec), "closed form " + spec.label());
    o.expect(p.bezout == (4 - s) * 4 * (4 + s), "bezout " + spec.label());
    o.expect(p.agree(), "routes disagree " + spec.label());
  }
  o.expect(fiber_count(BundleSpec::split(3, {0, 0})) == 64, "(0,0) count");
  o.expect(fiber_count(BundleSpec::split(3, {0, 4})) == 0, "(0,4) count");
  return o;
}

Outcome ac5() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto family = p1_family(6, 3);
  for (const auto& spec : family) {
    const auto rep = invariants_p1(spec);
    const auto& v = rep.values;
    const std::int64_t c1 = spec.c1;
    o.expect(rep.all_ok(), "oracle " + spec.label());
    o.expect(v.c3 == Rational(-168) && v.h_c2 == Rational(24) && v.antican_c2 == Rational(224) &&
                 v.antican_cubed == Rational(512) && v.antican_sq_h == Rational(64) &&
                 v.xi_c2 == Rational(6 * c1 + 44) && v.xi3 == Rational(3 * c1 + 2),
             "values " + spec.label());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(secs < 5.0, "runtime " + std::to_string(secs) + " s");
  o.expect(family.size() == 7, "family size " + std::to_string(family.size()));
  return o;
}

Outcome ac6() {
  Outcome o;
  for (const auto& spec : p1_family(6, 18))
    o.expect((picard_number(spec).value == 2) == (spec.c1 <= 3), "picard " + spec.label());
  o.expect(picard_number(BundleSpec::split(3, {0, 4})).value == 1, "(0,4) picard");
  for (std::int64_t a = -8; a <= 8; ++a)
    for (std::int64_t b = a; b <= 8; ++b)
      o.expect(cohomology(end_bundle(SplitBundle(3, {a, b})), 2) == 0, "h2(End) " + deg_str({a, b}));
  return o;
}

Outcome ac7() {
  Outcome o;
  for (std::int64_t a = 0; a <= 8; ++a)
    for (std::int64_t b = a; b <= 8; ++b) {
      const auto spec = BundleSpec::split(3, {a, b});
      o.expect(euler_characteristic_rank2_p3(spec) == Rational(binomial(a + 3, 3) + binomial(b + 3, 3)),
               "chi " + deg_str({a, b}));
    }
  o.expect(euler_characteristic_rank2_p3(BundleSpec::split(3, {0, 4})) == Rational(36), "(0,4) chi");
  return o;
}

Outcome ac8() {
  Outcome o;
  for (std::int64_t c1 = -10; c1 <= 10; ++c1)
    for (std::int64_t c2 = -10; c2 <= 10; ++c2) {
      const auto spec = BundleSpec::from_chern(3, c1, c2);
      o.expect(degeneracy_determinant(spec) == 16 - gamma(spec), "degeneracy " + spec.label());
      const Matrix2 g = h4_gram_matrix(spec);
      const ChowClass h = ChowClass::h(spec), xi = ChowClass::xi(spec);
      const ChowClass basis[2] = {h * h, xi * h};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          o.expect(g[i][j] == integrate(basis[i] * basis[j]), "gram entry " + spec.label());
      o.expect(h4_basis_determinant(spec) == -1, "basis det " + spec.label());
    }
  for (std::int64_t c1 = -10; c1 <= 10; ++c1) {
    const auto spec = BundleSpec::from_chern(1, c1);
    const Matrix2 g = h4_gram_matrix(spec);
    const ChowClass h = ChowClass::h(spec), xi = ChowClass::xi(spec);
    const ChowClass basis[2] = {xi * h, xi * xi};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) o.expect(g[i][j] == integrate(basis[i] * basis[j]), "gram entry " + spec.label());
    o.expect(h4_basis_determinant(spec) == -1, "basis det " + spec.label());
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  for (const auto& spec : p1_family(6, 18)) {
    const auto r = rationality_analysis(w_cubic(spec));
    o.expect(r.verdict == Rationality::kRationalDoubleLine && !r.double_lines.empty(), "verdict " + spec.label());
  }
  Lcg64 rng(20240601);
  int recovered = 0;
  for (int trial = 0; trial < 100; ++trial) {
    // (p x - q y)^2 (u x - v y) times a nonzero scalar, with [p:q] != [u:v]
    std::int64_t p = 0, q = 0, u = 0, v = 0;
    while ((p == 0 && q == 0) || (u == 0 && v == 0) || p * v == q * u) {
      p = rng.next_in(6);
      q = trial % 10 == 0 ? 0 : rng.next_in(6);
      u = rng.next_in(6);
      v = rng.next_in(6);
    }
    std::int64_t scalar = 0;
    while (scalar == 0) scalar = rng.next_in(5);
    // coefficients of x^3, x^2 y, x y^2, y^3
    const std::int64_t w30 = p * p * u, w21 = -(p * p * v + 2 * p * q * u), w12 = q * q * u + 2 * p * q * v,
                       w03 = -q * q * v;
    const CubicForm w{{Rational(scalar * w30), Rational(scalar * w21), Rational(scalar * w12), Rational(scalar * w03)}};
    const auto r = rationality_analysis(w);
    bool found = false;
    for (const auto& line : r.double_lines) {
      // [line.x : line.y] == [q : p], the zero of p x - q y
      if (line.multiplicity == 2 && line.x * Rational(p) == line.y * Rational(q)) found = true;
    }
    if (r.verdict == Rationality::kRationalDoubleLine && found && r.double_lines.size() == 1) ++recovered;
  }
  o.expect(recovered == 100, "recovered " + std::to_string(recovered) + "/100 planted double lines");
  return o;
}

Outcome ac10() {
  Outcome o;
  for (const auto& spec : p1_family(3, 3)) {
    const auto& d = spec.degrees();
    int rk = 0;
    for (auto x : d) rk += x == 0 ? 1 : 0;
    ContractionKind want = ContractionKind::kExcludedByTheorem;
    std::optional<std::int64_t> count;
    if (spec.c1 == 0) {
      want = ContractionKind::kSixtyFourCurves;
      count = 64;
    } else if (spec.c1 == 1) {
      want = ContractionKind::kSixteenCurvesQuinticImage;
      count = 16;
    } else if (spec.c1 == 2) {
      want = rk == 2 ? ContractionKind::kRuledOverPoints : ContractionKind::kRuledOverQuartic;
      if (rk == 2) count = 4;
    } else {
      want = rk <= 2 ? ContractionKind::kDivisorToSurfaceP1xPk : ContractionKind::kExcludedByTheorem;
    }
    const auto rep = classify_contraction_p1(spec);
    o.expect(rep.kind == want, "kind " + spec.label());
    if (count) o.expect(rep.count == count, "count " + spec.label());
  }
  const auto s = BundleSpec::split(1, {0, 0, 0, 1});
  o.expect(verify_ky_squared(s) == -7, "K_Y^2");
  const ChowClass e = ChowClass::xi(s) - ChowClass::h(s);
  o.expect(integrate(anticanonical(s) * e.pow(3)) == Rational(-7), "(-K).(xi-H)^3");
  o.expect(classify_contraction_p1(s).k_y_squared == -7, "reported K_Y^2");
  o.expect(fiber_count(BundleSpec::split(3, {0, 0})) == 64, "64 cross-check");
  return o;
}

Outcome ac11_spec(const BundleSpec& spec) {
  constexpr int kSections = 50;
  Outcome o;
  o.expect(base_locus_expected(spec) == fiber_count(spec), "base locus " + spec.label());
  for (int k = 0; k < kSections; ++k) {
    const std::uint64_t seed = static_cast<std::uint64_t>(k) * 7919 + 1;
    const auto q = sample_section(spec, seed, 3);
    const Octic oct = build_discriminant(q);
    o.expect(oct.poly.is_zero() || oct.poly.is_homogeneous_of(8), "degree " + spec.label());
    const Rational r(static_cast<std::int64_t>(k % 7) - 3, static_cast<std::int64_t>(k % 4) + 1);
    o.expect(scaling_law_check(q, r), "scaling " + spec.label());
    o.expect(gradient_identity_check(q), "gradient " + spec.label());
    Lcg64 prng(seed ^ 0x5bd1e995ULL);
    Point4 p;
    for (auto& c : p) c = Rational(prng.next_in(4), 1 + (prng.next_in(2) + 2));
    if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero() && p[3].is_zero()) p[3] = Rational(1);
    const auto w = singularity_witness(plant_base_point(q, p), p);
    o.expect(w.on_base_locus && w.delta.is_zero() && w.singular, "witness " + spec.label());
  }
  return o;
}

Outcome ac11() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::future<Outcome>> jobs;
  for (const auto& spec : p3_admissible())
    jobs.push_back(std::async(std::launch::async, [spec] {
      try {
        return ac11_spec(spec);
      } catch (const std::exception& e) {
        Outcome bad;
        bad.fail(spec.label() + ": " + e.what());
        return bad;
      }
    }));
  for (auto& j : jobs) {
    const Outcome part = j.get();
    if (!part.ok) o.fail(part.detail);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(secs < 30.0, "runtime " + std::to_string(secs) + " s");
  return o;
}

Outcome ac12() {
  Outcome o;
  std::vector<BundleSpec> specs = p3_admissible();
  for (const auto& s : p1_family(6, 18)) specs.push_back(s);
  int rho2 = 0;
  for (const auto& spec : specs) {
    if (picard_number(spec).value != 2) continue;
    ++rho2;
    const auto k = boundary_rays(spec);
    o.expect(k.c2_values[0] > Rational(0) && k.c2_values[1] > Rational(0), "ray value " + spec.label());
  }
  o.expect(rho2 > 0, "no rho=2 specs");
  for (const auto& spec : p3_admissible()) {
    const UniPoly p = c2_on_boundary_combination(spec);
    o.expect(p == UniPoly({Rational(8 * gamma(spec) + 224), Rational(44)}), "boundary polynomial " + spec.label());
    o.expect(c2_dominates_lower_bound(spec), "lower bound " + spec.label());
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"intersection closed forms over P^3", ac1},
      {"invariant list over P^3", ac2},
      {"c3 lower bound realized at gamma=16", ac3},
      {"fibre count three-way agreement", ac4},
      {"invariant list over P^1", ac5},
      {"Picard number criteria", ac6},
      {"Euler characteristic of the bundle", ac7},
      {"determinant identities", ac8},
      {"cone rationality", ac9},
      {"contraction classification", ac10},
      {"discriminant properties", ac11},
      {"c2 positivity", ac12},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] AC%zu %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.ok ? "" : ": ", o.detail.c_str());
    if (!o.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
