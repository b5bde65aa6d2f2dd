#include "cyb/cy_invariants.hpp"

#include <algorithm>

#include "cyb/bundle_cohomology.hpp"
#include "cyb/errors.hpp"

namespace cyb {

namespace {

void require_base(const BundleSpec& spec, int base_dim, const char* what) {
  if (spec.base_dim != base_dim) {
    throw InvalidSpec(std::string(what) + " needs a bundle over P^" + std::to_string(base_dim) + ", got " +
                          spec.label(),
                      "wrong_base");
  }
}

void require_integral(const InvariantReport& report) {
  const CyInvariants& v = report.values;
  const std::vector<std::pair<const char*, const Rational*>> fields = {
      {"c3", &v.c3},       {"h_c2", &v.h_c2},   {"xi_c2", &v.xi_c2}, {"antican_c2", &v.antican_c2},
      {"h3", &v.h3},       {"xi_h2", &v.xi_h2}, {"xi2_h", &v.xi2_h}, {"xi3", &v.xi3}};
  for (const auto& [name, value] : fields) {
    if (!value->is_integer()) {
      throw OracleMismatch(std::string("invariant ") + name + " = " + value->to_string() + " is not integral for " +
                               report.spec.label(),
                           "non_integral");
    }
  }
}

InvariantReport throw_on_mismatch(InvariantReport report) {
  for (const auto& c : report.checks) {
    if (!c.ok()) {
      throw OracleMismatch(c.field + ": closed form " + c.closed_form.to_string() + " != oracle " +
                           c.oracle->to_string() + " for " + report.spec.label());
    }
  }
  return report;
}

struct TripleProducts {
  Rational h3, xi_h2, xi2_h, xi3;
};

TripleProducts triple_products(const BundleSpec& spec) {
  const ChowClass xi = ChowClass::xi(spec), h = ChowClass::h(spec);
  return {integrate_on_x(h * h * h), integrate_on_x(xi * h * h), integrate_on_x(xi * xi * h),
          integrate_on_x(xi * xi * xi)};
}

}  // namespace

std::int64_t gamma(const BundleSpec& spec) {
  require_base(spec, 3, "gamma");
  return spec.c1 * spec.c1 - 4 * spec.c2;
}

ChernRestriction chern_restriction(const BundleSpec& spec) {
  const ChernTotal tz = tangent_total_chern(spec);
  const ChowClass n = anticanonical(spec);
  // c_k(T_X) = sum_i c_{k-i}(T_Z) (-N)^i
  auto piece = [&](int k) {
    ChowClass acc(spec);
    ChowClass neg_pow = ChowClass::one(spec);
    for (int i = 0; i <= k; ++i) {
      acc += tz[k - i] * neg_pow;
      neg_pow = Rational(-1) * (neg_pow * n);
    }
    return acc;
  };
  return {n, piece(1), piece(2), piece(3)};
}

Rational integrate_on_x(const ChowClass& c) { return integrate(c * anticanonical(c.spec())); }

bool InvariantReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.ok(); });
}

bool InvariantReport::field_ok(const std::string& field) const {
  return std::all_of(checks.begin(), checks.end(),
                     [&](const OracleCheck& c) { return c.field != field || c.ok(); });
}

InvariantReport compute_invariants_p3(const BundleSpec& spec) {
  require_base(spec, 3, "invariants_p3");
  const std::int64_t g_int = gamma(spec);
  const Rational g(g_int), c1(spec.c1);

  InvariantReport report{spec, {}, {}};
  CyInvariants& v = report.values;
  v.base_dim = 3;
  v.gamma = g;
  v.c3 = Rational(-8) * g - Rational(168);
  v.h_c2 = Rational(44);
  v.xi_c2 = Rational(4) * g + Rational(22) * c1 + Rational(24);
  v.antican_c2 = Rational(8) * g + Rational(224);
  v.h3 = Rational(2);
  v.xi_h2 = c1 + Rational(4);
  v.xi2_h = g / Rational(2) + c1 * c1 / Rational(2) + Rational(4) * c1;
  v.xi3 = g + Rational(3, 4) * g * c1 + Rational(3) * c1 * c1 + c1 * c1 * c1 / Rational(4);

  const TripleProducts tp = triple_products(spec);
  std::optional<Rational> c3_o, h_c2_o, xi_c2_o, k_c2_o;
  if (spec.is_split()) {
    const ChernRestriction cr = chern_restriction(spec);
    const ChowClass xi = ChowClass::xi(spec), h = ChowClass::h(spec);
    c3_o = integrate_on_x(cr.c3_X);
    h_c2_o = integrate_on_x(h * cr.c2_X);
    xi_c2_o = integrate_on_x(xi * cr.c2_X);
    k_c2_o = integrate_on_x(cr.normal * cr.c2_X);
  }
  report.checks = {{"c3", v.c3, c3_o},          {"h_c2", v.h_c2, h_c2_o}, {"xi_c2", v.xi_c2, xi_c2_o},
                   {"antican_c2", v.antican_c2, k_c2_o}, {"h3", v.h3, tp.h3},    {"xi_h2", v.xi_h2, tp.xi_h2},
                   {"xi2_h", v.xi2_h, tp.xi2_h}, {"xi3", v.xi3, tp.xi3}};

  if (g_int <= 16) {
    const FiberCountPaths paths = fiber_count_paths(spec);
    v.fiber_count = paths.closed_form;
    report.checks.push_back({"fiber_count", Rational(paths.closed_form), Rational(paths.sym2_chern)});
    if (paths.bezout) report.checks.push_back({"fiber_count", Rational(paths.closed_form), Rational(*paths.bezout)});
  }
  if (spec.is_split()) v.picard = picard_number(spec);

  require_integral(report);
  return report;
}

InvariantReport compute_invariants_p1(const BundleSpec& spec) {
  require_base(spec, 1, "invariants_p1");
  const Rational c1(spec.c1);

  InvariantReport report{spec, {}, {}};
  CyInvariants& v = report.values;
  v.base_dim = 1;
  v.c3 = Rational(-168);
  v.h_c2 = Rational(24);
  v.xi_c2 = Rational(6) * c1 + Rational(44);
  v.antican_c2 = Rational(224);
  v.antican_cubed = Rational(512);
  v.antican_sq_h = Rational(64);
  v.xi3 = Rational(3) * c1 + Rational(2);
  // h^2 = 0 on P^1 and xi^3 H = 1 give the remaining triple products.
  v.xi2_h = Rational(4);
  v.xi_h2 = Rational(0);
  v.h3 = Rational(0);

  const TripleProducts tp = triple_products(spec);
  const ChowClass n = anticanonical(spec), h = ChowClass::h(spec);
  std::optional<Rational> c3_o, h_c2_o, xi_c2_o, k_c2_o;
  if (spec.is_split()) {
    const ChernRestriction cr = chern_restriction(spec);
    c3_o = integrate_on_x(cr.c3_X);
    h_c2_o = integrate_on_x(h * cr.c2_X);
    xi_c2_o = integrate_on_x(ChowClass::xi(spec) * cr.c2_X);
    k_c2_o = integrate_on_x(n * cr.c2_X);
  }
  report.checks = {{"c3", v.c3, c3_o},
                   {"h_c2", v.h_c2, h_c2_o},
                   {"xi_c2", v.xi_c2, xi_c2_o},
                   {"antican_c2", v.antican_c2, k_c2_o},
                   {"antican_cubed", *v.antican_cubed, integrate_on_x(n * n * n)},
                   {"antican_sq_h", *v.antican_sq_h, integrate_on_x(n * n * h)},
                   {"h3", v.h3, tp.h3},
                   {"xi_h2", v.xi_h2, tp.xi_h2},
                   {"xi2_h", v.xi2_h, tp.xi2_h},
                   {"xi3", v.xi3, tp.xi3}};
  if (spec.is_split()) v.picard = picard_number(spec);

  require_integral(report);
  return report;
}

InvariantReport invariants_p3(const BundleSpec& spec) { return throw_on_mismatch(compute_invariants_p3(spec)); }

InvariantReport invariants_p1(const BundleSpec& spec) { return throw_on_mismatch(compute_invariants_p1(spec)); }

InvariantReport compute_invariants(const BundleSpec& spec) {
  return spec.base_dim == 3 ? compute_invariants_p3(spec) : compute_invariants_p1(spec);
}

std::int64_t sym2_twist_c3(std::int64_t c1, std::int64_t c2, std::int64_t r) {
  return 4 * c2 * c1 + 2 * r * (c1 * c1 + 2 * c2) + 3 * r * r * c1 + r * r * r;
}

FiberCountPaths fiber_count_paths(const BundleSpec& spec) {
  require_base(spec, 3, "fiber_count");
  const std::int64_t g = gamma(spec);
  if (g > 16) {
    throw Inadmissible("gamma = " + std::to_string(g) + " > 16: no smooth Calabi-Yau in " + spec.label(),
                       "gamma_exceeds_16");
  }
  FiberCountPaths out{64 - 4 * g, sym2_twist_c3(spec.c1, spec.c2, 4 - spec.c1), std::nullopt};
  if (spec.is_split()) {
    const auto& d = spec.degrees();
    const std::int64_t spread = d[1] - d[0];
    out.bezout = (4 - spread) * 4 * (4 + spread);
  }
  return out;
}

std::int64_t fiber_count(const BundleSpec& spec) {
  const FiberCountPaths paths = fiber_count_paths(spec);
  if (!paths.agree()) throw OracleMismatch("fiber count routes disagree for " + spec.label());
  return paths.closed_form;
}

Rational euler_characteristic_rank2_p3(const BundleSpec& spec) {
  require_base(spec, 3, "euler_characteristic_rank2_p3");
  const Rational g(gamma(spec)), c1(spec.c1);
  return g * (c1 + Rational(4)) / Rational(8) + c1 * c1 * c1 / Rational(24) + c1 * c1 / Rational(2) +
         Rational(11) * c1 / Rational(6) + Rational(2);
}

std::int64_t h0_split(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw DomainError("h0_split needs non-negative degrees");
  return binomial(a + 3, 3) + binomial(b + 3, 3);
}

PicardNumber picard_number(const BundleSpec& spec) {
  const BundleSpec n = spec.normalized();
  if (n.base_dim == 3) {
    if (n.degrees() == std::vector<std::int64_t>{0, 4}) {
      return {1, true, "E = O + O(4): H^3(End E)^v = C forces rho = 1"};
    }
    const std::int64_t h2 = cohomology(end_bundle(SplitBundle(3, n.degrees())), 2);
    return {2 + h2, false, "rho = 2 + h^2(End E) assumes E stable; not verified for split bundles"};
  }
  const SplitBundle twisted = sym_power(SplitBundle(1, n.degrees()), 4).twist(2 - n.c1);
  return {2 + cohomology(twisted, 1), true, "rho = 2 + h^1(S^4 E (x) O(2 - c1))"};
}

AdmissibilityReport admissibility_p3(const BundleSpec& spec) {
  require_base(spec, 3, "admissibility_p3");
  const auto& d = spec.degrees();
  AdmissibilityReport out;
  out.spread = d[1] - d[0];
  out.gamma = gamma(spec);
  out.split_gamma = out.spread * out.spread;
  out.gamma_at_split_bound = out.gamma == out.split_gamma;
  out.gamma_le_16 = out.gamma <= 16;
  out.admissible = out.spread <= 4;
  return out;
}

}  // namespace cyb
