#include "cyb/report.hpp"

#include <sstream>

#include "cyb/bundle_cohomology.hpp"
#include "cyb/cy_invariants.hpp"
#include "cyb/errors.hpp"
#include "cyb/multipoly.hpp"

namespace cyb {

Json json_number(const Rational& r) {
  if (r.is_integer()) return r.to_int64();
  return r.to_string();
}

namespace {

void put_checked(Json& row, const InvariantReport& inv, const std::string& name, const Rational& value) {
  row[name] = json_number(value);
  row[name + "_oracle_ok"] = inv.field_ok(name);
}

}  // namespace

Json kahler_json(const BundleSpec& spec, const KahlerReport& report) {
  Json j;
  j["rays"] = report.rays;
  j["ray_labels"] = {"pi^*h", "xi|X"};
  j["cubic"] = {json_number(report.cubic.coeffs[0]), json_number(report.cubic.coeffs[1]),
                json_number(report.cubic.coeffs[2]), json_number(report.cubic.coeffs[3])};
  j["cubic_text"] = report.cubic.to_string();
  j["rationality"] = to_string(report.rationality.verdict);
  j["gcd_chart"] = report.rationality.chart;
  j["gcd"] = report.rationality.gcd.to_string();
  auto lines = Json::array();
  for (const auto& l : report.rationality.double_lines)
    lines.push_back({{"x", l.x.to_string()}, {"y", l.y.to_string()}, {"multiplicity", l.multiplicity}});
  j["double_lines"] = lines;
  j["c2_values"] = {json_number(report.c2_values[0]), json_number(report.c2_values[1])};
  if (report.degeneracy_det) j["degeneracy_det"] = *report.degeneracy_det;
  j["basis_det"] = report.basis_det;
  if (spec.base_dim == 3) {
    const UniPoly p = c2_on_boundary_combination(spec.normalized());
    j["c2_boundary_polynomial"] = p.to_string("k");
    j["c2_boundary_bound_ok"] = c2_dominates_lower_bound(spec.normalized());
  }
  return j;
}

Json contraction_json(const ContractionReport& report) {
  Json j;
  j["c1"] = report.c1;
  j["rk_trivial"] = report.rk_trivial;
  j["kind"] = to_string(report.kind);
  j["count"] = report.count ? Json(*report.count) : Json(nullptr);
  if (report.k_y_squared) j["K_Y_squared"] = *report.k_y_squared;
  if (report.quartic_degree) j["quartic_degree"] = *report.quartic_degree;
  if (report.image) j["image"] = *report.image;
  j["exceptional_locus"] = report.exceptional_locus;
  return j;
}

Json report_row(const BundleSpec& spec) {
  const InvariantReport inv = compute_invariants(spec);
  const CyInvariants& v = inv.values;
  bool all_ok = inv.all_ok();

  Json row;
  row["schema"] = kSchemaVersion;
  row["base"] = spec.base_dim == 3 ? "p3" : "p1";
  if (spec.is_split()) {
    row["degrees"] = spec.degrees();
    row["normalized_degrees"] = spec.normalized().degrees();
  }
  row["c1"] = spec.c1;
  if (spec.base_dim == 3) {
    row["c2"] = spec.c2;
    row["gamma"] = json_number(*v.gamma);
    if (spec.is_split()) row["admissible"] = admissibility_p3(spec).admissible;
  }
  put_checked(row, inv, "c3", v.c3);
  put_checked(row, inv, "h_c2", v.h_c2);
  put_checked(row, inv, "xi_c2", v.xi_c2);
  put_checked(row, inv, "antican_c2", v.antican_c2);
  if (v.antican_cubed) put_checked(row, inv, "antican_cubed", *v.antican_cubed);
  if (v.antican_sq_h) put_checked(row, inv, "antican_sq_h", *v.antican_sq_h);
  put_checked(row, inv, "h3", v.h3);
  put_checked(row, inv, "xi_h2", v.xi_h2);
  put_checked(row, inv, "xi2_h", v.xi2_h);
  put_checked(row, inv, "xi3", v.xi3);
  if (spec.base_dim == 3) {
    if (v.fiber_count) {
      row["fiber_count"] = *v.fiber_count;
      row["fiber_count_oracle_ok"] = inv.field_ok("fiber_count");
    } else {
      row["fiber_count"] = nullptr;
    }
    const Rational chi = euler_characteristic_rank2_p3(spec);
    row["euler_characteristic"] = json_number(chi);
    if (spec.is_split()) {
      const bool ok = chi == Rational(euler_characteristic(SplitBundle(3, spec.degrees())));
      row["euler_characteristic_oracle_ok"] = ok;
      all_ok = all_ok && ok;
    }
  }
  if (v.picard) {
    row["picard_number"] = v.picard->value;
    row["picard_hypotheses_verified"] = v.picard->hypotheses_verified;
  }

  if (const auto refusal = boundary_rays_refusal(spec)) {
    row["kahler_refusal"] = *refusal;
  } else {
    const KahlerReport k = boundary_rays(spec);
    row["rationality"] = to_string(k.rationality.verdict);
    row["c2_ray_h"] = json_number(k.c2_values[0]);
    row["c2_ray_xi"] = json_number(k.c2_values[1]);
    if (k.degeneracy_det) row["degeneracy_det"] = *k.degeneracy_det;
    row["basis_det"] = k.basis_det;
    if (spec.base_dim == 3) {
      const bool bound_ok = c2_dominates_lower_bound(spec.normalized());
      row["c2_boundary_bound_ok"] = bound_ok;
      all_ok = all_ok && bound_ok;
    }
  }
  if (spec.base_dim == 1 && spec.is_split() && spec.normalized().c1 <= 3) {
    const ContractionReport c = classify_contraction_p1(spec);
    row["contraction_kind"] = to_string(c.kind);
    row["contraction_count"] = c.count ? Json(*c.count) : Json(nullptr);
  }
  row["oracle_ok"] = all_ok;
  return row;
}

Json witness_json(const WitnessRecord& rec) {
  Json j;
  j["point"] = {rec.point[0].to_string(), rec.point[1].to_string(), rec.point[2].to_string(), rec.point[3].to_string()};
  j["s00"] = rec.s00.to_string();
  j["s01"] = rec.s01.to_string();
  j["s11"] = rec.s11.to_string();
  j["delta"] = rec.delta.to_string();
  j["gradient"] = {rec.gradient[0].to_string(), rec.gradient[1].to_string(), rec.gradient[2].to_string(),
                   rec.gradient[3].to_string()};
  j["on_base_locus"] = rec.on_base_locus;
  j["on_discriminant"] = rec.on_discriminant;
  j["singular"] = rec.singular;
  j["note"] = rec.note;
  return j;
}

Json discriminant_report(const BundleSpec& spec, std::uint64_t seed, std::int64_t bound) {
  const QuadraticSection q = sample_section(spec, seed, bound);
  const Octic octic = build_discriminant(q);
  const auto deg = section_degrees(spec);

  // Witness point from a second stream so the section itself depends only on the seed.
  Lcg64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Point4 point{Rational(rng.next_in(3)), Rational(rng.next_in(3)), Rational(rng.next_in(3)), Rational(rng.next_in(3))};
  if (point[0].is_zero()) point[0] = Rational(1);
  const QuadraticSection planted = plant_base_point(q, point);

  const bool homogeneous = q.degenerate || octic.poly.is_zero() || octic.poly.homogeneous_degree() == 8;
  const bool scaling_ok = scaling_law_check(q, Rational(3, 2));
  const bool gradient_ok = gradient_identity_check(q);
  const WitnessRecord planted_rec = singularity_witness(planted, point);
  const WitnessRecord generic_rec = singularity_witness(q, point);
  const std::int64_t expected = base_locus_expected(spec);

  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = "discriminant";
  j["base"] = "p3";
  j["degrees"] = spec.degrees();
  j["seed"] = seed;
  j["bound"] = bound;
  j["section_degrees"] = deg;
  j["degenerate"] = q.degenerate;
  j["s00"] = q.s00.to_string();
  j["s01"] = q.s01.to_string();
  j["s11"] = q.s11.to_string();
  j["octic"] = octic.to_json();
  j["octic_space_dimension"] = monomials_of_degree(8).size() - 1;
  j["homogeneous_degree_8"] = homogeneous;
  j["scaling_law_ok"] = scaling_ok;
  j["gradient_identity_ok"] = gradient_ok;
  j["base_locus_expected"] = expected;
  j["witness_generic"] = witness_json(generic_rec);
  j["witness_planted"] = witness_json(planted_rec);
  j["oracle_ok"] = homogeneous && scaling_ok && gradient_ok && planted_rec.singular;
  return j;
}

const std::vector<std::string>& csv_columns(int base_dim) {
  static const std::vector<std::string> p3 = {
      "base", "degrees", "normalized_degrees", "c1", "c2", "gamma", "admissible", "c3", "h_c2", "xi_c2",
      "antican_c2", "h3", "xi_h2", "xi2_h", "xi3", "fiber_count", "euler_characteristic", "picard_number",
      "picard_hypotheses_verified", "rationality", "c2_ray_h", "c2_ray_xi", "degeneracy_det", "basis_det",
      "kahler_refusal", "oracle_ok"};
  static const std::vector<std::string> p1 = {
      "base", "degrees", "normalized_degrees", "c1", "c3", "h_c2", "xi_c2", "antican_c2", "antican_cubed",
      "antican_sq_h", "h3", "xi_h2", "xi2_h", "xi3", "picard_number", "picard_hypotheses_verified",
      "rationality", "c2_ray_h", "c2_ray_xi", "basis_det", "kahler_refusal", "contraction_kind",
      "contraction_count", "oracle_ok"};
  if (base_dim == 3) return p3;
  if (base_dim == 1) return p1;
  throw InvalidSpec("no CSV layout for base dimension " + std::to_string(base_dim), "unsupported_base");
}

std::string csv_header(int base_dim) {
  std::string out;
  for (const auto& c : csv_columns(base_dim)) out += (out.empty() ? "" : ",") + c;
  return out;
}

namespace {

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return quoted + "\"";
  }
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) out += (out.empty() ? "" : " ") + csv_cell(e);
    return out;
  }
  return v.dump();
}

}  // namespace

std::string csv_line(const Json& row, int base_dim) {
  std::string out;
  bool first = true;
  for (const auto& c : csv_columns(base_dim)) {
    if (!first) out += ',';
    first = false;
    if (row.contains(c)) out += csv_cell(row[c]);
  }
  return out;
}

std::string text_lines(const Json& row) {
  std::ostringstream os;
  for (const auto& [key, value] : row.items()) {
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return os.str();
}

}  // namespace cyb
