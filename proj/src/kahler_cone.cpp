#include "cyb/kahler_cone.hpp"

#include <algorithm>
#include <sstream>

#include "cyb/errors.hpp"

namespace cyb {

bool CubicForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational CubicForm::evaluate(const Rational& x, const Rational& y) const {
  return coeffs[0] * x * x * x + coeffs[1] * x * x * y + coeffs[2] * x * y * y + coeffs[3] * y * y * y;
}

UniPoly CubicForm::chart_y1() const { return UniPoly({coeffs[3], coeffs[2], coeffs[1], coeffs[0]}); }

UniPoly CubicForm::chart_x1() const { return UniPoly({coeffs[0], coeffs[1], coeffs[2], coeffs[3]}); }

std::string CubicForm::to_string() const {
  static const char* const kMonomials[] = {"x^3", "x^2*y", "x*y^2", "y^3"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    if (coeffs[i].is_zero()) continue;
    os << (first ? "" : " + ") << coeffs[i].to_string() << '*' << kMonomials[i];
    first = false;
  }
  return first ? "0" : os.str();
}

CubicForm w_cubic(const CyInvariants& inv) {
  return {{inv.xi3, Rational(3) * inv.xi2_h, Rational(3) * inv.xi_h2, inv.h3}};
}

CubicForm w_cubic(const BundleSpec& spec) {
  const InvariantReport r = spec.base_dim == 3 ? invariants_p3(spec) : invariants_p1(spec);
  return w_cubic(r.values);
}

const char* to_string(Rationality r) {
  switch (r) {
    case Rationality::kRationalDoubleLine: return "RationalDoubleLine";
    case Rationality::kRationalFactors: return "RationalFactors";
    case Rationality::kIrrationalOrUnresolved: return "IrrationalOrUnresolved";
  }
  return "?";
}

RationalityAnalysis rationality_analysis(const CubicForm& w) {
  if (w.is_zero()) throw DomainError("rationality analysis of the zero cubic form", "zero_form");
  RationalityAnalysis out;

  const UniPoly u = w.chart_y1();
  const UniPoly v = w.chart_x1();
  const UniPoly gu = poly_gcd(u, derivative(u));
  const UniPoly gv = poly_gcd(v, derivative(v));
  // Multiplicity of the line y = 0, the point [1:0] missing from the y = 1 chart.
  const int at_infinity = 3 - u.degree();

  for (const auto& root : rational_roots(gu)) out.double_lines.push_back({root.value, Rational(1), root.multiplicity + 1});
  if (at_infinity >= 2) out.double_lines.push_back({Rational(1), Rational(0), at_infinity});

  if (gu.degree() >= 1) {
    out.chart = "y=1";
    out.gcd = gu;
  } else if (gv.degree() >= 1) {
    out.chart = "x=1";
    out.gcd = gv;
  } else {
    out.gcd = gu;
  }

  int found = 0;
  for (const auto& root : rational_roots(u)) {
    out.rational_lines.push_back({root.value, Rational(1), root.multiplicity});
    found += root.multiplicity;
  }
  if (at_infinity > 0) {
    out.rational_lines.push_back({Rational(1), Rational(0), at_infinity});
    found += at_infinity;
  }

  if (!out.double_lines.empty()) {
    out.verdict = Rationality::kRationalDoubleLine;
  } else if (found == 3) {
    out.verdict = Rationality::kRationalFactors;
  } else {
    out.verdict = Rationality::kIrrationalOrUnresolved;
  }
  return out;
}

std::optional<std::string> boundary_rays_refusal(const BundleSpec& spec) {
  if (!spec.is_split()) return "non-split bundle: boundary rays only asserted for normalised split bundles";
  const BundleSpec n = spec.normalized();
  if (n.base_dim == 3) {
    const auto adm = admissibility_p3(n);
    if (!adm.admissible) return "b - a = " + std::to_string(adm.spread) + " > 4: no smooth Calabi-Yau";
  }
  const PicardNumber rho = picard_number(n);
  if (rho.value != 2) return "rho(X) = " + std::to_string(rho.value) + " != 2";
  return std::nullopt;
}

KahlerReport boundary_rays(const BundleSpec& spec) {
  if (!spec.is_split()) throw InvalidSpec("boundary rays need a split bundle, got " + spec.label(), "non_split");
  if (auto why = boundary_rays_refusal(spec)) throw Inadmissible(*why + " (" + spec.label() + ")", "rho_not_2");
  const BundleSpec n = spec.normalized();
  const InvariantReport inv = n.base_dim == 3 ? invariants_p3(n) : invariants_p1(n);

  KahlerReport out;
  out.rays = {{{0, 1}, {1, 0}}};
  out.cubic = w_cubic(inv.values);
  out.rationality = rationality_analysis(out.cubic);
  out.c2_values = {inv.values.h_c2, inv.values.xi_c2};
  for (const auto& c : out.c2_values)
    if (c.sign() <= 0) throw OracleMismatch("non-positive c2 on a boundary ray of " + n.label(), "c2_not_positive");
  if (n.base_dim == 3) out.degeneracy_det = degeneracy_determinant(n);
  out.basis_det = h4_basis_determinant(n);
  return out;
}

UniPoly c2_on_boundary_combination(const BundleSpec& spec) {
  const InvariantReport inv = invariants_p3(spec);
  return UniPoly({inv.values.antican_c2, inv.values.h_c2});
}

bool c2_dominates_lower_bound(const BundleSpec& spec) {
  const UniPoly p = c2_on_boundary_combination(spec);
  const UniPoly lower({56, 44});
  for (int i = 0; i <= std::max(p.degree(), lower.degree()); ++i)
    if (p.coeff(i) < lower.coeff(i) || lower.coeff(i).sign() <= 0) return false;
  return true;
}

Rational det(const Matrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Matrix2 degeneracy_matrix(const BundleSpec& spec) {
  if (spec.base_dim != 3) throw InvalidSpec("degeneracy matrix is defined over P^3", "wrong_base");
  const ChowClass n = anticanonical(spec), xi = ChowClass::xi(spec), h = ChowClass::h(spec);
  const ChowClass v1 = xi * h, v2 = h * h;
  const Matrix2 computed{{{integrate(n * v1 * h), integrate(n * v2 * h)},
                          {integrate(n * v1 * xi), integrate(n * v2 * xi)}}};
  const Rational c1(spec.c1), c2(spec.c2);
  const Matrix2 symbolic{{{c1 + Rational(4), Rational(2)},
                          {c1 * c1 - Rational(2) * c2 + Rational(4) * c1, c1 + Rational(4)}}};
  if (computed != symbolic) throw OracleMismatch("degeneracy matrix entries disagree for " + spec.label());
  return computed;
}

std::int64_t degeneracy_determinant(const BundleSpec& spec) { return det(degeneracy_matrix(spec)).to_int64(); }

Matrix2 h4_gram_matrix(const BundleSpec& spec) {
  const ChowClass xi = ChowClass::xi(spec), h = ChowClass::h(spec);
  const ChowClass v1 = spec.base_dim == 3 ? h * h : xi * h;
  const ChowClass v2 = spec.base_dim == 3 ? xi * h : xi * xi;
  return {{{integrate(v1 * v1), integrate(v1 * v2)}, {integrate(v2 * v1), integrate(v2 * v2)}}};
}

std::int64_t h4_basis_determinant(const BundleSpec& spec) { return det(h4_gram_matrix(spec)).to_int64(); }

const char* to_string(ContractionKind k) {
  switch (k) {
    case ContractionKind::kDivisorToSurfaceP1xPk: return "DivisorToSurface_P1xPk";
    case ContractionKind::kRuledOverPoints: return "RuledOverPoints";
    case ContractionKind::kRuledOverQuartic: return "RuledOverQuartic";
    case ContractionKind::kSixteenCurvesQuinticImage: return "SixteenCurves_QuinticImage";
    case ContractionKind::kSixtyFourCurves: return "SixtyFourCurves";
    case ContractionKind::kExcludedByTheorem: return "ExcludedByTheorem";
  }
  return "?";
}

namespace {

// Class of P(F) in Z for the quotient E -> F onto the degree-0 summands: the top Chern
// class of K^v (x) O_Z(1), K the kernel.
ChowClass trivial_quotient_class(const BundleSpec& n) {
  ChowClass out = ChowClass::one(n);
  for (auto a : n.degrees())
    if (a != 0) out = out * (ChowClass::xi(n) - Rational(a) * ChowClass::h(n));
  return out;
}

}  // namespace

ContractionReport classify_contraction_p1(const BundleSpec& spec) {
  if (spec.base_dim != 1) throw InvalidSpec("contraction classification is for bundles over P^1", "wrong_base");
  const BundleSpec n = spec.normalized();
  if (n.c1 > 3) {
    throw Inadmissible("c1 = " + std::to_string(n.c1) + " > 3 gives rho(X) != 2 (" + n.label() + ")", "rho_not_2");
  }
  ContractionReport out;
  out.c1 = n.c1;
  out.rk_trivial = static_cast<int>(std::count(n.degrees().begin(), n.degrees().end(), 0));

  const ChowClass anti = anticanonical(n), xi = ChowClass::xi(n), fiber = ChowClass::h(n);
  switch (n.c1) {
    case 3:
      if (out.rk_trivial <= 2) {
        out.kind = ContractionKind::kDivisorToSurfaceP1xPk;
        out.exceptional_locus = "E = P(F) = P^1 x P^" + std::to_string(out.rk_trivial - 1);
      } else {
        out.kind = ContractionKind::kExcludedByTheorem;
        out.exceptional_locus = "rk F = 3 with c1 = 3 is excluded (rk F <= 2)";
      }
      break;
    case 2:
      if (out.rk_trivial == 2) {
        out.kind = ContractionKind::kRuledOverPoints;
        out.count = integrate(anti * trivial_quotient_class(n) * fiber).to_int64();
        out.exceptional_locus = "E = P^1 x Y, Y = " + std::to_string(*out.count) + " points";
      } else {
        out.kind = ContractionKind::kRuledOverQuartic;
        out.quartic_degree = integrate(anti * trivial_quotient_class(n) * fiber * xi).to_int64();
        out.exceptional_locus = "E = P^1 x Y, Y a smooth plane curve of degree " + std::to_string(*out.quartic_degree);
      }
      break;
    case 1:
      out.kind = ContractionKind::kSixteenCurvesQuinticImage;
      out.k_y_squared = verify_ky_squared(n);
      out.count = 9 - *out.k_y_squared;
      out.image = "quintic in P^4 with " + std::to_string(*out.count) + " double points on a linearly embedded P^2";
      out.exceptional_locus = "E = union of " + std::to_string(*out.count) + " curves C_i = P^1";
      break;
    default:
      out.kind = ContractionKind::kSixtyFourCurves;
      out.count = fiber_count(BundleSpec::split(3, {0, 0}));
      out.exceptional_locus = "Z = P^1 x P^3, E = union of " + std::to_string(*out.count) + " curves C_i = P^1";
      break;
  }
  return out;
}

std::int64_t verify_ky_squared(const BundleSpec& spec) {
  if (spec.base_dim != 1 || !spec.is_split() || spec.normalized().degrees() != std::vector<std::int64_t>{0, 0, 0, 1}) {
    throw InvalidSpec("K_Y^2 is computed for P(O+O+O+O(1)) only, got " + spec.label(), "wrong_spec");
  }
  const BundleSpec n = spec.normalized();
  const ChowClass e = ChowClass::xi(n) - ChowClass::h(n);
  return integrate(anticanonical(n) * e * e * e).to_int64();
}

}  // namespace cyb
