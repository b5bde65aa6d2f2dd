#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyb/bundle_spec.hpp"
#include "cyb/cy_invariants.hpp"
#include "cyb/rational.hpp"
#include "cyb/unipoly.hpp"

namespace cyb {

/// w(x, y) = (x L1 + y L2)^3 on N^1(X) with L1 = xi|X, L2 = pi^*h.
/// coeffs = (w30, w21, w12, w03), the coefficients of x^3, x^2 y, x y^2, y^3.
struct CubicForm {
  std::array<Rational, 4> coeffs;

  bool is_zero() const;
  Rational evaluate(const Rational& x, const Rational& y) const;
  /// w(x, 1) as a polynomial in x.
  UniPoly chart_y1() const;
  /// w(1, y) as a polynomial in y.
  UniPoly chart_x1() const;
  std::string to_string() const;
};

CubicForm w_cubic(const CyInvariants& inv);
CubicForm w_cubic(const BundleSpec& spec);

enum class Rationality { kRationalDoubleLine, kRationalFactors, kIrrationalOrUnresolved };
const char* to_string(Rationality r);

/// A line through the origin of N^1(X), i.e. the point [x : y] of P^1, scaled so y = 1,
/// or (1, 0) for the point at infinity of the y = 1 chart.
struct CubicLine {
  Rational x;
  Rational y;
  int multiplicity = 1;
  friend bool operator==(const CubicLine&, const CubicLine&) = default;
};

struct RationalityAnalysis {
  Rationality verdict = Rationality::kIrrationalOrUnresolved;
  /// "y=1" or "x=1": the chart in which gcd(w, Dw) first showed a factor; empty otherwise.
  std::string chart;
  /// Monic gcd(w, Dw) in that chart (1 when no double line).
  UniPoly gcd;
  std::vector<CubicLine> double_lines;
  /// All rational lines found, with multiplicity.
  std::vector<CubicLine> rational_lines;
};

/// Double-line test via gcd(w, Dw) over Q in both dehomogenisation charts, then rational
/// root factorisation. Throws DomainError for the zero form.
RationalityAnalysis rationality_analysis(const CubicForm& w);

struct KahlerReport {
  /// Boundary rays in the basis (xi|X, pi^*h): rays[0] = pi^*h = (0, 1), rays[1] = xi|X = (1, 0).
  std::array<std::array<std::int64_t, 2>, 2> rays{};
  CubicForm cubic;
  RationalityAnalysis rationality;
  /// D.c2(X) for each ray, in the order of rays.
  std::array<Rational, 2> c2_values;
  std::optional<std::int64_t> degeneracy_det;  // P^3 only
  std::int64_t basis_det = 0;
};

/// Reasons a spec has rho != 2 or otherwise lacks the normalised split form the ray
/// statement needs; empty when boundary_rays applies.
std::optional<std::string> boundary_rays_refusal(const BundleSpec& spec);

/// Throws Inadmissible (reason "rho_not_2") when rho(X) != 2, InvalidSpec for non-split input.
/// Unnormalised input is normalised first.
KahlerReport boundary_rays(const BundleSpec& spec);

/// -K_Z|X + k pi^*h paired with c2(X), as a polynomial in k (P^3 only).
UniPoly c2_on_boundary_combination(const BundleSpec& spec);
/// Coefficient-wise comparison of c2_on_boundary_combination with 56 + 44 k, plus positivity
/// of 56 + 44 k's coefficients.
bool c2_dominates_lower_bound(const BundleSpec& spec);

using Matrix2 = std::array<std::array<Rational, 2>, 2>;
Rational det(const Matrix2& m);

/// Rows: -K_Z.G.H = 0 and -K_Z.G.xi = 0 for G = a xi H + b H^2, entries via integrate.
/// Throws OracleMismatch if the entries differ from the symbolic
/// [[c1 + 4, 2], [c1^2 - 2 c2 + 4 c1, c1 + 4]].
Matrix2 degeneracy_matrix(const BundleSpec& spec);
std::int64_t degeneracy_determinant(const BundleSpec& spec);

/// Gram matrix of the H^4(Z) basis (H^2, xi H) over P^3 and (xi H, xi^2) over P^1.
Matrix2 h4_gram_matrix(const BundleSpec& spec);
std::int64_t h4_basis_determinant(const BundleSpec& spec);

enum class ContractionKind {
  kDivisorToSurfaceP1xPk,
  kRuledOverPoints,
  kRuledOverQuartic,
  kSixteenCurvesQuinticImage,
  kSixtyFourCurves,
  kExcludedByTheorem,
};
const char* to_string(ContractionKind k);

struct ContractionReport {
  std::int64_t c1 = 0;
  int rk_trivial = 0;
  ContractionKind kind = ContractionKind::kExcludedByTheorem;
  std::optional<std::int64_t> count;
  std::optional<std::int64_t> k_y_squared;
  std::optional<std::int64_t> quartic_degree;
  std::optional<std::string> image;
  std::string exceptional_locus;
};

/// Second contraction of X in P(E) over P^1 by (c1, rank of the maximal trivial subbundle).
/// Throws Inadmissible for c1 > 3.
ContractionReport classify_contraction_p1(const BundleSpec& spec);

/// (-K_Z).(xi - H)^3 on P(O+O+O+O(1)); throws InvalidSpec for any other bundle.
std::int64_t verify_ky_squared(const BundleSpec& spec);

}  // namespace cyb
