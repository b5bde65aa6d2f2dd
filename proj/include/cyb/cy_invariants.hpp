#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyb/bundle_spec.hpp"
#include "cyb/chow_ring.hpp"
#include "cyb/rational.hpp"

namespace cyb {

/// gamma(E) = c1^2 - 4 c2 for rank 2 on P^3.
std::int64_t gamma(const BundleSpec& spec);

/// Chern classes of X in |-K_Z|, kept on Z: c(T_X) = c(T_Z) / (1 + N) with N = -K_Z.
/// Numbers on X are obtained by integrating against N.
struct ChernRestriction {
  ChowClass normal;  // N_{X|Z} = -K_Z
  ChowClass c1_X;
  ChowClass c2_X;
  ChowClass c3_X;
};

/// Requires split degrees.
ChernRestriction chern_restriction(const BundleSpec& spec);

/// Integral over X of a class on Z: integrate(c * (-K_Z)).
Rational integrate_on_x(const ChowClass& c);

struct PicardNumber {
  std::int64_t value = 0;
  bool hypotheses_verified = false;
  std::string note;
};

/// Numerical invariants of X. Triple products are in the basis (xi|X, pi^*h).
struct CyInvariants {
  int base_dim = 3;
  std::optional<Rational> gamma;  // P^3 only
  Rational c3;
  Rational h_c2;
  Rational xi_c2;
  Rational antican_c2;
  Rational h3;
  Rational xi_h2;
  Rational xi2_h;
  Rational xi3;
  std::optional<Rational> antican_cubed;  // P^1 only
  std::optional<Rational> antican_sq_h;   // P^1 only
  std::optional<std::int64_t> fiber_count;  // P^3 only
  std::optional<PicardNumber> picard;       // split only
};

/// One closed-form value paired with its independent computation. A missing oracle
/// means the independent route is unavailable (non-split Chern numbers).
struct OracleCheck {
  std::string field;
  Rational closed_form;
  std::optional<Rational> oracle;
  bool ok() const { return !oracle || *oracle == closed_form; }
};

struct InvariantReport {
  BundleSpec spec;
  CyInvariants values;
  std::vector<OracleCheck> checks;
  bool all_ok() const;
  /// Status for a field name; true when the field has no failing check.
  bool field_ok(const std::string& field) const;
};

/// Closed forms plus oracle comparison, without throwing on disagreement.
InvariantReport compute_invariants_p3(const BundleSpec& spec);
InvariantReport compute_invariants_p1(const BundleSpec& spec);

/// As above, but throws OracleMismatch if any closed form disagrees with its oracle.
InvariantReport invariants_p3(const BundleSpec& spec);
InvariantReport invariants_p1(const BundleSpec& spec);
/// Dispatches on base_dim.
InvariantReport compute_invariants(const BundleSpec& spec);

/// The three routes to the number of full fibres of p contained in X.
struct FiberCountPaths {
  std::int64_t closed_form;                  // 64 - 4 gamma
  std::int64_t sym2_chern;                   // c3(S^2 E (x) O(r)) at r = 4 - c1
  std::optional<std::int64_t> bezout;        // d00 d01 d11, split only
  bool agree() const { return closed_form == sym2_chern && (!bezout || *bezout == closed_form); }
};

/// c3(S^2 E (x) O(r)) = 4 c2 c1 + 2 r (c1^2 + 2 c2) + 3 r^2 c1 + r^3.
std::int64_t sym2_twist_c3(std::int64_t c1, std::int64_t c2, std::int64_t r);

/// Throws Inadmissible when gamma > 16.
FiberCountPaths fiber_count_paths(const BundleSpec& spec);
/// 64 - 4 gamma after checking all routes agree (OracleMismatch otherwise).
std::int64_t fiber_count(const BundleSpec& spec);

/// Riemann-Roch chi(E) for rank 2 on P^3:
///   gamma (c1 + 4) / 8 + c1^3 / 24 + c1^2 / 2 + 11 c1 / 6 + 2.
Rational euler_characteristic_rank2_p3(const BundleSpec& spec);
/// C(a+3, 3) + C(b+3, 3) for a, b >= 0.
std::int64_t h0_split(std::int64_t a, std::int64_t b);

PicardNumber picard_number(const BundleSpec& spec);

struct AdmissibilityReport {
  bool admissible = false;
  std::int64_t spread = 0;         // b - a
  std::int64_t gamma = 0;
  std::int64_t split_gamma = 0;    // (a - b)^2, the maximum over bundles of this splitting type
  bool gamma_at_split_bound = false;
  bool gamma_le_16 = false;
};

/// b - a <= 4 for split rank 2 on P^3.
AdmissibilityReport admissibility_p3(const BundleSpec& spec);

}  // namespace cyb
