#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cyb/bundle_spec.hpp"
#include "cyb/rational.hpp"

namespace cyb {

/// Unreduced polynomial in xi = O_Z(1) and H = p^*h, keyed by (xi power, H power).
using FormalPoly = std::map<std::pair<int, int>, Rational>;

FormalPoly formal_mul(const FormalPoly& a, const FormalPoly& b);

/// Element of the Chow ring of Z = P(E), stored in normal form: a grid of coefficients of
/// xi^i H^j with i < rank and j <= base_dim. Products are reduced eagerly through
///   xi^r = sum_{k>=1} (-1)^{k+1} c_k(E) H^k xi^{r-k},   H^{m+1} = 0.
class ChowClass {
 public:
  explicit ChowClass(BundleSpec spec);

  static ChowClass one(const BundleSpec& spec) { return constant(spec, Rational(1)); }
  static ChowClass constant(const BundleSpec& spec, const Rational& c);
  static ChowClass xi(const BundleSpec& spec);
  static ChowClass h(const BundleSpec& spec);
  /// xi^i H^j reduced to normal form.
  static ChowClass monomial(const BundleSpec& spec, int xi_pow, int h_pow);

  const BundleSpec& spec() const { return spec_; }
  const Rational& coeff(int xi_pow, int h_pow) const;
  bool is_zero() const;
  /// Common degree i + j of the nonzero entries; nullopt for zero or mixed classes.
  std::optional<int> pure_degree() const;
  /// The degree-k homogeneous piece.
  ChowClass graded_part(int k) const;
  ChowClass pow(unsigned n) const;

  /// [{"xi_pow": i, "h_pow": j, "coeff": "num/den"}, ...] over nonzero entries.
  nlohmann::ordered_json to_json() const;

  ChowClass& operator+=(const ChowClass& o);
  ChowClass& operator-=(const ChowClass& o);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const Rational& s, ChowClass a);
  friend bool operator==(const ChowClass& a, const ChowClass& b) = default;

 private:
  friend ChowClass reduce(const BundleSpec& spec, const FormalPoly& poly);
  Rational& at(int xi_pow, int h_pow);

  BundleSpec spec_;
  std::vector<Rational> grid_;  // rank rows (xi power) x (base_dim + 1) columns (H power)
};

ChowClass reduce(const BundleSpec& spec, const FormalPoly& poly);

/// Degree of the fundamental class: the coefficient of xi^{r-1} H^m.
Rational integrate(const ChowClass& c);

/// Top intersection numbers xi^{4-j} H^j on Z (j = 0..4) from the closed forms:
/// over P^3 (1, c1, c1^2 - c2, c1^3 - 2 c1 c2) for H^3 xi .. xi^4, over P^1 xi^3 H = 1 and
/// xi^4 = c1. Entries not listed vanish.
struct TopIntersections {
  Rational xi4, xi3_h, xi2_h2, xi_h3, h4;
  friend bool operator==(const TopIntersections&, const TopIntersections&) = default;
};

TopIntersections closed_form_intersections(const BundleSpec& spec);
/// Same record via reduce + integrate.
TopIntersections reduced_intersections(const BundleSpec& spec);

/// Total Chern class c_0..c_dim of a bundle on Z, one normal-form class per degree.
struct ChernTotal {
  std::vector<ChowClass> parts;
  const ChowClass& operator[](int k) const { return parts.at(k); }
  ChowClass total() const;
};

/// c(T_Z) = prod_i (1 + xi - a_i H) * (1 + H)^{m+1}. Requires split degrees.
ChernTotal tangent_total_chern(const BundleSpec& spec);

/// -K_Z = r xi + (m + 1 - c1) H.
ChowClass anticanonical(const BundleSpec& spec);

}  // namespace cyb
