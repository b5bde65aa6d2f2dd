#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyb/rational.hpp"

namespace cyb {

/// Dense univariate polynomial over Q; coeffs()[i] multiplies x^i.
/// The leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly x() { return UniPoly({0, 1}); }
  /// Monic linear factor (x - root).
  static UniPoly linear_factor(const Rational& root) { return UniPoly({-root, 1}); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int i) const;
  Rational leading() const;
  Rational evaluate(const Rational& at) const;
  UniPoly monic() const;

  std::string to_string(const std::string& var = "x") const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws DomainError on zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

UniPoly derivative(const UniPoly& p);

/// Monic gcd over Q via the Euclidean algorithm. Throws DomainError if both inputs are zero.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

struct RationalRoot {
  Rational value;
  int multiplicity = 0;
  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// All rational roots with multiplicity, sorted ascending (rational root theorem on the
/// integer-scaled polynomial). Throws DomainError on the zero polynomial.
std::vector<RationalRoot> rational_roots(const UniPoly& p);

}  // namespace cyb
