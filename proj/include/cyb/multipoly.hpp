#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyb/rational.hpp"

namespace cyb {

/// Exponent vector (powers of z0..z3).
using Exponent = std::array<int, 4>;

inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2] + e[3]; }

/// Graded lexicographic order, largest first: higher total degree wins, ties are broken
/// lexicographically with z0 > z1 > z2 > z3.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// All exponents of total degree d in four variables, in graded-lex order.
std::vector<Exponent> monomials_of_degree(int d);

using Point4 = std::array<Rational, 4>;

/// Sparse polynomial in z0..z3 over Q. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rational, GradedLexGreater>;

  MultiPoly() = default;

  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(int i);
  static MultiPoly monomial(const Exponent& e, const Rational& c = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);

  /// Common total degree of all terms; nullopt if mixed. The zero polynomial is
  /// homogeneous of every degree and reports nullopt here; see is_homogeneous_of.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous_of(int d) const;

  Rational evaluate(const Point4& point) const;
  MultiPoly partial(int var) const;

  /// Canonical text: graded-lex order, "num/den" coefficients, e.g. "3/1*z0^2*z1 + -1/2*z3".
  std::string to_string() const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

 private:
  Terms terms_;
};

MultiPoly multipoly_mul(const MultiPoly& a, const MultiPoly& b);
inline MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return multipoly_mul(a, b); }

std::array<MultiPoly, 4> multipoly_gradient(const MultiPoly& p);

}  // namespace cyb
