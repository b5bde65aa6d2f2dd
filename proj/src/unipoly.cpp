#include "cyb/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "cyb/errors.hpp"

namespace cyb {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[i];
}

Rational UniPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::evaluate(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading()) * *this;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].to_string();
    if (i >= 1) os << '*' << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(int(i)) + b.coeff(int(i));
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + Rational(-1) * b; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
  std::vector<Rational> out = p.coeffs_;
  for (auto& c : out) c *= s;
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<Rational> quot(a.degree() - db + 1);
  const Rational lead_inv = Rational(1) / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[k + db] * lead_inv;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly derivative(const UniPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> out(p.degree());
  for (int i = 1; i <= p.degree(); ++i) out[i - 1] = Rational(i) * p.coeffs()[i];
  return UniPoly(std::move(out));
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials", "zero_gcd");
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = ::abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("roots of the zero polynomial", "zero_form");
  std::vector<RationalRoot> roots;
  UniPoly rest = p.monic();

  int zero_mult = 0;
  while (rest.degree() >= 1 && rest.coeff(0).is_zero()) {
    rest = divmod(rest, UniPoly::x()).first;
    ++zero_mult;
  }
  if (zero_mult > 0) roots.push_back({Rational(0), zero_mult});
  if (rest.degree() < 1) return roots;

  // Scale to integer coefficients.
  mpz_class lcm_den = 1;
  for (const auto& c : rest.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  const mpz_class lead = (rest.leading() * Rational(lcm_den, 1)).numerator();
  const mpz_class tail = (rest.coeff(0) * Rational(lcm_den, 1)).numerator();

  const auto num_divs = positive_divisors(tail);
  const auto den_divs = positive_divisors(lead);
  std::vector<Rational> candidates;
  for (const auto& pn : num_divs)
    for (const auto& qd : den_divs)
      for (int s : {1, -1}) candidates.emplace_back(mpz_class(s * pn), qd);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& c : candidates) {
    int mult = 0;
    while (rest.degree() >= 1 && rest.evaluate(c).is_zero()) {
      rest = divmod(rest, UniPoly::linear_factor(c)).first;
      ++mult;
    }
    if (mult > 0) roots.push_back({c, mult});
  }
  std::sort(roots.begin(), roots.end(), [](const auto& l, const auto& r) { return l.value < r.value; });
  return roots;
}

}  // namespace cyb
