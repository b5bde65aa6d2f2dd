#include "cyb/multipoly.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <unordered_map>
#include <sstream>

#include "cyb/errors.hpp"

namespace cyb {

std::vector<Exponent> monomials_of_degree(int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b)
      for (int c = d - a - b; c >= 0; --c) out.push_back({a, b, c, d - a - b - c});
  return out;
}

MultiPoly MultiPoly::constant(const Rational& c) { return monomial({0, 0, 0, 0}, c); }

MultiPoly MultiPoly::variable(int i) {
  if (i < 0 || i > 3) throw DomainError("variable index out of range");
  Exponent e{0, 0, 0, 0};
  e[i] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p;
  p.add_term(e, c);
  return p;
}

Rational MultiPoly::coeff(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  if (std::any_of(e.begin(), e.end(), [](int k) { return k < 0; }))
    throw DomainError("negative exponent");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return std::nullopt;
  return d;
}

bool MultiPoly::is_homogeneous_of(int d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return total_degree(t.first) == d; });
}

Rational MultiPoly::evaluate(const Point4& point) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (int i = 0; i < 4; ++i) m *= pow(point[i], static_cast<unsigned>(e[i]));
    acc += m;
  }
  return acc;
}

MultiPoly MultiPoly::partial(int var) const {
  if (var < 0 || var > 3) throw DomainError("variable index out of range");
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent de = e;
    --de[var];
    out.add_term(de, c * Rational(e[var]));
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      os << "*z" << i;
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) {
  MultiPoly out;
  if (s.is_zero()) return out;
  for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, s * c);
  return out;
}

namespace {

__extension__ typedef __int128 Wide;

// Products of two such values stay below 2^60, so sums of fewer than 2^67 of them fit in Wide.
constexpr std::int64_t kSmallBound = std::int64_t{1} << 30;

bool small_integer_terms(const MultiPoly& p, std::vector<std::pair<Exponent, std::int64_t>>& out) {
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_integer()) return false;
    const mpz_class n = c.numerator();
    if (!n.fits_slong_p()) return false;
    const long v = n.get_si();
    if (v >= kSmallBound || v <= -kSmallBound) return false;
    out.emplace_back(e, static_cast<std::int64_t>(v));
  }
  return true;
}

std::uint64_t pack(const Exponent& e) {
  std::uint64_t key = 0;
  for (int k : e) key = (key << 16) | static_cast<std::uint64_t>(k);
  return key;
}

Exponent unpack(std::uint64_t key) {
  Exponent e{};
  for (int i = 3; i >= 0; --i, key >>= 16) e[static_cast<std::size_t>(i)] = static_cast<int>(key & 0xffff);
  return e;
}

Rational from_wide(Wide v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return Rational(static_cast<std::int64_t>(v));
  const bool negative = v < 0;
  const unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class n = (hi << 64) + lo;
  if (negative) n = -n;
  return Rational(mpq_class(n));
}

bool packable(const MultiPoly& a, const MultiPoly& b) {
  auto max_exp = [](const MultiPoly& p) {
    int m = 0;
    for (const auto& [e, c] : p.terms())
      for (int k : e) m = std::max(m, k);
    return m;
  };
  return max_exp(a) + max_exp(b) < 0xffff;
}

}  // namespace

MultiPoly multipoly_mul(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  std::vector<std::pair<Exponent, std::int64_t>> ia, ib;
  if (packable(a, b) && small_integer_terms(a, ia) && small_integer_terms(b, ib)) {
    std::unordered_map<std::uint64_t, Wide> acc;
    acc.reserve(ia.size() * ib.size());
    for (const auto& [ea, ca] : ia)
      for (const auto& [eb, cb] : ib)
        acc[pack({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]})] += static_cast<Wide>(ca) * cb;
    for (const auto& [key, v] : acc)
      if (v != 0) out.add_term(unpack(key), from_wide(v));
    return out;
  }
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms())
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
  return out;
}

std::array<MultiPoly, 4> multipoly_gradient(const MultiPoly& p) {
  return {p.partial(0), p.partial(1), p.partial(2), p.partial(3)};
}

}  // namespace cyb
