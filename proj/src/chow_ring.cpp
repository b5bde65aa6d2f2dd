#include "cyb/chow_ring.hpp"

#include <algorithm>

#include "cyb/errors.hpp"

namespace cyb {

FormalPoly formal_mul(const FormalPoly& a, const FormalPoly& b) {
  FormalPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

ChowClass::ChowClass(BundleSpec spec) : spec_(std::move(spec)) {
  rank_for_base(spec_.base_dim);
  grid_.assign(static_cast<std::size_t>(spec_.rank * (spec_.base_dim + 1)), Rational(0));
}

ChowClass ChowClass::constant(const BundleSpec& spec, const Rational& c) {
  ChowClass out(spec);
  out.at(0, 0) = c;
  return out;
}

ChowClass ChowClass::xi(const BundleSpec& spec) { return monomial(spec, 1, 0); }

ChowClass ChowClass::h(const BundleSpec& spec) { return monomial(spec, 0, 1); }

ChowClass ChowClass::monomial(const BundleSpec& spec, int xi_pow, int h_pow) {
  return reduce(spec, FormalPoly{{{xi_pow, h_pow}, Rational(1)}});
}

Rational& ChowClass::at(int xi_pow, int h_pow) {
  return grid_[static_cast<std::size_t>(xi_pow * (spec_.base_dim + 1) + h_pow)];
}

const Rational& ChowClass::coeff(int xi_pow, int h_pow) const {
  static const Rational zero(0);
  if (xi_pow < 0 || xi_pow >= spec_.rank || h_pow < 0 || h_pow > spec_.base_dim) return zero;
  return grid_[static_cast<std::size_t>(xi_pow * (spec_.base_dim + 1) + h_pow)];
}

bool ChowClass::is_zero() const {
  return std::all_of(grid_.begin(), grid_.end(), [](const Rational& r) { return r.is_zero(); });
}

std::optional<int> ChowClass::pure_degree() const {
  std::optional<int> deg;
  for (int i = 0; i < spec_.rank; ++i)
    for (int j = 0; j <= spec_.base_dim; ++j) {
      if (coeff(i, j).is_zero()) continue;
      if (deg && *deg != i + j) return std::nullopt;
      deg = i + j;
    }
  return deg;
}

ChowClass ChowClass::graded_part(int k) const {
  ChowClass out(spec_);
  for (int i = 0; i < spec_.rank; ++i)
    for (int j = 0; j <= spec_.base_dim; ++j)
      if (i + j == k) out.at(i, j) = coeff(i, j);
  return out;
}

ChowClass ChowClass::pow(unsigned n) const {
  ChowClass out = one(spec_);
  for (unsigned i = 0; i < n; ++i) out = out * *this;
  return out;
}

nlohmann::ordered_json ChowClass::to_json() const {
  auto out = nlohmann::ordered_json::array();
  for (int i = 0; i < spec_.rank; ++i)
    for (int j = 0; j <= spec_.base_dim; ++j)
      if (!coeff(i, j).is_zero())
        out.push_back({{"xi_pow", i}, {"h_pow", j}, {"coeff", coeff(i, j).to_string()}});
  return out;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  if (!(spec_ == o.spec_)) throw DomainError("adding classes from different Chow rings");
  for (std::size_t k = 0; k < grid_.size(); ++k) grid_[k] += o.grid_[k];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
  if (!(spec_ == o.spec_)) throw DomainError("subtracting classes from different Chow rings");
  for (std::size_t k = 0; k < grid_.size(); ++k) grid_[k] -= o.grid_[k];
  return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  if (!(a.spec_ == b.spec_)) throw DomainError("multiplying classes from different Chow rings");
  FormalPoly prod;
  const int r = a.spec_.rank, m = a.spec_.base_dim;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j <= m; ++j) {
      if (a.coeff(i, j).is_zero()) continue;
      for (int k = 0; k < r; ++k)
        for (int l = 0; l + j <= m; ++l) {
          if (b.coeff(k, l).is_zero()) continue;
          prod[{i + k, j + l}] += a.coeff(i, j) * b.coeff(k, l);
        }
    }
  return reduce(a.spec_, prod);
}

ChowClass operator*(const Rational& s, ChowClass a) {
  for (auto& c : a.grid_) c *= s;
  return a;
}

ChowClass reduce(const BundleSpec& spec, const FormalPoly& poly) {
  const int r = spec.rank, m = spec.base_dim;
  int max_xi = r - 1;
  for (const auto& [e, c] : poly) {
    if (e.first < 0 || e.second < 0) throw DomainError("negative exponent in formal polynomial");
    max_xi = std::max(max_xi, e.first);
  }
  // Dense work grid; H powers beyond m vanish on the base and are dropped on entry.
  std::vector<std::vector<Rational>> work(static_cast<std::size_t>(max_xi + 1),
                                          std::vector<Rational>(static_cast<std::size_t>(m + 1)));
  for (const auto& [e, c] : poly)
    if (e.second <= m) work[e.first][e.second] += c;

  for (int i = max_xi; i >= r; --i)
    for (int j = 0; j <= m; ++j) {
      const Rational c = work[i][j];
      if (c.is_zero()) continue;
      work[i][j] = Rational(0);
      for (int k = 1; k <= r && j + k <= m; ++k) {
        const std::int64_t ck = spec.chern(k);
        if (ck == 0) continue;
        const Rational term = c * Rational(k % 2 == 1 ? ck : -ck);
        work[i - k][j + k] += term;
      }
    }

  ChowClass out(spec);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j <= m; ++j) out.at(i, j) = work[i][j];
  return out;
}

Rational integrate(const ChowClass& c) { return c.coeff(c.spec().rank - 1, c.spec().base_dim); }

TopIntersections closed_form_intersections(const BundleSpec& spec) {
  rank_for_base(spec.base_dim);
  const Rational c1(spec.c1), c2(spec.c2);
  if (spec.base_dim == 3) {
    return {c1 * c1 * c1 - Rational(2) * c1 * c2, c1 * c1 - c2, c1, Rational(1), Rational(0)};
  }
  return {c1, Rational(1), Rational(0), Rational(0), Rational(0)};
}

TopIntersections reduced_intersections(const BundleSpec& spec) {
  auto top = [&](int xi_pow) { return integrate(ChowClass::monomial(spec, xi_pow, 4 - xi_pow)); };
  return {top(4), top(3), top(2), top(1), top(0)};
}

ChowClass ChernTotal::total() const {
  if (parts.empty()) throw DomainError("empty Chern class");
  ChowClass out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out += parts[k];
  return out;
}

ChernTotal tangent_total_chern(const BundleSpec& spec) {
  if (!spec.is_split()) {
    throw InvalidSpec("tangent Chern class needs split degrees (" + spec.label() + ")", "non_split");
  }
  // Relative tangent part via Chern roots xi - a_i H, base part (1 + H)^{m+1}.
  FormalPoly total{{{0, 0}, Rational(1)}};
  for (std::int64_t a : spec.degrees())
    total = formal_mul(total, FormalPoly{{{0, 0}, Rational(1)}, {{1, 0}, Rational(1)}, {{0, 1}, Rational(-a)}});
  for (int k = 0; k <= spec.base_dim; ++k)
    total = formal_mul(total, FormalPoly{{{0, 0}, Rational(1)}, {{0, 1}, Rational(1)}});

  const ChowClass reduced = reduce(spec, total);
  ChernTotal out;
  for (int k = 0; k <= spec.dimension(); ++k) out.parts.push_back(reduced.graded_part(k));
  return out;
}

ChowClass anticanonical(const BundleSpec& spec) {
  return Rational(spec.rank) * ChowClass::xi(spec) +
         Rational(spec.base_dim + 1 - spec.c1) * ChowClass::h(spec);
}

}  // namespace cyb
