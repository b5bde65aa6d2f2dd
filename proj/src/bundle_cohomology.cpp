#include "cyb/bundle_cohomology.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "cyb/errors.hpp"

namespace cyb {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("binomial with negative n");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::int64_t line_cohomology(int m, std::int64_t d, int i) {
  if (m < 1) throw DomainError("base dimension must be positive");
  if (i < 0 || i > m) {
    throw DomainError("cohomology index " + std::to_string(i) + " out of range for P^" + std::to_string(m));
  }
  if (i == 0) return d >= 0 ? binomial(d + m, m) : 0;
  if (i == m) return d <= -m - 1 ? binomial(-d - 1, m) : 0;
  return 0;
}

std::int64_t line_euler_characteristic(int m, std::int64_t d) {
  // (d+1)(d+2)...(d+m)/m!, exact at every step since consecutive products are divisible.
  std::int64_t out = 1;
  for (int k = 1; k <= m; ++k) out = out * (d + k) / k;
  return out;
}

SplitBundle::SplitBundle(int base_dim, std::vector<std::int64_t> degrees)
    : base_dim_(base_dim), degrees_(std::move(degrees)) {
  if (base_dim_ < 1) throw DomainError("base dimension must be positive");
  if (degrees_.empty()) throw DomainError("split bundle needs at least one summand");
  std::sort(degrees_.begin(), degrees_.end());
}

SplitBundle SplitBundle::twist(std::int64_t d) const {
  auto out = degrees_;
  for (auto& x : out) x += d;
  return {base_dim_, std::move(out)};
}

SplitBundle SplitBundle::dual() const {
  auto out = degrees_;
  for (auto& x : out) x = -x;
  return {base_dim_, std::move(out)};
}

SplitBundle sym_power(const SplitBundle& b, int k) {
  if (k < 0) throw DomainError("negative symmetric power");
  std::vector<std::int64_t> out;
  const auto& d = b.degrees();
  // Non-decreasing index sequences of length k.
  std::function<void(std::size_t, int, std::int64_t)> walk = [&](std::size_t start, int left, std::int64_t sum) {
    if (left == 0) {
      out.push_back(sum);
      return;
    }
    for (std::size_t i = start; i < d.size(); ++i) walk(i, left - 1, sum + d[i]);
  };
  walk(0, k, 0);
  return {b.base_dim(), std::move(out)};
}

SplitBundle end_bundle(const SplitBundle& b) {
  std::vector<std::int64_t> out;
  for (auto x : b.degrees())
    for (auto y : b.degrees()) out.push_back(x - y);
  return {b.base_dim(), std::move(out)};
}

std::int64_t cohomology(const SplitBundle& b, int i) {
  std::int64_t out = 0;
  for (auto d : b.degrees()) out += line_cohomology(b.base_dim(), d, i);
  return out;
}

std::int64_t euler_characteristic(const SplitBundle& b) {
  std::int64_t out = 0;
  for (auto d : b.degrees()) out += line_euler_characteristic(b.base_dim(), d);
  return out;
}

}  // namespace cyb
