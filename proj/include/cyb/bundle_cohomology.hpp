#pragma once

#include <cstdint>
#include <vector>

namespace cyb {

/// Binomial coefficient C(n, k) for n >= 0; 0 when k < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// h^i(P^m, O(d)) by Bott's formula. Throws DomainError unless 0 <= i <= m.
std::int64_t line_cohomology(int m, std::int64_t d, int i);

/// chi(P^m, O(d)) = C(d + m, m) read as a polynomial in d, valid for every integer d.
std::int64_t line_euler_characteristic(int m, std::int64_t d);

/// Direct sum of line bundles O(d_1) + ... + O(d_r) on P^m; degrees kept sorted.
class SplitBundle {
 public:
  SplitBundle(int base_dim, std::vector<std::int64_t> degrees);

  int base_dim() const { return base_dim_; }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  std::size_t rank() const { return degrees_.size(); }

  SplitBundle twist(std::int64_t d) const;
  SplitBundle dual() const;

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

 private:
  int base_dim_;
  std::vector<std::int64_t> degrees_;
};

/// S^k: all k-fold sums of degrees with repetition, C(rank + k - 1, k) summands.
SplitBundle sym_power(const SplitBundle& b, int k);

/// E^v (x) E: all differences a_i - a_j over ordered pairs.
SplitBundle end_bundle(const SplitBundle& b);

/// h^i(b), additive over summands.
std::int64_t cohomology(const SplitBundle& b, int i);

std::int64_t euler_characteristic(const SplitBundle& b);

}  // namespace cyb
