#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cyb {

/// The bundle E defining Z = P(E): rank 2 over P^3 or rank 4 over P^1.
///
/// Split specs carry their degrees (sorted ascending, not necessarily normalized);
/// c1 and c2 are then the elementary symmetric functions of the degrees. Non-split
/// specs carry only (c1, c2). Over P^1 only c1 matters since h^2 = 0.
struct BundleSpec {
  int base_dim = 3;
  int rank = 2;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::optional<std::vector<std::int64_t>> split_degrees;

  /// Throws InvalidSpec unless degrees.size() matches the rank for base_dim (2 on P^3, 4 on P^1).
  static BundleSpec split(int base_dim, std::vector<std::int64_t> degrees);
  static BundleSpec from_chern(int base_dim, std::int64_t c1, std::int64_t c2 = 0);

  bool is_split() const { return split_degrees.has_value(); }
  /// Split with minimum degree 0.
  bool is_normalized() const;
  /// Twist so the minimum degree is 0. Throws InvalidSpec for non-split specs.
  BundleSpec normalized() const;
  const std::vector<std::int64_t>& degrees() const;

  /// c_k(E) as an integer multiple of h^k; 0 beyond what the base supports.
  std::int64_t chern(int k) const;
  int dimension() const { return base_dim + rank - 1; }

  std::string label() const;

  friend bool operator==(const BundleSpec&, const BundleSpec&) = default;
};

/// Rank expected for a supported base dimension; throws InvalidSpec otherwise.
int rank_for_base(int base_dim);

}  // namespace cyb
