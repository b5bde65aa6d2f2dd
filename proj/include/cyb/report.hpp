#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyb/bundle_spec.hpp"
#include "cyb/discriminant.hpp"
#include "cyb/kahler_cone.hpp"
#include "cyb/rational.hpp"

namespace cyb {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Integral rationals become JSON integers, others "num/den" strings.
Json json_number(const Rational& r);

/// Flattened row for one spec: echo, invariants with per-field "<name>_oracle_ok" flags,
/// Kahler summary (or "kahler_refusal"), and the contraction for P^1 bases.
/// "oracle_ok" aggregates every comparison made for the row.
Json report_row(const BundleSpec& spec);

Json kahler_json(const BundleSpec& spec, const KahlerReport& report);
Json contraction_json(const ContractionReport& report);
Json witness_json(const WitnessRecord& rec);

/// Discriminant run for one spec and seed: section, octic, law checks, planted witness.
Json discriminant_report(const BundleSpec& spec, std::uint64_t seed, std::int64_t bound);

/// Fixed CSV column order per base (3 or 1).
const std::vector<std::string>& csv_columns(int base_dim);
std::string csv_header(int base_dim);
std::string csv_line(const Json& row, int base_dim);

/// "key: value" lines in row order; nested values are dumped compactly.
std::string text_lines(const Json& row);

}  // namespace cyb
