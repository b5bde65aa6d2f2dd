#include "cyb/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "cyb/bundle_spec.hpp"
#include "cyb/errors.hpp"
#include "cyb/kahler_cone.hpp"
#include "cyb/report.hpp"

namespace cyb {

std::vector<std::vector<std::int64_t>> enumeration_family(int base_dim, std::int64_t max_degree) {
  std::vector<std::vector<std::int64_t>> out;
  if (base_dim == 3) {
    for (std::int64_t b = 0; b <= std::min<std::int64_t>(max_degree, 4); ++b) out.push_back({0, b});
  } else if (base_dim == 1) {
    for (std::int64_t a1 = 0; a1 <= max_degree; ++a1)
      for (std::int64_t a2 = a1; a2 <= max_degree; ++a2)
        for (std::int64_t a3 = a2; a3 <= max_degree; ++a3) out.push_back({0, a1, a2, a3});
  } else {
    rank_for_base(base_dim);
  }
  return out;
}

namespace {

unsigned worker_count(unsigned requested) {
  unsigned n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("CYB_THREADS")) n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

std::vector<Json> build_rows(const std::vector<std::vector<std::int64_t>>& family, int base_dim, unsigned threads) {
  std::vector<Json> rows(family.size());
  std::vector<std::exception_ptr> errors(family.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < family.size(); i = next++) {
      try {
        rows[i] = report_row(BundleSpec::split(base_dim, family[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, family.size())));
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string render(const std::vector<Json>& rows, OutputFormat format, int base_dim, bool as_array) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::kJson:
      if (as_array) {
        os << Json(rows).dump(2) << '\n';
      } else {
        os << rows.front().dump(2) << '\n';
      }
      break;
    case OutputFormat::kCsv:
      os << csv_header(base_dim) << '\n';
      for (const auto& r : rows) os << csv_line(r, base_dim) << '\n';
      break;
    case OutputFormat::kText:
      for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? "\n" : "") << text_lines(rows[i]);
      break;
  }
  return os.str();
}

void require_degrees(const RunConfig& c) {
  const int rank = rank_for_base(c.base_dim);
  if (static_cast<int>(c.degrees.size()) != rank) {
    throw InvalidSpec("--degrees needs " + std::to_string(rank) + " comma-separated integers for base p" +
                      std::to_string(c.base_dim));
  }
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidSpec:
    case ErrorKind::kDomain: return kExitInvalidDegrees;
    case ErrorKind::kOracleMismatch: return kExitOracleMismatch;
    case ErrorKind::kInadmissible: return kExitInadmissible;
  }
  return kExitUsage;
}

void write_error(std::ostream& err, const std::string& reason, const std::string& message) {
  err << Json{{"error", reason}, {"message", message}}.dump() << '\n';
}

bool rows_ok(const std::vector<Json>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const Json& r) { return r.value("oracle_ok", false); });
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format == OutputFormat::kCsv && config.command != Command::kInvariants &&
        config.command != Command::kEnumerate) {
      throw InvalidSpec("CSV output is available for invariants and enumerate", "unsupported_format");
    }
    std::vector<Json> rows;
    bool as_array = false;
    int csv_base = config.base_dim;

    switch (config.command) {
      case Command::kInvariants: {
        require_degrees(config);
        const BundleSpec spec = BundleSpec::split(config.base_dim, config.degrees);
        if (spec.base_dim == 3 && !admissibility_p3(spec).admissible) {
          throw Inadmissible("b - a > 4: no smooth Calabi-Yau in " + spec.label());
        }
        Json row = report_row(spec);
        row["command"] = "invariants";
        rows.push_back(std::move(row));
        break;
      }
      case Command::kEnumerate: {
        if (config.max_degree < 0) throw InvalidSpec("--max-degree must be non-negative");
        rank_for_base(config.base_dim);
        rows = build_rows(enumeration_family(config.base_dim, config.max_degree), config.base_dim,
                          worker_count(config.threads));
        as_array = true;
        break;
      }
      case Command::kKaehler: {
        require_degrees(config);
        const BundleSpec spec = BundleSpec::split(config.base_dim, config.degrees);
        const KahlerReport k = boundary_rays(spec);
        Json row = report_row(spec);
        row["command"] = "kaehler";
        row["kahler"] = kahler_json(spec, k);
        rows.push_back(std::move(row));
        break;
      }
      case Command::kClassify: {
        if (config.base_dim != 1) throw InvalidSpec("classify is defined for --base p1", "classify_needs_p1");
        require_degrees(config);
        const BundleSpec spec = BundleSpec::split(1, config.degrees);
        Json row;
        row["schema"] = kSchemaVersion;
        row["command"] = "classify";
        row["base"] = "p1";
        row["degrees"] = spec.degrees();
        row["normalized_degrees"] = spec.normalized().degrees();
        const Json contraction = contraction_json(classify_contraction_p1(spec));
        for (const auto& [key, value] : contraction.items()) row[key] = value;
        row["oracle_ok"] = true;
        rows.push_back(std::move(row));
        break;
      }
      case Command::kDiscriminant: {
        if (config.base_dim != 3) throw InvalidSpec("discriminant is defined for --base p3", "discriminant_needs_p3");
        require_degrees(config);
        rows.push_back(discriminant_report(BundleSpec::split(3, config.degrees), config.seed, config.bound));
        break;
      }
    }

    const std::string text = render(rows, config.format, csv_base, as_array);
    if (config.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file) {
        write_error(err, "io_error", "cannot open " + config.out_path);
        return kExitUsage;
      }
      file << text;
    }
    if (!rows_ok(rows)) {
      write_error(err, "oracle_mismatch", "at least one closed form disagreed with its oracle");
      return kExitOracleMismatch;
    }
    return kExitOk;
  } catch (const Error& e) {
    write_error(err, e.reason(), e.what());
    return exit_for(e.kind());
  }
}

}  // namespace cyb
