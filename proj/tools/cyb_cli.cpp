// cyb: invariants, Kahler cone data, contractions and discriminant octics for Calabi-Yau
// threefolds X in |-K_Z|, Z = P(E) with E of rank 2 over P^3 or rank 4 over P^1.
//
//   cyb invariants   --base p3 --degrees 0,2
//   cyb enumerate    --base p1 --max-degree 3 --format csv
//   cyb kaehler      --base p1 --degrees 0,0,1,1
//   cyb classify     --degrees 0,0,0,1
//   cyb discriminant --degrees 0,2 --seed 7 --bound 2 --out octic.json
//
// Exit status: 0 ok, 1 usage/io, 2 invalid degrees, 3 oracle mismatch, 4 inadmissible.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cyb/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of Calabi-Yau threefolds in projective bundles"};
  app.require_subcommand(1);

  cyb::RunConfig config;
  std::string base = "p3";
  std::string format = "json";

  const std::map<std::string, int> bases{{"p3", 3}, {"p1", 1}};
  const std::map<std::string, cyb::OutputFormat> formats{
      {"json", cyb::OutputFormat::kJson}, {"csv", cyb::OutputFormat::kCsv}, {"text", cyb::OutputFormat::kText}};

  auto add_common = [&](CLI::App* sub, const std::string& default_base) {
    sub->add_option("--base", base, "p3 (rank 2 over P^3) or p1 (rank 4 over P^1)")
        ->check(CLI::IsMember({"p3", "p1"}))
        ->default_str(default_base);
    sub->add_option("--degrees", config.degrees, "split degrees, comma separated")->delimiter(',');
    sub->add_option("--max-degree", config.max_degree, "enumeration bound on the largest degree");
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--seed", config.seed, "discriminant section seed");
    sub->add_option("--bound", config.bound, "discriminant coefficient bound");
    sub->add_option("--out", config.out_path, "write the report to this file");
    sub->add_option("--threads", config.threads, "worker threads for enumerate (default CYB_THREADS)");
  };

  struct Sub {
    const char* name;
    const char* help;
    cyb::Command command;
    const char* default_base;
  };
  const Sub subs[] = {
      {"invariants", "invariants of one bundle with oracle cross-checks", cyb::Command::kInvariants, "p3"},
      {"enumerate", "one report row per normalised split bundle", cyb::Command::kEnumerate, "p3"},
      {"kaehler", "cubic form, rationality verdict, boundary rays and c2 values", cyb::Command::kKaehler, "p3"},
      {"classify", "second contraction over P^1", cyb::Command::kClassify, "p1"},
      {"discriminant", "discriminant octic of a seeded section with witness checks", cyb::Command::kDiscriminant,
       "p3"},
  };
  std::map<CLI::App*, const Sub*> lookup;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, s.default_base);
    lookup[sub] = &s;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : cyb::kExitUsage;
  }

  const Sub* chosen = lookup.at(app.get_subcommands().front());
  config.command = chosen->command;
  if (app.get_subcommands().front()->count("--base") == 0) base = chosen->default_base;
  config.base_dim = bases.at(base);
  config.format = formats.at(format);
  return cyb::run(config, std::cout, std::cerr);
}
