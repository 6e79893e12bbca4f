#pragma once

#include <qindep/series.hpp>

#include <json.hpp>

namespace qindep {

// Construct a builtin family from JSON parameters (all optional; every family
// has desk-scale defaults). Throws std::invalid_argument naming the violated
// constraint or listing available names for an unknown family.
SeriesFamily builtin_family(const std::string& name, const nlohmann::json& params);

std::vector<std::string> builtin_family_names();

// Canonical parameter echo (defaults filled in) for deterministic reports.
nlohmann::json family_config_echo(const std::string& name, const nlohmann::json& params);

// What the `examples` subcommand runs for a named example.
struct ExampleSpec {
  std::string family;
  std::string preset;
  nlohmann::json params;
  bool run_linear_scan = false;
  long scan_height = 10;
};
ExampleSpec example_spec(const std::string& name);
std::vector<std::string> example_names();

}  // namespace qindep
