#pragma once

#include <iosfwd>

#include "seqvcg/oracle.hpp"
#include "seqvcg/scenarios.hpp"

namespace seqvcg {

/// Parse/validation failure; the message carries the line number when the
/// problem is tied to a config line.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raw parsed scenario description, one field per config key. Sectioned
/// key-value format: a [scenario] block, one [player.<label>] block per
/// player (order of appearance fixes the player indices), optional
/// [valuation.<label>] and [rule] blocks for the explicit-table kind, and
/// an optional [run] block.
struct ScenarioConfig {
  enum class Kind { PublicProject1, PublicProject2, ChooseProject, ExplicitTable };

  struct Player {
    std::string label;
    TypeValue true_type;
    std::string strategy = "tax_minimizing";  // or truth, constant:<value>
    std::optional<Rational> bound;            // public_project_2
    std::vector<Rational> bounds;             // choose_project
    std::vector<TypeValue> types;             // explicit_table finite set
    std::vector<TypeValue> grid;              // verification grid override
    // explicit_table valuations: rows[t][d] = v(decision d, types[t])
    std::vector<std::vector<Rational>> valuation_rows;
  };

  Kind kind = Kind::PublicProject1;
  Rational cost;                            // public project kinds
  int num_projects = 0;                     // choose_project
  std::vector<std::string> decision_labels; // explicit_table
  std::vector<int> rule_table;              // explicit_table, optional
  std::vector<Player> players;
  std::string ordering = "all";             // "all", "A,B,C", or ;-separated
  unsigned long long cap = kDefaultSearchCap;
};

ScenarioConfig parse_scenario_config(std::istream& in);
ScenarioConfig load_scenario_config(const std::string& path);

/// Parses "60", "3/4", "0.25", or "(6,9)" into a TypeValue.
TypeValue parse_type_value(const std::string& text);

/// A scenario ready to run: mechanism, truth, per-player strategies,
/// verification grid, and the orderings selected by the config.
struct BuiltScenario {
  Mechanism mech;
  TypeProfile true_types;
  std::vector<SequentialStrategy> strategies;
  GridSpec grid;
  std::vector<Ordering> orderings;
  std::vector<std::string> labels;
};

/// Validates and instantiates the config. `grid_step`, when given,
/// replaces the default verification grids for interval-typed players
/// with the arithmetic progression 0, step, 2*step, ... up to the
/// interval bound (distinguished points are merged in).
BuiltScenario build_scenario(const ScenarioConfig& cfg,
                             const std::optional<Rational>& grid_step = {},
                             const std::optional<std::string>& ordering_override = {});

}  // namespace seqvcg
