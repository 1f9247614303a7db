#pragma once

#include "seqvcg/oracle.hpp"
#include "seqvcg/scenarios.hpp"

namespace seqvcg {

/// One of the four built-in worked examples, ready to run and verify.
struct ExampleSetup {
  Mechanism mech;
  TypeProfile true_types;
  std::vector<SequentialStrategy> strategies;  // per player, tax-minimizing
  GridSpec grid;  // contains 0, the true values, and the cost/bounds
  std::vector<std::string> labels;
};

ExampleSetup example_public_project_funded();  // values 60/70/250, cost 300
ExampleSetup example_public_project_short();   // values 60/70/150, cost 300
ExampleSetup example_bounded_project();        // bounds 100/80/150
ExampleSetup example_choose_project();         // two projects, three players

/// One numeric cell of a reference table. `published` is the value as
/// printed in the source table; `expected` is what the comparison uses
/// and differs from `published` only for documented errata.
struct TableCell {
  std::string column;
  Rational published;
  Rational expected;
  Rational actual;
  bool match = false;
  bool erratum = false;
  std::string note;
};

struct TableRow {
  std::string key;  // player label or ordering
  std::vector<TableCell> cells;
};

struct TableReport {
  std::string id;  // "1", "1a", ..., "4a"
  std::string caption;
  std::vector<TableRow> rows;
  bool all_match = false;
};

TableReport reproduce_table(const std::string& id);
std::vector<TableReport> reproduce_all_tables();
std::vector<std::string> table_ids();

}  // namespace seqvcg
