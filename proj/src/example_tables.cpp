// Reproduction of the eight reference tables from the worked public
// project examples. All expected values in this file are transcribed
// from the published tables; each block names its source table. The one
// place where a published value disagrees with exact evaluation of the
// mechanism's own formulas is flagged as an erratum below, with both
// values kept.
//
// Utility-column mapping (the published tables are not uniform): table 1
// prints the valuation-only utility v_i in every row (row C shows 150 =
// 250 - 100, the tax 70 not subtracted), while tables 2, 3, and 4 print
// the transfer-inclusive utility v_i + t_i (in tables 2 and 3 the
// project is off, so v_i = 0 and the printed values equal -tax). The
// comparison below follows that row-consistent mapping; `run` output
// always shows both columns.

#include "seqvcg/example_tables.hpp"

#include <array>

namespace seqvcg {

namespace {

TypeValue sc(long v) { return TypeValue::scalar(Rational(v)); }
TypeValue vc(long a, long b) {
  return TypeValue::vec({Rational(a), Rational(b)});
}

const std::vector<std::string> kLabels = {"A", "B", "C"};

}  // namespace

ExampleSetup example_public_project_funded() {
  PublicProjectParams params;
  params.n = 3;
  params.cost = 300;
  params.labels = kLabels;
  ExampleSetup ex;
  ex.labels = kLabels;
  ex.mech = Mechanism::clarke(build_public_project(params));
  ex.true_types = TypeProfile{{sc(60), sc(70), sc(250)}};
  ex.strategies.assign(3, public_project_strategy(params));
  const std::vector<TypeValue> pts = {sc(0), sc(60), sc(70), sc(250), sc(300)};
  ex.grid = GridSpec{Grids(3, pts)};
  return ex;
}

ExampleSetup example_public_project_short() {
  PublicProjectParams params;
  params.n = 3;
  params.cost = 300;
  params.labels = kLabels;
  ExampleSetup ex;
  ex.labels = kLabels;
  ex.mech = Mechanism::clarke(build_public_project(params));
  ex.true_types = TypeProfile{{sc(60), sc(70), sc(150)}};
  ex.strategies.assign(3, public_project_strategy(params));
  const std::vector<TypeValue> pts = {sc(0), sc(60), sc(70), sc(150), sc(300)};
  ex.grid = GridSpec{Grids(3, pts)};
  return ex;
}

ExampleSetup example_bounded_project() {
  BoundedProjectParams params;
  params.n = 3;
  params.cost = 300;
  params.bounds = {Rational(100), Rational(80), Rational(150)};
  params.labels = kLabels;
  ExampleSetup ex;
  ex.labels = kLabels;
  ex.mech = Mechanism::clarke(build_bounded_public_project(params));
  ex.true_types = TypeProfile{{sc(60), sc(70), sc(150)}};
  ex.strategies.assign(3, bounded_project_strategy(params));
  ex.grid = GridSpec{Grids{
      {sc(0), sc(30), sc(60), sc(80), sc(100)},
      {sc(0), sc(20), sc(40), sc(70), sc(80)},
      {sc(0), sc(50), sc(100), sc(120), sc(150)},
  }};
  return ex;
}

ExampleSetup example_choose_project() {
  ChooseProjectParams params;
  params.n = 3;
  params.m = 2;
  params.bounds = {{Rational(9), Rational(10)},
                   {Rational(12), Rational(2)},
                   {Rational(34), Rational(40)}};
  params.labels = kLabels;
  ExampleSetup ex;
  ex.labels = kLabels;
  ex.mech = Mechanism::clarke(build_choose_project(params));
  ex.true_types = TypeProfile{{vc(6, 9), vc(12, 1), vc(30, 40)}};
  ex.strategies.assign(3, choose_project_strategy(params));
  ex.grid = GridSpec{Grids{
      {vc(0, 0), vc(6, 9), vc(9, 10), vc(9, 0), vc(0, 10)},
      {vc(0, 0), vc(12, 1), vc(12, 2), vc(12, 0), vc(0, 2)},
      {vc(0, 0), vc(30, 40), vc(34, 40), vc(34, 0), vc(0, 40)},
  }};
  return ex;
}

namespace {

struct SimExpected {
  const char* player;
  long tax;
  long cost_share;  // -1 when the table has no cost share column
  long utility_published;
  long utility_corrected;  // equals utility_published unless erratum
  const char* note;
};

struct SeqExpected {
  long taxes[3];  // t_A, t_B, t_C in ordering-row order ABC..CBA
};

struct TableDef {
  const char* id;
  const char* caption;
  ExampleSetup (*setup)();
  bool sequential;
  bool utility_is_full;  // compare utility against v+t instead of v only
  std::vector<SimExpected> sim;
  std::vector<SeqExpected> seq;
};

// Source table 1: simultaneous taxes, the project takes place; its
//   utility column is v_i only.
// Source table 2: simultaneous taxes, the project does not take place;
//   utility column is v_i + t_i (= -tax, since v_i = 0 at decision 0).
// Source table 3: same values with bounded type intervals.
// Source table 4: project choice; its utility column is v_i + t_i.
//   Erratum (table 4, row B): printed utility 0, but v_B + t_B =
//   1 + 0 = 1 by the table's own transfer formula; corrected to 1.
// Source tables 1a/2a/3a/4a: per-ordering sequential taxes, rows in
// lexicographic ordering order A B C ... C B A.
const std::vector<TableDef>& table_defs() {
  static const std::vector<TableDef> defs = {
      {"1", "Clarke taxes: the project takes place",
       example_public_project_funded, false, false,
       {{"A", 0, 100, -40, -40, ""},
        {"B", 0, 100, -30, -30, ""},
        {"C", 70, 100, 150, 150, ""}},
       {}},
      {"1a", "Clarke taxes in the sequential cases",
       example_public_project_funded, true, false, {},
       {{{0, 0, 70}},
        {{0, 0, 0}},
        {{0, 0, 70}},
        {{0, 0, 0}},
        {{0, 0, 0}},
        {{0, 0, 0}}}},
      {"2", "Clarke taxes: the project does not take place",
       example_public_project_short, false, true,
       {{"A", 20, 0, -20, -20, ""},
        {"B", 10, 0, -10, -10, ""},
        {"C", 0, 0, 0, 0, ""}},
       {}},
      {"2a", "Clarke taxes in the sequential cases",
       example_public_project_short, true, false, {},
       {{{0, 0, 0}},
        {{0, 10, 0}},
        {{0, 0, 0}},
        {{20, 0, 0}},
        {{0, 10, 0}},
        {{20, 0, 0}}}},
      {"3", "Clarke taxes: the project does not take place",
       example_bounded_project, false, true,
       {{"A", 20, 0, -20, -20, ""},
        {"B", 10, 0, -10, -10, ""},
        {"C", 0, 0, 0, 0, ""}},
       {}},
      {"3a", "Clarke taxes in the sequential cases, with limited sets of types",
       example_bounded_project, true, false, {},
       {{{0, 0, 0}},
        {{0, 0, 0}},
        {{0, 0, 0}},
        {{20, 0, 0}},
        {{0, 0, 0}},
        {{20, 0, 0}}}},
      {"4", "Clarke taxes: project 2 takes place",
       example_choose_project, false, true,
       {{"A", 1, -1, 8, 8, ""},
        {"B", 0, -1, 0, 1,
         "published utility 0 is inconsistent with the transfer formula; "
         "v_B + t_B = 1 + 0 = 1"},
        {"C", 8, -1, 32, 32, ""}},
       {}},
      {"4a", "Clarke taxes in the sequential cases",
       example_choose_project, true, true, {},
       {{{0, 0, 8}},
        {{0, 0, 0}},
        {{0, 0, 8}},
        {{1, 0, 1}},
        {{0, 0, 0}},
        {{1, 0, 1}}}},
  };
  return defs;
}

TableCell make_cell(std::string column, Rational published, Rational expected,
                    Rational actual, std::string note = "") {
  TableCell c;
  c.column = std::move(column);
  c.published = std::move(published);
  c.expected = std::move(expected);
  c.actual = std::move(actual);
  c.match = c.expected == c.actual;
  c.erratum = !(c.published == c.expected);
  c.note = std::move(note);
  return c;
}

TableReport reproduce(const TableDef& def) {
  TableReport report;
  report.id = def.id;
  report.caption = def.caption;
  const ExampleSetup ex = def.setup();

  if (!def.sequential) {
    // Simultaneous play: everyone announces the truth.
    const Outcome out = evaluate_outcome(ex.mech, ex.true_types, ex.true_types);
    const Rational share =
        out.decision == 1 && def.sim[0].cost_share >= 0
            ? Rational(300) / Rational(3)
            : Rational(0);
    for (size_t i = 0; i < def.sim.size(); ++i) {
      const SimExpected& e = def.sim[i];
      TableRow row;
      row.key = e.player;
      row.cells.push_back(make_cell("tax", Rational(e.tax), Rational(e.tax),
                                    out.taxes[i]));
      if (e.cost_share >= 0)
        row.cells.push_back(make_cell("cost_share", Rational(e.cost_share),
                                      Rational(e.cost_share), share));
      const Rational actual_utility =
          def.utility_is_full ? out.full_utility[i] : out.valuation_utility[i];
      row.cells.push_back(make_cell("utility", Rational(e.utility_published),
                                    Rational(e.utility_corrected),
                                    actual_utility, e.note));
      report.rows.push_back(std::move(row));
    }
  } else {
    const std::vector<RunReport> runs =
        run_all_orderings(ex.mech, ex.strategies, ex.true_types);
    for (size_t r = 0; r < runs.size(); ++r) {
      TableRow row;
      row.key = runs[r].ordering.str(ex.labels);
      for (int i = 0; i < 3; ++i) {
        const Rational expected(def.seq[r].taxes[i]);
        row.cells.push_back(make_cell("t_" + ex.labels[i], expected, expected,
                                      runs[r].outcome.taxes[i]));
      }
      report.rows.push_back(std::move(row));
    }
  }

  report.all_match = true;
  for (const TableRow& row : report.rows)
    for (const TableCell& c : row.cells)
      if (!c.match) report.all_match = false;
  return report;
}

}  // namespace

std::vector<std::string> table_ids() {
  std::vector<std::string> out;
  for (const TableDef& d : table_defs()) out.push_back(d.id);
  return out;
}

TableReport reproduce_table(const std::string& id) {
  for (const TableDef& d : table_defs())
    if (id == d.id) return reproduce(d);
  throw std::invalid_argument("unknown table id '" + id +
                              "' (expected one of 1, 1a, 2, 2a, 3, 3a, 4, 4a)");
}

std::vector<TableReport> reproduce_all_tables() {
  std::vector<TableReport> out;
  for (const TableDef& d : table_defs()) out.push_back(reproduce(d));
  return out;
}

}  // namespace seqvcg
