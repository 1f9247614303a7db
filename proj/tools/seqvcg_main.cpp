#include <CLI11.hpp>

#include <iostream>

#include "seqvcg/render.hpp"

using namespace seqvcg;

namespace {

// Exit-code contract: 0 all claims hold / all tables match, 1 refutation
// or mismatch, 2 usage or input error.
constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

struct CommonOpts {
  std::string config_path;
  std::string ordering;
  std::string format = "text";
  std::string grid_step;
  unsigned long long cap = 0;  // 0 = use the config's cap
};

BuiltScenario load(const CommonOpts& opts, unsigned long long& cap_out) {
  ScenarioConfig cfg = load_scenario_config(opts.config_path);
  std::optional<Rational> step;
  if (!opts.grid_step.empty()) {
    auto r = Rational::parse(opts.grid_step);
    if (!r) throw ConfigError("--grid-step is not a rational number");
    step = *r;
  }
  std::optional<std::string> ordering;
  if (!opts.ordering.empty()) ordering = opts.ordering;
  cap_out = opts.cap ? opts.cap : cfg.cap;
  return build_scenario(cfg, step, ordering);
}

int cmd_run(const CommonOpts& opts) {
  unsigned long long cap = 0;
  const BuiltScenario sc = load(opts, cap);
  std::vector<RunReport> runs;
  for (const Ordering& ord : sc.orderings)
    runs.push_back(run_sequential(sc.mech, ord, sc.strategies, sc.true_types));
  std::cout << render_runs(runs, sc.labels, parse_output_format(opts.format));
  return kOk;
}

int cmd_verify(const CommonOpts& opts, const std::string& claim) {
  unsigned long long cap = 0;
  const BuiltScenario sc = load(opts, cap);
  const OutputFormat fmt = parse_output_format(opts.format);
  const int n = sc.mech.problem.num_players();
  bool all_hold = true;

  auto emit = [&](const VerificationReport& r) {
    std::cout << render_verification(r, sc.labels, fmt);
    if (fmt == OutputFormat::Text) std::cout << "\n";
    if (!r.holds) all_hold = false;
  };

  if (claim == "dominance") {
    for (const Ordering& ord : sc.orderings) {
      for (PlayerId i = 0; i < n; ++i) {
        VerificationReport r;
        r.claim = "dominance of '" + sc.strategies[i].name + "' for player " +
                  sc.labels[i] + ", ordering " + ord.str(sc.labels);
        const DominanceVerdict quick = classify_by_decision_preservation(
            sc.mech, sc.strategies[i], i, ord, sc.grid.points, cap);
        const DominanceVerdict full = exhaustive_dominance(
            sc.mech, sc.strategies[i], i, ord, sc.grid, cap);
        r.domain_size = full.profiles_checked;
        r.holds = full.dominant();
        if (quick.dominant() != full.dominant() &&
            quick.kind != DominanceVerdict::Kind::Inconclusive)
          throw std::logic_error(
              "decision-preservation classifier disagrees with the "
              "exhaustive check");
        if (full.dominant()) {
          r.detail = quick.dominant()
                         ? "dominant (decision preservation), " +
                               std::to_string(full.profiles_checked) +
                               " profiles"
                         : "dominant (exhaustive utility comparison), " +
                               std::to_string(full.profiles_checked) +
                               " profiles";
        } else {
          r.dominance_witness = full.witness;
        }
        emit(r);
      }
    }
  } else if (claim == "tax_minimality") {
    for (const Ordering& ord : sc.orderings) {
      for (PlayerId i = 0; i < n; ++i) {
        VerificationReport r = verify_tax_minimality(
            sc.mech, sc.strategies[i], i, ord, sc.grid, cap);
        r.claim += " for player " + sc.labels[i] + ", ordering " +
                   ord.str(sc.labels);
        emit(r);
      }
    }
  } else if (claim == "strategy_proof") {
    VerificationReport r;
    r.claim = "strategy-proofness of the decision rule";
    r.domain_size = sc.grid.profile_count(cap);
    auto violation =
        find_strategy_proofness_violation(sc.mech.problem, sc.grid.points, cap);
    r.holds = !violation.has_value();
    r.strategy_proofness_witness = violation;
    emit(r);
  } else if (claim == "note41") {
    const DecisionProblem wrapped =
        transfer_based_problem(sc.mech, sc.grid.points, cap);
    VerificationReport r =
        verify_truthfulness_equivalence(wrapped, sc.grid, cap);
    r.claim = "transfer-based strategy-proofness matches truth dominance";
    emit(r);
  } else {
    throw ConfigError("unknown claim '" + claim +
                      "' (expected dominance, tax_minimality, "
                      "strategy_proof, or note41)");
  }
  return all_hold ? kOk : kRefuted;
}

int cmd_tables(const std::string& table_id, const std::string& format) {
  std::vector<TableReport> tables;
  if (table_id.empty()) {
    tables = reproduce_all_tables();
  } else {
    tables.push_back(reproduce_table(table_id));
  }
  std::cout << render_tables(tables, parse_output_format(format));
  for (const TableReport& t : tables)
    if (!t.all_match) return kRefuted;
  return kOk;
}

int cmd_witness(const std::string& kt, const std::string& kd,
                const std::string& at, const std::string& ad,
                const std::string& format) {
  auto parse = [](const std::string& s, const char* flag) {
    auto r = Rational::parse(s);
    if (!r)
      throw ConfigError(std::string(flag) + " is not a rational number");
    return *r;
  };
  const Rational v_keep_true = parse(kt, "--v-keep-true");
  const Rational v_keep_dev = parse(kd, "--v-keep-dev");
  const Rational v_alt_true = parse(at, "--v-alt-true");
  const Rational v_alt_dev = parse(ad, "--v-alt-dev");
  if (!bigger_condition_holds(v_keep_true, v_keep_dev, v_alt_true,
                              v_alt_dev)) {
    std::cout << "no such construction exists: the strict condition "
                 "v(keep,dev) + v(alt,true) < v(keep,true) + v(alt,dev) "
                 "fails, so the deviation can never be strictly losing\n";
    return kRefuted;
  }
  const WitnessConstruction w = construct_truthfulness_witness(
      v_keep_true, v_keep_dev, v_alt_true, v_alt_dev);
  std::cout << render_witness(w, parse_output_format(format));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential Clarke mechanism simulator and verifier"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string claim;
  std::string table_id;
  std::string tables_format = "text";
  std::string wkt, wkd, wat, wad, wformat = "text";

  auto add_common = [&](CLI::App* cmd, bool config_required) {
    auto* c = cmd->add_option("--config", opts.config_path,
                              "Scenario config file");
    if (config_required) c->required();
    cmd->add_option("--ordering", opts.ordering,
                    "Play order: 'all', 'A,B,C', or a ';'-separated list");
    cmd->add_option("--format", opts.format, "Output format: text|csv|json");
    cmd->add_option("--grid-step", opts.grid_step,
                    "Grid step for interval type spaces (rational)");
    cmd->add_option("--cap", opts.cap, "Profile-count cap for enumeration");
  };

  auto* run = app.add_subcommand("run", "Play the scenario and report taxes");
  add_common(run, true);

  auto* verify = app.add_subcommand("verify", "Brute-force a claim on a grid");
  add_common(verify, true);
  verify->add_option("--claim", claim,
                     "dominance|tax_minimality|strategy_proof|note41")
      ->required();

  auto* tables =
      app.add_subcommand("tables", "Reproduce the built-in reference tables");
  tables->add_option("--table", table_id, "Only this table id (1, 1a, ..., 4a)");
  tables->add_option("--format", tables_format, "Output format: text|csv|json");

  auto* witness = app.add_subcommand(
      "witness", "Construct an opponent making a deviation strictly losing");
  witness->add_option("--v-keep-true", wkt)->required();
  witness->add_option("--v-keep-dev", wkd)->required();
  witness->add_option("--v-alt-true", wat)->required();
  witness->add_option("--v-alt-dev", wad)->required();
  witness->add_option("--format", wformat, "Output format: text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (run->parsed()) return cmd_run(opts);
    if (verify->parsed()) return cmd_verify(opts, claim);
    if (tables->parsed()) return cmd_tables(table_id, tables_format);
    if (witness->parsed()) return cmd_witness(wkt, wkd, wat, wad, wformat);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
