// End-to-end acceptance suite. Each numbered check prints one PASS/FAIL
// line; the process exits nonzero if any check fails.

#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <vector>

#include "seqvcg/example_tables.hpp"

using namespace seqvcg;

namespace {

int g_failures = 0;
std::ostringstream g_detail;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("check failed: " + what);
}

void criterion(int number, const std::string& title,
               const std::function<void()>& body) {
  try {
    body();
    std::cout << "PASS " << number << ": " << title << "\n";
  } catch (const std::exception& e) {
    ++g_failures;
    std::cout << "FAIL " << number << ": " << title << " -- " << e.what()
              << "\n";
  }
}

TypeValue sc(long v) { return TypeValue::scalar(Rational(v)); }

std::vector<ExampleSetup> all_examples() {
  return {example_public_project_funded(), example_public_project_short(),
          example_bounded_project(), example_choose_project()};
}

std::vector<Rational> taxes(const TableRow& row) {
  std::vector<Rational> out;
  for (const TableCell& c : row.cells)
    if (c.column.rfind("t_", 0) == 0) out.push_back(c.actual);
  return out;
}

Rational cell(const TableRow& row, const std::string& column) {
  for (const TableCell& c : row.cells)
    if (c.column == column) return c.actual;
  throw std::runtime_error("missing column " + column);
}

// ---------------------------------------------------------------------------
// Randomized finite problems (players <= 3, decisions <= 3, types <= 3).

struct RandomProblem {
  DecisionProblem problem;
  Grids grids;
};

RandomProblem random_problem(std::mt19937& rng, bool efficient_rule) {
  std::uniform_int_distribution<int> n_dist(1, 3);
  std::uniform_int_distribution<int> value_dist(-3, 3);
  const int n = n_dist(rng);
  const int m = n_dist(rng);

  RandomProblem out;
  DecisionProblem& p = out.problem;
  for (int d = 0; d < m; ++d) p.decision_labels.push_back(std::to_string(d));
  // Valuation lookup: values[i][type_index][decision].
  auto values =
      std::make_shared<std::vector<std::vector<std::vector<Rational>>>>();
  unsigned long long profiles = 1;
  for (int i = 0; i < n; ++i) {
    p.player_labels.push_back(std::to_string(i + 1));
    const int t = n_dist(rng);
    std::vector<TypeValue> types;
    std::vector<std::vector<Rational>> rows;
    for (int k = 0; k < t; ++k) {
      types.push_back(sc(k));
      std::vector<Rational> row;
      for (int d = 0; d < m; ++d) row.push_back(Rational(value_dist(rng)));
      rows.push_back(std::move(row));
    }
    p.type_spaces.push_back(FiniteSet{types});
    out.grids.push_back(std::move(types));
    values->push_back(std::move(rows));
    profiles *= t;
  }
  p.valuation = [values](int d, PlayerId i, const TypeValue& t) -> Rational {
    return (*values)[i][static_cast<size_t>(
        t.as_scalar().raw().get_num().get_si())][d];
  };
  if (efficient_rule) {
    p.rule = EfficientArgmax{};
  } else {
    std::uniform_int_distribution<int> d_dist(0, m - 1);
    std::vector<int> table;
    for (unsigned long long k = 0; k < profiles; ++k)
      table.push_back(d_dist(rng));
    p.rule = ExplicitTable{std::move(table)};
  }
  return out;
}

// Three deliberately broken variants of the closed-form strategies, used
// by the tax-minimality mutation checks.

SequentialStrategy mutated_public_project(const PublicProjectParams& params) {
  SequentialStrategy s;
  s.name = "mutated-half-cost";
  const Rational cost = params.cost;
  s.eval = [cost](std::span<const TypeValue> prefix, const TypeValue& truth,
                  const Ordering& ordering, int position) -> TypeValue {
    Rational running = truth.as_scalar();
    for (const TypeValue& v : prefix) running += v.as_scalar();
    if (running >= cost) return TypeValue::scalar(cost / Rational(2));
    if (position == ordering.size() - 1) return TypeValue::scalar(0);
    return truth;
  };
  return s;
}

SequentialStrategy mutated_bounded_project(const BoundedProjectParams& params) {
  SequentialStrategy s;
  s.name = "mutated-bound-instead-of-zero";
  s.eval = [params](std::span<const TypeValue> prefix, const TypeValue& truth,
                    const Ordering& ordering, int position) -> TypeValue {
    Rational running = truth.as_scalar();
    for (const TypeValue& v : prefix) running += v.as_scalar();
    const PlayerId self = ordering.seq[position];
    if (running >= params.cost) return TypeValue::scalar(params.bounds[self]);
    Rational future;
    for (int p = position + 1; p < ordering.size(); ++p)
      future += params.bounds[ordering.seq[p]];
    if (running + future < params.cost)
      return TypeValue::scalar(params.bounds[self]);  // should be 0
    return truth;
  };
  return s;
}

SequentialStrategy mutated_choose_project(const ChooseProjectParams& params) {
  SequentialStrategy s;
  s.name = "mutated-half-bound";
  s.eval = [params](std::span<const TypeValue> prefix, const TypeValue& truth,
                    const Ordering& ordering, int position) -> TypeValue {
    const int m = params.m;
    const PlayerId self = ordering.seq[position];
    std::vector<Rational> running(truth.entries().begin(),
                                  truth.entries().end());
    for (const TypeValue& v : prefix)
      for (int k = 0; k < m; ++k) running[k] += v.entries()[k];
    std::vector<Rational> future(m);
    for (int p = position + 1; p < ordering.size(); ++p)
      for (int k = 0; k < m; ++k)
        future[k] += params.bounds[ordering.seq[p]][k];
    for (int winner = 0; winner < m; ++winner) {
      bool sure = true;
      for (int k = 0; k < m && sure; ++k)
        if (k != winner && !(running[winner] > running[k] + future[k]))
          sure = false;
      if (sure) {
        std::vector<Rational> out(m, Rational(0));
        out[winner] =
            params.bounds[self][winner] / Rational(2);  // should be the bound
        return TypeValue::vec(std::move(out));
      }
    }
    return truth;
  };
  return s;
}

// ---------------------------------------------------------------------------

void check_simultaneous_tables() {
  const TableReport t1 = reproduce_table("1");
  require(cell(t1.rows[0], "tax") == Rational(0) &&
              cell(t1.rows[1], "tax") == Rational(0) &&
              cell(t1.rows[2], "tax") == Rational(70),
          "table 1 taxes (0, 0, 70)");
  const TableReport t2 = reproduce_table("2");
  require(cell(t2.rows[0], "tax") == Rational(20) &&
              cell(t2.rows[1], "tax") == Rational(10) &&
              cell(t2.rows[2], "tax") == Rational(0),
          "table 2 taxes (20, 10, 0)");
  const TableReport t3 = reproduce_table("3");
  require(cell(t3.rows[0], "tax") == Rational(20) &&
              cell(t3.rows[1], "tax") == Rational(10) &&
              cell(t3.rows[2], "tax") == Rational(0),
          "table 3 taxes (20, 10, 0)");
  const TableReport t4 = reproduce_table("4");
  require(cell(t4.rows[0], "tax") == Rational(1) &&
              cell(t4.rows[1], "tax") == Rational(0) &&
              cell(t4.rows[2], "tax") == Rational(8),
          "table 4 taxes (1, 0, 8)");
  // Table 4 utilities: rows A and C match the published 8 and 32; the
  // published 0 for row B is inconsistent with the table's own transfer
  // formula (v_B + t_B = 1 + 0), so row B carries a documented erratum
  // and the exact value 1 is asserted instead.
  require(cell(t4.rows[0], "utility") == Rational(8) &&
              cell(t4.rows[2], "utility") == Rational(32),
          "table 4 utilities for rows A and C (8, 32)");
  const TableCell& b = [&]() -> const TableCell& {
    for (const TableCell& c : t4.rows[1].cells)
      if (c.column == "utility") return c;
    throw std::runtime_error("missing utility cell");
  }();
  require(b.erratum && b.published == Rational(0) && b.actual == Rational(1),
          "table 4 row B utility erratum (published 0, exact 1)");
  for (const TableReport& t : {t1, t2, t3, t4})
    require(t.all_match, "table " + t.id + " matches cell-exactly");
}

void check_sequential_tables() {
  const std::vector<std::vector<std::vector<long>>> expected = {
      // 1a
      {{0, 0, 70}, {0, 0, 0}, {0, 0, 70}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
      // 2a
      {{0, 0, 0}, {0, 10, 0}, {0, 0, 0}, {20, 0, 0}, {0, 10, 0}, {20, 0, 0}},
      // 3a
      {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {20, 0, 0}, {0, 0, 0}, {20, 0, 0}},
      // 4a
      {{0, 0, 8}, {0, 0, 0}, {0, 0, 8}, {1, 0, 1}, {0, 0, 0}, {1, 0, 1}},
  };
  const std::vector<std::string> ids = {"1a", "2a", "3a", "4a"};
  for (size_t t = 0; t < ids.size(); ++t) {
    const TableReport report = reproduce_table(ids[t]);
    require(report.rows.size() == 6, "six orderings in table " + ids[t]);
    int all_zero = 0;
    for (size_t r = 0; r < 6; ++r) {
      const std::vector<Rational> got = taxes(report.rows[r]);
      require(got.size() == 3, "three tax cells per row");
      bool zero = true;
      for (int i = 0; i < 3; ++i) {
        require(got[i] == Rational(expected[t][r][i]),
                "table " + ids[t] + " row " + report.rows[r].key);
        if (!(got[i] == Rational(0))) zero = false;
      }
      if (zero) ++all_zero;
    }
    require(report.all_match, "table " + ids[t] + " matches cell-exactly");
    // Qualitative claims: counts of all-zero orderings per table.
    const int expected_zero[] = {4, 2, 4, 2};
    require(all_zero == expected_zero[t],
            "table " + ids[t] + " all-zero ordering count");
    if (ids[t] == "3a") {
      require(taxes(report.rows[3])[0] == Rational(20) &&
                  taxes(report.rows[5])[0] == Rational(20),
              "t_A = 20 persists in rows B,C,A and C,B,A of table 3a");
    }
  }
}

void check_dominance_certification() {
  for (const ExampleSetup& ex : all_examples()) {
    for (PlayerId i = 0; i < 3; ++i) {
      require(ex.grid.points[i].size() >= 5, "at least 5 grid points");
      ex.grid.require_contains(i, ex.true_types[i], "true type");
    }
    for (const Ordering& o : Ordering::all(3)) {
      for (PlayerId i = 0; i < 3; ++i) {
        const DominanceVerdict quick = classify_by_decision_preservation(
            ex.mech, ex.strategies[i], i, o, ex.grid.points);
        require(quick.kind == DominanceVerdict::Kind::Dominant &&
                    quick.certificate ==
                        DominanceVerdict::Certificate::DecisionPreservation,
                "decision-preservation certificate");
        const DominanceVerdict full =
            exhaustive_dominance(ex.mech, ex.strategies[i], i, o, ex.grid);
        require(full.kind == DominanceVerdict::Kind::Dominant,
                "exhaustive confirmation");
      }
    }
  }
}

void check_vcg_truthfulness_suite() {
  std::mt19937 rng(20260823);
  for (int trial = 0; trial < 50; ++trial) {
    const RandomProblem rp = random_problem(rng, /*efficient_rule=*/true);
    const Mechanism mech = Mechanism::clarke(rp.problem);
    const GridSpec grid{rp.grids};
    const Ordering order = Ordering::identity(rp.problem.num_players());
    for (PlayerId i = 0; i < rp.problem.num_players(); ++i) {
      const DominanceVerdict v = exhaustive_dominance(
          mech, SequentialStrategy::truth(), i, order, grid);
      require(v.kind == DominanceVerdict::Kind::Dominant,
              "truth dominant on random problem " + std::to_string(trial));
    }
  }
}

void check_tax_minimality() {
  for (const ExampleSetup& ex : all_examples()) {
    for (const Ordering& o : Ordering::all(3)) {
      for (PlayerId i = 0; i < 3; ++i) {
        const VerificationReport r =
            verify_tax_minimality(ex.mech, ex.strategies[i], i, o, ex.grid);
        require(r.holds, "tax minimality of the closed-form strategies");
      }
    }
  }

  // Mutation suite: each broken strategy must yield a concrete witness.
  PublicProjectParams pp;
  pp.n = 3;
  pp.cost = 300;
  BoundedProjectParams bp;
  bp.n = 3;
  bp.cost = 300;
  bp.bounds = {Rational(100), Rational(80), Rational(150)};
  ChooseProjectParams cp;
  cp.n = 3;
  cp.m = 2;
  cp.bounds = {{Rational(9), Rational(10)},
               {Rational(12), Rational(2)},
               {Rational(34), Rational(40)}};

  struct Mutation {
    ExampleSetup ex;
    SequentialStrategy strategy;
    PlayerId player;
    Ordering ordering;
  };
  std::vector<Mutation> mutations;
  mutations.push_back({example_public_project_funded(),
                       mutated_public_project(pp), 2,
                       Ordering::identity(3)});
  mutations.push_back({example_bounded_project(), mutated_bounded_project(bp),
                       0, Ordering::identity(3)});
  Ordering b_c_a;
  b_c_a.seq = {1, 2, 0};
  mutations.push_back({example_choose_project(), mutated_choose_project(cp),
                       0, b_c_a});

  for (const Mutation& m : mutations) {
    const VerificationReport r = verify_tax_minimality(
        m.ex.mech, m.strategy, m.player, m.ordering, m.ex.grid);
    require(!r.holds, "mutation '" + m.strategy.name + "' is refuted");
    require(r.tax_witness.has_value(), "refutation carries a witness");
    const TaxMinimalityWitness& w = *r.tax_witness;
    // Witness replay through public operations.
    const TypeProfile played = w.profile.with(m.player, w.strategy_output);
    const TypeProfile better = w.profile.with(m.player, w.better_deviation);
    require(m.ex.mech.problem.decide(better) ==
                m.ex.mech.problem.decide(w.profile),
            "witness deviation preserves the decision");
    require(vcg_transfer(m.ex.mech, better, w.other) >
                vcg_transfer(m.ex.mech, played, w.other),
            "witness deviation strictly raises the other player's transfer");
  }
}

void check_witness_generator() {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long> v_dist(-20, 20);
  int satisfied = 0;
  int violated = 0;
  while (satisfied < 100 || violated < 20) {
    const Rational kt(v_dist(rng)), kd(v_dist(rng)), at(v_dist(rng)),
        ad(v_dist(rng));
    if (bigger_condition_holds(kt, kd, at, ad)) {
      if (satisfied >= 100) continue;
      ++satisfied;
      const WitnessConstruction w =
          construct_truthfulness_witness(kt, kd, at, ad);
      const Rational slack = kt + ad - kd - at;
      require(w.epsilon == slack / Rational(2), "epsilon = slack / 2");
      require(w.utility_truth - w.utility_deviation == w.epsilon,
              "utility loss is exactly epsilon");
      Grids grids = {{w.true_type, w.deviation_type},
                     {TypeValue::scalar(0)}};
      require(!find_efficiency_violation(w.problem, grids),
              "constructed rule is efficient");
    } else {
      if (violated >= 20) continue;
      ++violated;
      try {
        construct_truthfulness_witness(kt, kd, at, ad);
        require(false, "construction accepted a violated condition");
      } catch (const std::invalid_argument&) {
      }
    }
  }
}

void check_truthfulness_equivalence() {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    // Alternate efficient and arbitrary rules so both outcomes occur.
    const RandomProblem rp = random_problem(rng, trial % 2 == 0);
    const GridSpec grid{rp.grids};
    const VerificationReport r =
        verify_truthfulness_equivalence(rp.problem, grid);
    require(r.holds,
            "sides agree on random problem " + std::to_string(trial) + ": " +
                r.detail);
  }
}

void check_deviation_classification() {
  for (const ExampleSetup& ex : all_examples()) {
    const unsigned long long total = ex.grid.profile_count();
    for (unsigned long long idx = 0; idx < total; ++idx) {
      const TypeProfile profile = grid_profile_at(ex.grid.points, idx);
      for (PlayerId i = 0; i < 3; ++i) {
        for (const TypeValue& dev : ex.grid.points[i]) {
          const DeviationClass c =
              classify_deviation(ex.mech, profile, i, dev);
          const Rational u_truth =
              full_utility(ex.mech, profile, i, profile[i]);
          const Rational u_dev =
              full_utility(ex.mech, profile.with(i, dev), i, profile[i]);
          switch (c) {
            case DeviationClass::SameDecisionEqualUtility:
              require(u_truth == u_dev, "same decision, equal utility");
              break;
            case DeviationClass::DifferentDecisionStrictLoss:
              require(u_dev < u_truth, "welfare gap flip, strict loss");
              break;
            case DeviationClass::DifferentDecisionEqualWelfare:
              break;  // the lemma is silent here
          }
        }
      }
    }
  }
}

}  // namespace

int main() {
  criterion(1, "simultaneous Clarke taxes match the reference tables",
            check_simultaneous_tables);
  criterion(2, "sequential tables reproduced cell-exactly for all orderings",
            check_sequential_tables);
  criterion(3, "closed-form strategies certified dominant and confirmed "
               "exhaustively",
            check_dominance_certification);
  criterion(4, "truth-telling exhaustively dominant on 50 random Clarke "
               "mechanisms",
            check_vcg_truthfulness_suite);
  criterion(5, "tax minimality holds for the strategies, mutations refuted",
            check_tax_minimality);
  criterion(6, "witness construction: loss exactly epsilon on 100 random "
               "quadruples, refusal otherwise",
            check_witness_generator);
  criterion(7, "strategy-proofness and truth dominance agree on 50 random "
               "problems",
            check_truthfulness_equivalence);
  criterion(8, "deviation classification implies the exact utility "
               "relations on every example grid",
            check_deviation_classification);
  if (g_failures) {
    std::cout << g_failures << " acceptance criteria failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
