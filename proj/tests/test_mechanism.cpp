#include <doctest.h>

#include "seqvcg/scenarios.hpp"

using namespace seqvcg;

namespace {

TypeValue sc(long v) { return TypeValue::scalar(Rational(v)); }

Mechanism clarke_public_project(int n, long cost) {
  PublicProjectParams p;
  p.n = n;
  p.cost = cost;
  return Mechanism::clarke(build_public_project(p));
}

Mechanism clarke_choose_project() {
  ChooseProjectParams p;
  p.n = 3;
  p.m = 2;
  p.bounds = {{Rational(9), Rational(10)},
              {Rational(12), Rational(2)},
              {Rational(34), Rational(40)}};
  return Mechanism::clarke(build_choose_project(p));
}

TypeProfile profile3(long a, long b, long c) {
  return TypeProfile{{sc(a), sc(b), sc(c)}};
}

const TypeProfile kChooseTruth{{TypeValue::vec({Rational(6), Rational(9)}),
                                TypeValue::vec({Rational(12), Rational(1)}),
                                TypeValue::vec({Rational(30), Rational(40)})}};

std::vector<Rational> taxes_of(const Mechanism& m, const TypeProfile& t) {
  return evaluate_outcome(m, t, t).taxes;
}

}  // namespace

TEST_CASE("Clarke taxes on the worked public project profiles") {
  const Mechanism m = clarke_public_project(3, 300);
  CHECK(taxes_of(m, profile3(60, 70, 250)) ==
        std::vector<Rational>{0, 0, 70});
  CHECK(taxes_of(m, profile3(60, 70, 150)) ==
        std::vector<Rational>{20, 10, 0});
}

TEST_CASE("Clarke taxes on the project-choice profile") {
  const Mechanism m = clarke_choose_project();
  CHECK(taxes_of(m, kChooseTruth) == std::vector<Rational>{1, 0, 8});
  const Outcome out = evaluate_outcome(m, kChooseTruth, kChooseTruth);
  CHECK(out.decision == 1);
  CHECK(out.full_utility == std::vector<Rational>{8, 1, 32});
  CHECK(out.valuation_utility == std::vector<Rational>{9, 1, 40});
}

TEST_CASE("outcome separates announced transfers from true-type valuations") {
  const Mechanism m = clarke_public_project(3, 300);
  // One player overstating to 300 funds the project and, because the
  // pivot ignores own announcements, zeroes every tax.
  const Outcome out =
      evaluate_outcome(m, profile3(300, 70, 250), profile3(60, 70, 250));
  CHECK(out.decision == 1);
  CHECK(out.taxes == std::vector<Rational>{0, 0, 0});
  CHECK(out.valuation_utility == std::vector<Rational>{-40, -30, 150});
  CHECK(out.full_utility == std::vector<Rational>{-40, -30, 150});

  // All-zero valuations: everything zero.
  const Outcome zero =
      evaluate_outcome(m, profile3(0, 0, 0), profile3(0, 0, 0));
  CHECK(zero.transfers == std::vector<Rational>{0, 0, 0});
  CHECK(zero.full_utility == std::vector<Rational>{0, 0, 0});
}

TEST_CASE("outcome invariants: u = v + t, Clarke taxes = -t >= 0") {
  const Mechanism m = clarke_public_project(3, 300);
  const std::vector<TypeValue> pts = {sc(0), sc(60), sc(70), sc(150),
                                      sc(250), sc(300)};
  const Grids grids(3, pts);
  const unsigned long long total = grid_profile_count(grids, 1000);
  for (unsigned long long idx = 0; idx < total; ++idx) {
    const TypeProfile t = grid_profile_at(grids, idx);
    const Outcome out = evaluate_outcome(m, t, t);
    for (int i = 0; i < 3; ++i) {
      CHECK(out.full_utility[i] ==
            out.valuation_utility[i] + out.transfers[i]);
      CHECK(out.transfers[i] <= Rational(0));
      CHECK(out.taxes[i] == -out.transfers[i]);
    }
  }
}

TEST_CASE("pivot term ignores the player's own announcement") {
  const Mechanism m = clarke_public_project(3, 300);
  const TypeProfile base = profile3(60, 70, 150);
  const Rational h = m.pivot(0, base);
  for (long own : {0L, 60L, 200L, 300L})
    CHECK(m.pivot(0, base.with(0, sc(own))) == h);
  // Spot check the Clarke formula: -max_d sum_{j != 0} v_j(d).
  // d=0 gives 0, d=1 gives (70-100)+(150-100) = 20, so h_0 = -20.
  CHECK(h == Rational(-20));
}

TEST_CASE("deviation classification on the worked profiles") {
  const Mechanism m = clarke_public_project(3, 300);
  CHECK(classify_deviation(m, profile3(60, 70, 250), 2, sc(300)) ==
        DeviationClass::SameDecisionEqualUtility);
  CHECK(classify_deviation(m, profile3(60, 70, 250), 2, sc(250)) ==
        DeviationClass::SameDecisionEqualUtility);
  CHECK(classify_deviation(m, profile3(60, 70, 150), 2, sc(300)) ==
        DeviationClass::DifferentDecisionStrictLoss);
  // A flip at a welfare tie: true sum hits the threshold exactly.
  CHECK(classify_deviation(m, profile3(100, 100, 100), 2, sc(0)) ==
        DeviationClass::DifferentDecisionEqualWelfare);
}

TEST_CASE("strict-loss condition evaluation") {
  CHECK(bigger_condition_holds(5, 0, 0, 5));
  CHECK(!bigger_condition_holds(3, 3, 3, 3));
  // Public project with theta=150 vs 0, c=300, n=3: v(d,t) = d(t-100).
  CHECK(bigger_condition_holds(Rational(50), Rational(-100), Rational(0),
                               Rational(0)));
}

TEST_CASE("witness construction for the 5/5/0/0 quadruple") {
  const WitnessConstruction w = construct_truthfulness_witness(5, 0, 0, 5);
  CHECK(w.gap == Rational(-5));
  CHECK(w.slack == Rational(10));
  CHECK(w.epsilon == Rational(5));
  CHECK(w.opponent_v_keep == Rational(0));
  CHECK(w.opponent_v_alt == Rational(0));
  CHECK(w.utility_truth - w.utility_deviation == w.epsilon);
  // The constructed two-profile rule is efficient.
  Grids grids = {{w.true_type, w.deviation_type}, {TypeValue::scalar(0)}};
  CHECK(!find_efficiency_violation(w.problem, grids));
}

TEST_CASE("witness construction for the public-project-derived instance") {
  // theta=150, deviation 0, c=300, n=3: v(1,150)=50, v(1,0)=-100,
  // v(0,.)=0.
  const WitnessConstruction w = construct_truthfulness_witness(
      Rational(50), Rational(-100), Rational(0), Rational(0),
      TypeValue::scalar(150), TypeValue::scalar(0));
  CHECK(w.gap == Rational(-50));
  CHECK(w.slack == Rational(150));
  CHECK(w.epsilon == Rational(75));
  CHECK(w.opponent_v_keep == Rational(25));
  CHECK(w.utility_truth - w.utility_deviation == w.epsilon);
}

TEST_CASE("witness construction refuses a failing condition") {
  CHECK_THROWS_AS(construct_truthfulness_witness(3, 3, 3, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(construct_truthfulness_witness(0, 5, 5, 0),
                  std::invalid_argument);
}
