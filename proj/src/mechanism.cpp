#include "seqvcg/mechanism.hpp"

namespace seqvcg {

Mechanism Mechanism::clarke(DecisionProblem p) {
  Mechanism m;
  m.problem = std::move(p);
  m.pivot_kind = PivotKind::Clarke;
  return m;
}

Mechanism Mechanism::with_pivot(
    DecisionProblem p,
    std::function<Rational(PlayerId, const TypeProfile&)> pivot) {
  Mechanism m;
  m.problem = std::move(p);
  m.pivot_kind = PivotKind::Custom;
  m.custom_pivot = std::move(pivot);
  return m;
}

Rational others_welfare(const DecisionProblem& problem, int decision,
                        const TypeProfile& profile, PlayerId excluded) {
  Rational total;
  for (PlayerId j = 0; j < problem.num_players(); ++j)
    if (j != excluded) total += problem.value(decision, j, profile[j]);
  return total;
}

Rational Mechanism::pivot(PlayerId i, const TypeProfile& profile) const {
  if (pivot_kind == PivotKind::Custom) return custom_pivot(i, profile);
  // Clarke: -max_d sum_{j != i} v_j(d, p_j). Depends on p_{-i} only.
  Rational best = others_welfare(problem, 0, profile, i);
  for (int d = 1; d < problem.num_decisions(); ++d)
    best = max(best, others_welfare(problem, d, profile, i));
  return -best;
}

Rational vcg_transfer(const Mechanism& mech, const TypeProfile& announced,
                      PlayerId i) {
  const int decision = mech.problem.decide(announced);
  return mech.pivot(i, announced) +
         others_welfare(mech.problem, decision, announced, i);
}

std::vector<Rational> vcg_transfers(const Mechanism& mech,
                                    const TypeProfile& announced) {
  mech.problem.check_profile(announced);
  const int decision = mech.problem.decide(announced);
  std::vector<Rational> out(mech.problem.num_players());
  for (PlayerId i = 0; i < mech.problem.num_players(); ++i)
    out[i] = mech.pivot(i, announced) +
             others_welfare(mech.problem, decision, announced, i);
  return out;
}

Outcome evaluate_outcome(const Mechanism& mech, const TypeProfile& announced,
                         const TypeProfile& true_types) {
  mech.problem.check_profile(announced);
  mech.problem.check_profile(true_types);
  Outcome out;
  out.decision = mech.problem.decide(announced);
  out.transfers = vcg_transfers(mech, announced);
  const int n = mech.problem.num_players();
  out.taxes.resize(n);
  out.valuation_utility.resize(n);
  out.full_utility.resize(n);
  for (PlayerId i = 0; i < n; ++i) {
    out.taxes[i] = max(Rational(0), -out.transfers[i]);
    out.valuation_utility[i] =
        mech.problem.value(out.decision, i, true_types[i]);
    out.full_utility[i] = out.valuation_utility[i] + out.transfers[i];
  }
  return out;
}

Rational full_utility(const Mechanism& mech, const TypeProfile& announced,
                      PlayerId i, const TypeValue& true_type) {
  const int decision = mech.problem.decide(announced);
  return mech.problem.value(decision, i, true_type) +
         vcg_transfer(mech, announced, i);
}

const char* deviation_class_name(DeviationClass c) {
  switch (c) {
    case DeviationClass::SameDecisionEqualUtility:
      return "same-decision-equal-utility";
    case DeviationClass::DifferentDecisionStrictLoss:
      return "different-decision-strict-loss";
    case DeviationClass::DifferentDecisionEqualWelfare:
      return "different-decision-equal-welfare";
  }
  return "?";
}

DeviationClass classify_deviation(const Mechanism& mech,
                                  const TypeProfile& truthful, PlayerId i,
                                  const TypeValue& deviation) {
  const TypeProfile deviated = truthful.with(i, deviation);
  const int d_truth = mech.problem.decide(truthful);
  const int d_dev = mech.problem.decide(deviated);

  const Rational u_truth = full_utility(mech, truthful, i, truthful[i]);
  const Rational u_dev = full_utility(mech, deviated, i, truthful[i]);

  if (d_truth == d_dev) {
    if (u_truth != u_dev)
      throw std::logic_error(
          "same decision but unequal utilities; pivot not independent of "
          "player " +
          std::to_string(i + 1));
    return DeviationClass::SameDecisionEqualUtility;
  }
  // Welfares are evaluated at the truthful profile, the deviator's true
  // type included.
  const Rational w_truth = social_welfare(mech.problem, d_truth, truthful);
  const Rational w_dev = social_welfare(mech.problem, d_dev, truthful);
  if (w_truth == w_dev) return DeviationClass::DifferentDecisionEqualWelfare;
  if (!(u_dev < u_truth))
    throw std::logic_error(
        "decision flip with differing welfare did not strictly lower the "
        "deviator's utility; is the rule efficient?");
  return DeviationClass::DifferentDecisionStrictLoss;
}

bool bigger_condition_holds(const Rational& v_keep_true,
                            const Rational& v_keep_dev,
                            const Rational& v_alt_true,
                            const Rational& v_alt_dev) {
  return v_keep_dev + v_alt_true < v_keep_true + v_alt_dev;
}

WitnessConstruction construct_truthfulness_witness(
    const Rational& v_keep_true, const Rational& v_keep_dev,
    const Rational& v_alt_true, const Rational& v_alt_dev,
    TypeValue true_type, TypeValue deviation_type) {
  if (!bigger_condition_holds(v_keep_true, v_keep_dev, v_alt_true, v_alt_dev))
    throw std::invalid_argument(
        "strict truthfulness condition violated: no opponent utilities can "
        "make this deviation strictly losing");
  if (true_type == deviation_type)
    throw std::invalid_argument("true type and deviation must differ");

  WitnessConstruction w;
  w.v_keep_true = v_keep_true;
  w.v_keep_dev = v_keep_dev;
  w.v_alt_true = v_alt_true;
  w.v_alt_dev = v_alt_dev;
  w.gap = v_alt_true - v_keep_true;
  w.slack = v_keep_true + v_alt_dev - v_keep_dev - v_alt_true;
  // Interior choice: any epsilon in (0, slack] works, slack/2 keeps both
  // efficiency inequalities strict.
  w.epsilon = w.slack / Rational(2);
  w.opponent_v_keep = w.gap + w.epsilon;
  w.opponent_v_alt = Rational(0);
  w.true_type = true_type;
  w.deviation_type = deviation_type;

  DecisionProblem p;
  p.decision_labels = {"keep", "alt"};
  p.player_labels = {"deviator", "opponent"};
  const TypeValue opponent_type = TypeValue::scalar(0);
  p.type_spaces = {FiniteSet{{true_type, deviation_type}},
                   FiniteSet{{opponent_type}}};
  const Rational dv[2][2] = {{v_keep_true, v_alt_true},
                             {v_keep_dev, v_alt_dev}};
  const Rational ov[2] = {w.opponent_v_keep, w.opponent_v_alt};
  const TypeValue tt = true_type;
  p.valuation = [dv0 = dv[0][0], dv01 = dv[0][1], dv10 = dv[1][0],
                 dv11 = dv[1][1], ov0 = ov[0], ov1 = ov[1],
                 tt](int d, PlayerId i, const TypeValue& t) -> Rational {
    if (i == 1) return d == 0 ? ov0 : ov1;
    if (t == tt) return d == 0 ? dv0 : dv01;
    return d == 0 ? dv10 : dv11;
  };
  // f maps the truthful profile to "keep" and the deviated one to "alt".
  p.rule = CustomRule{[tt](const TypeProfile& profile) -> int {
    return profile[0] == tt ? 0 : 1;
  }};
  w.problem = p;

  Mechanism mech = Mechanism::clarke(std::move(p));
  TypeProfile truthful{{true_type, opponent_type}};
  TypeProfile deviated{{deviation_type, opponent_type}};
  w.utility_truth = full_utility(mech, truthful, 0, true_type);
  w.utility_deviation = full_utility(mech, deviated, 0, true_type);
  return w;
}

}  // namespace seqvcg
