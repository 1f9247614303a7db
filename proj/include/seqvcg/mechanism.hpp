#pragma once

#include "seqvcg/core.hpp"

namespace seqvcg {

/// A decision problem extended with a pivot-term family h_i and the
/// derived transfers t_i(p) = h_i(p_{-i}) + sum_{j != i} v_j(f(p), p_j).
/// The Clarke instance uses h_i = -max_d sum_{j != i} v_j(d, p_j), which
/// makes every transfer non-positive (a tax).
struct Mechanism {
  enum class PivotKind { Clarke, Custom };

  DecisionProblem problem;
  PivotKind pivot_kind = PivotKind::Clarke;
  /// Custom pivot; must depend only on the entries of players != i.
  std::function<Rational(PlayerId, const TypeProfile&)> custom_pivot;

  static Mechanism clarke(DecisionProblem p);
  static Mechanism with_pivot(
      DecisionProblem p,
      std::function<Rational(PlayerId, const TypeProfile&)> pivot);

  Rational pivot(PlayerId i, const TypeProfile& profile) const;
};

/// sum_{j != excluded} v_j(decision, profile_j)
Rational others_welfare(const DecisionProblem& problem, int decision,
                        const TypeProfile& profile, PlayerId excluded);

Rational vcg_transfer(const Mechanism& mech, const TypeProfile& announced,
                      PlayerId i);
std::vector<Rational> vcg_transfers(const Mechanism& mech,
                                    const TypeProfile& announced);

struct Outcome {
  int decision;
  std::vector<Rational> transfers;          // t_i, sign-carrying
  std::vector<Rational> taxes;              // max(0, -t_i)
  std::vector<Rational> valuation_utility;  // v_i(decision, true type)
  std::vector<Rational> full_utility;       // v_i + t_i
};

/// Transfers come from the announced profile only; valuations are
/// evaluated at the true types under the announced decision.
Outcome evaluate_outcome(const Mechanism& mech, const TypeProfile& announced,
                         const TypeProfile& true_types);

/// u_i of player i with true type `true_type` when `announced` is played.
Rational full_utility(const Mechanism& mech, const TypeProfile& announced,
                      PlayerId i, const TypeValue& true_type);

enum class DeviationClass {
  SameDecisionEqualUtility,
  DifferentDecisionStrictLoss,
  DifferentDecisionEqualWelfare,  // decisions differ, welfare ties
};

const char* deviation_class_name(DeviationClass c);

/// Classifies a unilateral deviation of player i from the truthful
/// profile, assuming the problem's rule is efficient. Internally
/// re-checks the implied utility relation and throws std::logic_error if
/// it fails to hold.
DeviationClass classify_deviation(const Mechanism& mech,
                                  const TypeProfile& truthful, PlayerId i,
                                  const TypeValue& deviation);

/// Strict condition under which an adversarial opponent utility exists
/// that makes the deviation strictly losing:
///   v(d, dev) + v(d', true) < v(d, true) + v(d', dev)
/// where d is the decision under truth and d' under the deviation.
bool bigger_condition_holds(const Rational& v_keep_true,
                            const Rational& v_keep_dev,
                            const Rational& v_alt_true,
                            const Rational& v_alt_dev);

/// The constructive two-player, two-decision instance certifying that a
/// deviation can be made strictly losing. Player 0 is the deviator,
/// player 1 the constructed opponent.
struct WitnessConstruction {
  Rational v_keep_true, v_keep_dev, v_alt_true, v_alt_dev;  // deviator's v_i
  Rational gap;      // v(d', true) - v(d, true)
  Rational slack;    // v(d,true)+v(d',dev) - v(d,dev) - v(d',true), > 0
  Rational epsilon;  // slack / 2
  Rational opponent_v_keep;  // gap + epsilon
  Rational opponent_v_alt;   // 0
  DecisionProblem problem;   // the two-profile instance
  TypeValue true_type, deviation_type;
  Rational utility_truth, utility_deviation;  // deviator, Clarke transfers
};

/// Throws std::invalid_argument when the strict condition fails (no such
/// construction exists in that case).
WitnessConstruction construct_truthfulness_witness(
    const Rational& v_keep_true, const Rational& v_keep_dev,
    const Rational& v_alt_true, const Rational& v_alt_dev,
    TypeValue true_type = TypeValue::scalar(0),
    TypeValue deviation_type = TypeValue::scalar(1));

}  // namespace seqvcg
