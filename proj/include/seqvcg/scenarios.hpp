#pragma once

#include "seqvcg/sequential.hpp"

namespace seqvcg {

/// Public project with a yes/no decision: v_i(d, t) = d * (t - c/n) and
/// the project takes place exactly when the announced values sum to at
/// least the cost c. The >= threshold at the tie is part of the rule.
struct PublicProjectParams {
  int n = 0;
  Rational cost;
  std::vector<std::string> labels;  // defaults to "1".."n"
  /// Optional per-player spaces; each must contain 0 and c. Defaults to
  /// the interval [0, c].
  std::vector<TypeSpace> type_spaces;
};

/// Same project but with per-player bounded type intervals [0, r_i].
struct BoundedProjectParams {
  int n = 0;
  Rational cost;
  std::vector<Rational> bounds;  // r_i >= 0
  std::vector<std::string> labels;
};

/// Choice among m projects: each player announces a vector of per-project
/// appreciations from [0, r_ik]; the rule picks the project with the
/// largest aggregate appreciation, lowest index winning ties.
struct ChooseProjectParams {
  int n = 0;
  int m = 0;
  std::vector<std::vector<Rational>> bounds;  // bounds[i][k] = r_ik
  std::vector<std::string> labels;
};

DecisionProblem build_public_project(const PublicProjectParams& params);
DecisionProblem build_bounded_public_project(const BoundedProjectParams& params);
DecisionProblem build_choose_project(const ChooseProjectParams& params);

/// Dominant tax-minimizing strategy for the unbounded public project:
/// announce the truth while the running sum (announced prefix plus own
/// true value) stays below c, announce 0 when last and still short, and
/// announce c once the running sum reaches c.
SequentialStrategy public_project_strategy(PublicProjectParams params);

/// Bounded-interval counterpart: with S the running sum and F the sum of
/// the later players' bounds, announce the truth when S < c <= S + F,
/// announce 0 when even S + F < c, and announce r_i once S >= c.
SequentialStrategy bounded_project_strategy(BoundedProjectParams params);

/// Project-choice counterpart: announce the truth unless some project is
/// already certain to win (its running total beats every other project's
/// total plus all future bounds), in which case announce the vector that
/// puts the full own bound on the sure winner and 0 elsewhere. When one
/// project surely beats some but not all others, fall back to the truth,
/// which preserves the decision trivially.
SequentialStrategy choose_project_strategy(ChooseProjectParams params);

/// Test/demo strategy that ignores everything and announces a constant.
SequentialStrategy constant_strategy(TypeValue announcement);

}  // namespace seqvcg
