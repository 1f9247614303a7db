#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "seqvcg/rational.hpp"

namespace seqvcg {

/// 0-based player index. Display labels live in DecisionProblem.
using PlayerId = int;

/// A type value: a single rational for the scalar scenarios, a vector of
/// per-project appreciations for the project-choice scenario.
class TypeValue {
 public:
  TypeValue() = default;
  static TypeValue scalar(Rational v);
  static TypeValue vec(std::vector<Rational> vs);

  bool is_scalar() const { return scalar_; }
  const Rational& as_scalar() const;
  const std::vector<Rational>& entries() const { return entries_; }
  size_t dim() const { return entries_.size(); }

  std::string str() const;  // "60" or "(6,9)"

  friend bool operator==(const TypeValue& a, const TypeValue& b) {
    return a.scalar_ == b.scalar_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<Rational> entries_;
  bool scalar_ = true;
};

struct FiniteSet {
  std::vector<TypeValue> values;  // distinct
};
struct Interval {
  Rational lower;  // 0 in every scenario
  Rational upper;
};
struct Box {
  std::vector<Rational> upper;  // per-coordinate bounds, lower bounds all 0
};
using TypeSpace = std::variant<FiniteSet, Interval, Box>;

bool space_contains(const TypeSpace& space, const TypeValue& value);

struct TypeProfile {
  std::vector<TypeValue> values;  // indexed by PlayerId

  int size() const { return static_cast<int>(values.size()); }
  const TypeValue& operator[](PlayerId i) const { return values[i]; }
  TypeValue& operator[](PlayerId i) { return values[i]; }

  /// Copy with player i's entry replaced.
  TypeProfile with(PlayerId i, TypeValue v) const;

  friend bool operator==(const TypeProfile& a, const TypeProfile& b) {
    return a.values == b.values;
  }
};

/// Decision rule variants. EfficientArgmax picks the welfare maximizer
/// with the lowest-indexed decision winning ties. ExplicitTable maps
/// finite profiles (mixed-radix index, player 0 most significant) to
/// decisions. CustomRule covers closed-form rules such as the public
/// project threshold, whose tie behavior is part of the rule itself.
struct EfficientArgmax {};
struct ExplicitTable {
  std::vector<int> decisions;
};
struct CustomRule {
  std::function<int(const TypeProfile&)> fn;
};
using DecisionRule = std::variant<EfficientArgmax, ExplicitTable, CustomRule>;

using ValuationFn =
    std::function<Rational(int decision, PlayerId player, const TypeValue&)>;

struct DecisionProblem {
  std::vector<std::string> decision_labels;
  std::vector<std::string> player_labels;
  std::vector<TypeSpace> type_spaces;
  ValuationFn valuation;
  DecisionRule rule;

  int num_players() const { return static_cast<int>(type_spaces.size()); }
  int num_decisions() const { return static_cast<int>(decision_labels.size()); }

  Rational value(int decision, PlayerId player, const TypeValue& type) const;

  /// Applies the problem's decision rule f.
  int decide(const TypeProfile& profile) const;

  /// Throws std::invalid_argument if the profile does not match the
  /// player count or lies outside the type spaces.
  void check_profile(const TypeProfile& profile) const;

  int decision_index(std::string_view label) const;  // throws if unknown
};

Rational social_welfare(const DecisionProblem& problem, int decision,
                        const TypeProfile& profile);

/// Lowest-index argmax of social welfare, independent of the problem's
/// stored rule.
int efficient_decision(const DecisionProblem& problem,
                       const TypeProfile& profile);

// ---------------------------------------------------------------------------
// Finite grid enumeration.

using Grids = std::vector<std::vector<TypeValue>>;  // per-player value lists

inline constexpr unsigned long long kDefaultSearchCap = 10'000'000ULL;

struct SearchCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Product of per-player grid sizes; throws SearchCapExceeded if it
/// would overflow or exceed `cap`.
unsigned long long grid_profile_count(const Grids& grids,
                                      unsigned long long cap);

/// Profile at lexicographic position `index` (player 0 most significant).
TypeProfile grid_profile_at(const Grids& grids, unsigned long long index);

struct EfficiencyViolation {
  TypeProfile profile;
  int better_decision;
};

/// Checks that the problem's rule attains the max social welfare on every
/// grid profile; returns the lexicographically first violation, if any.
std::optional<EfficiencyViolation> find_efficiency_violation(
    const DecisionProblem& problem, const Grids& grids,
    unsigned long long cap = kDefaultSearchCap);

struct StrategyProofnessViolation {
  PlayerId player;
  TypeProfile profile;
  TypeValue deviation;
};

/// Brute-force strategy-proofness of the raw decision rule (valuation
/// payoffs, no transfers) on the grid.
std::optional<StrategyProofnessViolation> find_strategy_proofness_violation(
    const DecisionProblem& problem, const Grids& grids,
    unsigned long long cap = kDefaultSearchCap);

}  // namespace seqvcg
