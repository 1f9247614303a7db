#pragma once

#include <span>

#include "seqvcg/mechanism.hpp"

namespace seqvcg {

/// Play order: seq[p] is the player moving at position p (0-based).
struct Ordering {
  std::vector<PlayerId> seq;

  static Ordering identity(int n);
  /// All n! orderings in lexicographic order. Throws SearchCapExceeded
  /// when n exceeds the factorial cap.
  static std::vector<Ordering> all(int n, int factorial_cap = 8);

  int size() const { return static_cast<int>(seq.size()); }
  int position_of(PlayerId i) const;
  std::string str(const std::vector<std::string>& labels) const;  // "A B C"

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.seq == b.seq;
  }
};

/// A prefix-dependent strategy. `eval` receives the types announced by
/// the players at earlier positions (in play order), the player's own
/// true type, and where in the ordering the player sits.
struct SequentialStrategy {
  std::string name;
  bool truth_telling = false;
  std::function<TypeValue(std::span<const TypeValue> prefix,
                          const TypeValue& true_type, const Ordering& ordering,
                          int position)>
      eval;

  static SequentialStrategy truth();
};

struct RunReport {
  Ordering ordering;
  TypeProfile announced;  // keyed by PlayerId
  Outcome outcome;
  std::vector<bool> deviated;  // announced != true, keyed by PlayerId
};

/// Plays one sequential round: strategies are evaluated in play order,
/// each seeing only the previously *announced* types; the outcome is
/// computed from the full announced profile against the true types.
/// Throws std::invalid_argument if a strategy announces a value outside
/// its player's type space.
RunReport run_sequential(const Mechanism& mech, const Ordering& ordering,
                         const std::vector<SequentialStrategy>& strategies,
                         const TypeProfile& true_types);

std::vector<RunReport> run_all_orderings(
    const Mechanism& mech, const std::vector<SequentialStrategy>& strategies,
    const TypeProfile& true_types, int factorial_cap = 8);

struct DominanceWitness {
  TypeProfile profile;       // grid profile (true type of i, announced rest)
  TypeValue strategy_output;
  TypeValue deviation;       // announcement beating the strategy
  Rational utility_strategy;
  Rational utility_deviation;
};

struct DominanceVerdict {
  enum class Kind { Dominant, NotDominant, Inconclusive };
  enum class Certificate { DecisionPreservation, ExhaustiveUtility };

  Kind kind = Kind::Inconclusive;
  Certificate certificate = Certificate::DecisionPreservation;
  std::optional<DominanceWitness> witness;
  unsigned long long profiles_checked = 0;

  bool dominant() const { return kind == Kind::Dominant; }
};

/// Sufficient-condition classifier: if the strategy's announcement
/// preserves the truthful decision at every grid profile, it is dominant;
/// if some profile flips the decision with differing social welfare, it
/// is not (witness attached); otherwise inconclusive (a decision flip
/// with tied welfare is not covered either way).
DominanceVerdict classify_by_decision_preservation(
    const Mechanism& mech, const SequentialStrategy& strategy, PlayerId player,
    const Ordering& ordering, const Grids& grids,
    unsigned long long cap = kDefaultSearchCap);

struct TransferMaxResult {
  TypeValue best_announcement;  // smallest maximizer in grid order
  Rational max_transfer;
};

/// Maximizes player j's transfer t_j over player i's decision-preserving
/// announcements from `grid_i`. The truthful announcement is always
/// feasible.
TransferMaxResult decision_preserving_transfer_max(
    const Mechanism& mech, PlayerId i, PlayerId j, const TypeProfile& profile,
    const std::vector<TypeValue>& grid_i);

}  // namespace seqvcg
