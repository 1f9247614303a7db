#pragma once

#include "seqvcg/sequential.hpp"

namespace seqvcg {

/// Finite per-player verification grid. Construction checks that the
/// grids are non-empty; require_contains lets callers assert the
/// distinguished points (0, cost, bounds, the true types under test) are
/// present, so claims cannot pass vacuously.
struct GridSpec {
  Grids points;

  explicit GridSpec(Grids g);
  GridSpec() = default;

  int num_players() const { return static_cast<int>(points.size()); }
  unsigned long long profile_count(
      unsigned long long cap = kDefaultSearchCap) const;
  void require_contains(PlayerId player, const TypeValue& value,
                        const std::string& what) const;
};

/// Serial is the reference implementation; Parallel shards the profile
/// enumeration across OpenMP threads. Both return the lexicographically
/// first witness, so results are identical.
enum class ExecMode { Serial, Parallel };

/// Exhaustive dominance of `strategy` for `player` under transfer-based
/// utilities: checks u_i(strategy, rest) >= u_i(deviation, rest) for
/// every grid profile and every grid deviation. Definitive on the grid.
DominanceVerdict exhaustive_dominance(
    const Mechanism& mech, const SequentialStrategy& strategy, PlayerId player,
    const Ordering& ordering, const GridSpec& grid,
    unsigned long long cap = kDefaultSearchCap,
    ExecMode mode = ExecMode::Parallel);

/// Same check with valuation-only payoffs (no transfers): dominance in
/// the raw sequential decision problem.
DominanceVerdict exhaustive_dominance_valuation_only(
    const DecisionProblem& problem, const SequentialStrategy& strategy,
    PlayerId player, const Ordering& ordering, const GridSpec& grid,
    unsigned long long cap = kDefaultSearchCap,
    ExecMode mode = ExecMode::Parallel);

struct TaxMinimalityWitness {
  TypeProfile profile;
  PlayerId other;            // the player whose transfer is not maximal
  TypeValue strategy_output;
  TypeValue better_deviation;  // decision-preserving, higher t_other
  Rational transfer_strategy;
  Rational transfer_deviation;
};

struct VerificationReport {
  std::string claim;
  unsigned long long domain_size = 0;
  bool holds = false;
  unsigned long long evaluations = 0;
  std::string detail;  // human-readable witness description
  std::optional<TaxMinimalityWitness> tax_witness;
  std::optional<StrategyProofnessViolation> strategy_proofness_witness;
  std::optional<DominanceWitness> dominance_witness;
};

/// Whenever the strategy deviates from truth at a grid profile, its
/// announcement must maximize every other player's transfer among the
/// decision-preserving grid announcements.
VerificationReport verify_tax_minimality(
    const Mechanism& mech, const SequentialStrategy& strategy, PlayerId player,
    const Ordering& ordering, const GridSpec& grid,
    unsigned long long cap = kDefaultSearchCap,
    ExecMode mode = ExecMode::Parallel);

/// Checks, by two independent enumerations, that strategy-proofness of
/// the raw rule and exhaustive dominance of truth-telling for every
/// player coincide on the grid. A one-sided failure is an artifact bug.
VerificationReport verify_truthfulness_equivalence(
    const DecisionProblem& problem, const GridSpec& grid,
    unsigned long long cap = kDefaultSearchCap);

/// The transfer-based decision problem of `mech` restricted to the grid:
/// decisions are the distinct (decision, transfer-vector) outcomes over
/// grid profiles, type spaces are the grid point sets, and valuations
/// are v_i + t_i. Lets the equivalence check above run on a mechanism.
DecisionProblem transfer_based_problem(const Mechanism& mech,
                                       const Grids& grids,
                                       unsigned long long cap =
                                           kDefaultSearchCap);

}  // namespace seqvcg
