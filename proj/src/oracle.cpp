#include "seqvcg/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <memory>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace seqvcg {

namespace {

constexpr unsigned long long kNoViolation =
    std::numeric_limits<unsigned long long>::max();

// Evaluates `body(idx)` for idx in [0, total) and returns the smallest
// index for which it reports a violation (kNoViolation if none). The
// serial path is the reference; the parallel path shards the range and
// reduces with min, so both return the lexicographically first hit.
template <typename Body>
unsigned long long min_violation_index(unsigned long long total, ExecMode mode,
                                       const Body& body) {
  unsigned long long best = kNoViolation;
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
    std::atomic<bool> failed{false};
    std::string error;
#pragma omp parallel
    {
      unsigned long long local = kNoViolation;
#pragma omp for schedule(static) nowait
      for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
          unsigned long long hit = body(static_cast<unsigned long long>(idx));
          if (hit < local) local = hit;
        } catch (const std::exception& e) {
          bool expected = false;
          if (failed.compare_exchange_strong(expected, true)) {
#pragma omp critical(seqvcg_oracle_error)
            error = e.what();
          }
        }
      }
#pragma omp critical(seqvcg_oracle_reduce)
      if (local < best) best = local;
    }
    if (failed.load()) throw std::runtime_error(error);
    return best;
  }
#else
  (void)mode;
#endif
  for (unsigned long long idx = 0; idx < total; ++idx) {
    unsigned long long hit = body(idx);
    if (hit != kNoViolation) return hit;  // first hit is minimal: early exit
  }
  return kNoViolation;
}

using PayoffFn = std::function<Rational(const TypeProfile& announced,
                                        PlayerId player,
                                        const TypeValue& true_type)>;

DominanceVerdict exhaustive_dominance_impl(
    const DecisionProblem& problem, const PayoffFn& payoff,
    const SequentialStrategy& strategy, PlayerId player,
    const Ordering& ordering, const GridSpec& grid, unsigned long long cap,
    ExecMode mode) {
  if (grid.num_players() != problem.num_players())
    throw std::invalid_argument("grid/player count mismatch");
  const unsigned long long profiles = grid.profile_count(cap);
  const unsigned long long deviations = grid.points[player].size();
  if (profiles > cap / deviations)
    throw SearchCapExceeded("profile x deviation count exceeds cap");
  const int position = ordering.position_of(player);

  auto body = [&](unsigned long long idx) -> unsigned long long {
    const TypeProfile profile = grid_profile_at(grid.points, idx);
    std::vector<TypeValue> prefix;
    prefix.reserve(position);
    for (int p = 0; p < position; ++p)
      prefix.push_back(profile[ordering.seq[p]]);
    const TypeValue out =
        strategy.eval(prefix, profile[player], ordering, position);
    const Rational u_strategy =
        payoff(profile.with(player, out), player, profile[player]);
    for (unsigned long long didx = 0; didx < deviations; ++didx) {
      const Rational u_dev = payoff(
          profile.with(player, grid.points[player][didx]), player,
          profile[player]);
      if (u_dev > u_strategy) return idx * deviations + didx;
    }
    return kNoViolation;
  };

  const unsigned long long hit = min_violation_index(profiles, mode, body);

  DominanceVerdict verdict;
  verdict.certificate = DominanceVerdict::Certificate::ExhaustiveUtility;
  if (hit == kNoViolation) {
    verdict.kind = DominanceVerdict::Kind::Dominant;
    verdict.profiles_checked = profiles;
    return verdict;
  }
  verdict.kind = DominanceVerdict::Kind::NotDominant;
  verdict.profiles_checked = hit / deviations + 1;

  const TypeProfile profile =
      grid_profile_at(grid.points, hit / deviations);
  std::vector<TypeValue> prefix;
  for (int p = 0; p < position; ++p) prefix.push_back(profile[ordering.seq[p]]);
  DominanceWitness w;
  w.profile = profile;
  w.strategy_output = strategy.eval(prefix, profile[player], ordering, position);
  w.deviation = grid.points[player][hit % deviations];
  w.utility_strategy =
      payoff(profile.with(player, w.strategy_output), player, profile[player]);
  w.utility_deviation =
      payoff(profile.with(player, w.deviation), player, profile[player]);
  verdict.witness = std::move(w);
  return verdict;
}

}  // namespace

GridSpec::GridSpec(Grids g) : points(std::move(g)) {
  if (points.empty()) throw std::invalid_argument("grid has no players");
  for (const auto& p : points)
    if (p.empty()) throw std::invalid_argument("empty grid for some player");
}

unsigned long long GridSpec::profile_count(unsigned long long cap) const {
  return grid_profile_count(points, cap);
}

void GridSpec::require_contains(PlayerId player, const TypeValue& value,
                                const std::string& what) const {
  const auto& g = points.at(player);
  if (std::find(g.begin(), g.end(), value) == g.end())
    throw std::invalid_argument("grid of player " + std::to_string(player + 1) +
                                " is missing " + what + " " + value.str());
}

DominanceVerdict exhaustive_dominance(const Mechanism& mech,
                                      const SequentialStrategy& strategy,
                                      PlayerId player, const Ordering& ordering,
                                      const GridSpec& grid,
                                      unsigned long long cap, ExecMode mode) {
  PayoffFn payoff = [&mech](const TypeProfile& announced, PlayerId i,
                            const TypeValue& true_type) {
    return full_utility(mech, announced, i, true_type);
  };
  return exhaustive_dominance_impl(mech.problem, payoff, strategy, player,
                                   ordering, grid, cap, mode);
}

DominanceVerdict exhaustive_dominance_valuation_only(
    const DecisionProblem& problem, const SequentialStrategy& strategy,
    PlayerId player, const Ordering& ordering, const GridSpec& grid,
    unsigned long long cap, ExecMode mode) {
  PayoffFn payoff = [&problem](const TypeProfile& announced, PlayerId i,
                               const TypeValue& true_type) {
    return problem.value(problem.decide(announced), i, true_type);
  };
  return exhaustive_dominance_impl(problem, payoff, strategy, player, ordering,
                                   grid, cap, mode);
}

VerificationReport verify_tax_minimality(const Mechanism& mech,
                                         const SequentialStrategy& strategy,
                                         PlayerId player,
                                         const Ordering& ordering,
                                         const GridSpec& grid,
                                         unsigned long long cap,
                                         ExecMode mode) {
  const int n = mech.problem.num_players();
  if (grid.num_players() != n)
    throw std::invalid_argument("grid/player count mismatch");
  const unsigned long long profiles = grid.profile_count(cap);
  const unsigned long long deviations = grid.points[player].size();
  const unsigned long long per_profile = n * deviations;
  if (profiles > cap / per_profile + 1)
    throw SearchCapExceeded("tax minimality domain exceeds cap");
  const int position = ordering.position_of(player);

  auto strategy_output = [&](const TypeProfile& profile) {
    std::vector<TypeValue> prefix;
    prefix.reserve(position);
    for (int p = 0; p < position; ++p)
      prefix.push_back(profile[ordering.seq[p]]);
    return strategy.eval(prefix, profile[player], ordering, position);
  };

  auto body = [&](unsigned long long idx) -> unsigned long long {
    const TypeProfile profile = grid_profile_at(grid.points, idx);
    const TypeValue out = strategy_output(profile);
    if (out == profile[player]) return kNoViolation;  // truth: unconstrained
    const TypeProfile played = profile.with(player, out);
    const int d_truth = mech.problem.decide(profile);
    for (PlayerId j = 0; j < n; ++j) {
      if (j == player) continue;
      const Rational t_strategy = vcg_transfer(mech, played, j);
      for (unsigned long long didx = 0; didx < deviations; ++didx) {
        const TypeProfile alt =
            profile.with(player, grid.points[player][didx]);
        if (mech.problem.decide(alt) != d_truth) continue;
        if (vcg_transfer(mech, alt, j) > t_strategy)
          return (idx * n + j) * deviations + didx;
      }
    }
    return kNoViolation;
  };

  VerificationReport report;
  report.claim = "tax-minimality";
  report.domain_size = profiles;

  const unsigned long long hit = min_violation_index(profiles, mode, body);
  if (hit == kNoViolation) {
    report.holds = true;
    report.evaluations = profiles * per_profile;
    return report;
  }
  report.holds = false;
  report.evaluations = hit + 1;

  TaxMinimalityWitness w;
  w.profile = grid_profile_at(grid.points, hit / per_profile);
  w.other = static_cast<PlayerId>((hit / deviations) % n);
  w.strategy_output = strategy_output(w.profile);
  w.better_deviation = grid.points[player][hit % deviations];
  w.transfer_strategy =
      vcg_transfer(mech, w.profile.with(player, w.strategy_output), w.other);
  w.transfer_deviation =
      vcg_transfer(mech, w.profile.with(player, w.better_deviation), w.other);
  report.detail = "at profile " + [&] {
    std::string s;
    for (const TypeValue& v : w.profile.values) s += v.str() + " ";
    return s;
  }() + "announcing " + w.better_deviation.str() + " instead of " +
                  w.strategy_output.str() + " raises t_" +
                  mech.problem.player_labels[w.other] + " from " +
                  w.transfer_strategy.str() + " to " +
                  w.transfer_deviation.str();
  report.tax_witness = std::move(w);
  return report;
}

VerificationReport verify_truthfulness_equivalence(
    const DecisionProblem& problem, const GridSpec& grid,
    unsigned long long cap) {
  VerificationReport report;
  report.claim = "truthfulness-equivalence";
  report.domain_size = grid.profile_count(cap);

  const auto sp_violation =
      find_strategy_proofness_violation(problem, grid.points, cap);
  const bool strategy_proof = !sp_violation.has_value();

  bool truth_dominant = true;
  std::optional<DominanceWitness> dom_witness;
  const Ordering order = Ordering::identity(problem.num_players());
  const SequentialStrategy truth = SequentialStrategy::truth();
  for (PlayerId i = 0; i < problem.num_players() && truth_dominant; ++i) {
    DominanceVerdict v = exhaustive_dominance_valuation_only(
        problem, truth, i, order, grid, cap, ExecMode::Serial);
    if (!v.dominant()) {
      truth_dominant = false;
      dom_witness = v.witness;
    }
  }

  report.holds = strategy_proof == truth_dominant;
  report.evaluations = report.domain_size;
  report.detail = std::string("rule strategy-proof: ") +
                  (strategy_proof ? "yes" : "no") +
                  "; truth-telling dominant for all players: " +
                  (truth_dominant ? "yes" : "no") +
                  (report.holds ? " (sides agree)" : " (SIDES DISAGREE)");
  if (sp_violation) report.strategy_proofness_witness = sp_violation;
  if (dom_witness) report.dominance_witness = dom_witness;
  return report;
}

DecisionProblem transfer_based_problem(const Mechanism& mech,
                                       const Grids& grids,
                                       unsigned long long cap) {
  const int n = mech.problem.num_players();
  if (static_cast<int>(grids.size()) != n)
    throw std::invalid_argument("grid/player count mismatch");
  const unsigned long long total = grid_profile_count(grids, cap);

  struct WrappedDecision {
    int decision;
    std::vector<Rational> transfers;
    bool operator==(const WrappedDecision& o) const {
      return decision == o.decision && transfers == o.transfers;
    }
  };
  auto outcomes = std::make_shared<std::vector<WrappedDecision>>();
  std::vector<int> table(total);
  for (unsigned long long idx = 0; idx < total; ++idx) {
    const TypeProfile profile = grid_profile_at(grids, idx);
    WrappedDecision wd{mech.problem.decide(profile),
                       vcg_transfers(mech, profile)};
    auto it = std::find(outcomes->begin(), outcomes->end(), wd);
    if (it == outcomes->end()) {
      outcomes->push_back(std::move(wd));
      table[idx] = static_cast<int>(outcomes->size()) - 1;
    } else {
      table[idx] = static_cast<int>(it - outcomes->begin());
    }
  }

  DecisionProblem wrapped;
  wrapped.player_labels = mech.problem.player_labels;
  for (size_t k = 0; k < outcomes->size(); ++k) {
    std::string label =
        mech.problem.decision_labels[(*outcomes)[k].decision] + "|t=(";
    for (int i = 0; i < n; ++i) {
      if (i) label += ",";
      label += (*outcomes)[k].transfers[i].str();
    }
    wrapped.decision_labels.push_back(label + ")");
  }
  for (int i = 0; i < n; ++i)
    wrapped.type_spaces.push_back(FiniteSet{grids[i]});
  wrapped.valuation = [outcomes, base = mech.problem](
                          int d, PlayerId i,
                          const TypeValue& t) -> Rational {
    const WrappedDecision& wd = (*outcomes)[d];
    return base.value(wd.decision, i, t) + wd.transfers[i];
  };
  wrapped.rule = ExplicitTable{std::move(table)};
  return wrapped;
}

}  // namespace seqvcg
