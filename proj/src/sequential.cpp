#include "seqvcg/sequential.hpp"

#include <algorithm>
#include <numeric>

namespace seqvcg {

Ordering Ordering::identity(int n) {
  Ordering o;
  o.seq.resize(n);
  std::iota(o.seq.begin(), o.seq.end(), 0);
  return o;
}

std::vector<Ordering> Ordering::all(int n, int factorial_cap) {
  if (n > factorial_cap)
    throw SearchCapExceeded("player count " + std::to_string(n) +
                            " exceeds the factorial cap " +
                            std::to_string(factorial_cap));
  std::vector<Ordering> out;
  Ordering o = identity(n);
  do {
    out.push_back(o);
  } while (std::next_permutation(o.seq.begin(), o.seq.end()));
  return out;
}

int Ordering::position_of(PlayerId i) const {
  for (int p = 0; p < size(); ++p)
    if (seq[p] == i) return p;
  throw std::invalid_argument("player not in ordering");
}

std::string Ordering::str(const std::vector<std::string>& labels) const {
  std::string out;
  for (int p = 0; p < size(); ++p) {
    if (p) out += " ";
    out += seq[p] < static_cast<int>(labels.size()) ? labels[seq[p]]
                                                    : std::to_string(seq[p] + 1);
  }
  return out;
}

SequentialStrategy SequentialStrategy::truth() {
  SequentialStrategy s;
  s.name = "truth";
  s.truth_telling = true;
  s.eval = [](std::span<const TypeValue>, const TypeValue& true_type,
              const Ordering&, int) { return true_type; };
  return s;
}

RunReport run_sequential(const Mechanism& mech, const Ordering& ordering,
                         const std::vector<SequentialStrategy>& strategies,
                         const TypeProfile& true_types) {
  const int n = mech.problem.num_players();
  if (ordering.size() != n || static_cast<int>(strategies.size()) != n)
    throw std::invalid_argument("ordering/strategy size mismatch");
  mech.problem.check_profile(true_types);

  RunReport report;
  report.ordering = ordering;
  report.announced.values.resize(n);
  report.deviated.resize(n);

  std::vector<TypeValue> prefix;  // in play order
  prefix.reserve(n);
  for (int pos = 0; pos < n; ++pos) {
    const PlayerId who = ordering.seq[pos];
    TypeValue a =
        strategies[who].eval(prefix, true_types[who], ordering, pos);
    if (!space_contains(mech.problem.type_spaces[who], a))
      throw std::invalid_argument(
          "strategy '" + strategies[who].name + "' announced " + a.str() +
          " outside the type space of player " +
          mech.problem.player_labels[who]);
    report.announced[who] = a;
    report.deviated[who] = !(a == true_types[who]);
    prefix.push_back(std::move(a));
  }
  report.outcome = evaluate_outcome(mech, report.announced, true_types);
  return report;
}

std::vector<RunReport> run_all_orderings(
    const Mechanism& mech, const std::vector<SequentialStrategy>& strategies,
    const TypeProfile& true_types, int factorial_cap) {
  std::vector<RunReport> out;
  for (const Ordering& o :
       Ordering::all(mech.problem.num_players(), factorial_cap))
    out.push_back(run_sequential(mech, o, strategies, true_types));
  return out;
}

namespace {

// Assembles the prefix seen by `player` (at its position in `ordering`)
// out of a grid profile, then evaluates the strategy.
TypeValue strategy_output_on_profile(const SequentialStrategy& strategy,
                                     PlayerId player, const Ordering& ordering,
                                     const TypeProfile& profile) {
  const int pos = ordering.position_of(player);
  std::vector<TypeValue> prefix;
  prefix.reserve(pos);
  for (int p = 0; p < pos; ++p) prefix.push_back(profile[ordering.seq[p]]);
  return strategy.eval(prefix, profile[player], ordering, pos);
}

}  // namespace

DominanceVerdict classify_by_decision_preservation(
    const Mechanism& mech, const SequentialStrategy& strategy, PlayerId player,
    const Ordering& ordering, const Grids& grids, unsigned long long cap) {
  const unsigned long long total = grid_profile_count(grids, cap);
  DominanceVerdict verdict;
  verdict.profiles_checked = total;
  bool tied_flip_seen = false;

  for (unsigned long long idx = 0; idx < total; ++idx) {
    const TypeProfile profile = grid_profile_at(grids, idx);
    const TypeValue out =
        strategy_output_on_profile(strategy, player, ordering, profile);
    if (!space_contains(mech.problem.type_spaces[player], out))
      throw std::invalid_argument("strategy '" + strategy.name +
                                  "' announced " + out.str() +
                                  " outside the player's type space");
    const TypeProfile played = profile.with(player, out);
    const int d_strategy = mech.problem.decide(played);
    const int d_truth = mech.problem.decide(profile);
    if (d_strategy == d_truth) continue;

    const Rational w_strategy =
        social_welfare(mech.problem, d_strategy, profile);
    const Rational w_truth = social_welfare(mech.problem, d_truth, profile);
    if (w_strategy == w_truth) {
      tied_flip_seen = true;  // not covered by either direction
      continue;
    }
    verdict.kind = DominanceVerdict::Kind::NotDominant;
    verdict.certificate = DominanceVerdict::Certificate::DecisionPreservation;
    DominanceWitness w;
    w.profile = profile;
    w.strategy_output = out;
    w.deviation = profile[player];  // truthful announcement beats it
    w.utility_strategy = full_utility(mech, played, player, profile[player]);
    w.utility_deviation = full_utility(mech, profile, player, profile[player]);
    verdict.witness = std::move(w);
    verdict.profiles_checked = idx + 1;
    return verdict;
  }

  verdict.kind = tied_flip_seen ? DominanceVerdict::Kind::Inconclusive
                                : DominanceVerdict::Kind::Dominant;
  verdict.certificate = DominanceVerdict::Certificate::DecisionPreservation;
  return verdict;
}

TransferMaxResult decision_preserving_transfer_max(
    const Mechanism& mech, PlayerId i, PlayerId j, const TypeProfile& profile,
    const std::vector<TypeValue>& grid_i) {
  if (i == j) throw std::invalid_argument("players must differ");
  if (std::find(grid_i.begin(), grid_i.end(), profile[i]) == grid_i.end())
    throw std::invalid_argument(
        "grid must contain the truthful announcement of player i");

  const int d_truth = mech.problem.decide(profile);
  std::optional<TransferMaxResult> best;
  for (const TypeValue& candidate : grid_i) {
    const TypeProfile played = profile.with(i, candidate);
    if (mech.problem.decide(played) != d_truth) continue;
    Rational t = vcg_transfer(mech, played, j);
    if (!best || t > best->max_transfer)  // first (smallest) maximizer wins
      best = TransferMaxResult{candidate, std::move(t)};
  }
  return *best;  // non-empty: the truthful value is always feasible
}

}  // namespace seqvcg
