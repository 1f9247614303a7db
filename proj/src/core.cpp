#include "seqvcg/core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace seqvcg {

TypeValue TypeValue::scalar(Rational v) {
  TypeValue t;
  t.entries_ = {std::move(v)};
  t.scalar_ = true;
  return t;
}

TypeValue TypeValue::vec(std::vector<Rational> vs) {
  TypeValue t;
  t.entries_ = std::move(vs);
  t.scalar_ = false;
  return t;
}

const Rational& TypeValue::as_scalar() const {
  if (!scalar_ || entries_.size() != 1)
    throw std::logic_error("type value is not a scalar");
  return entries_[0];
}

std::string TypeValue::str() const {
  if (scalar_) return entries_.empty() ? std::string("?") : entries_[0].str();
  std::string out = "(";
  for (size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ",";
    out += entries_[k].str();
  }
  return out + ")";
}

bool space_contains(const TypeSpace& space, const TypeValue& value) {
  return std::visit(
      [&](const auto& s) -> bool {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, FiniteSet>) {
          return std::find(s.values.begin(), s.values.end(), value) !=
                 s.values.end();
        } else if constexpr (std::is_same_v<S, Interval>) {
          if (!value.is_scalar()) return false;
          const Rational& v = value.as_scalar();
          return s.lower <= v && v <= s.upper;
        } else {
          if (value.is_scalar() || value.dim() != s.upper.size()) return false;
          for (size_t k = 0; k < s.upper.size(); ++k) {
            const Rational& v = value.entries()[k];
            if (v < Rational(0) || v > s.upper[k]) return false;
          }
          return true;
        }
      },
      space);
}

TypeProfile TypeProfile::with(PlayerId i, TypeValue v) const {
  TypeProfile p = *this;
  p.values[i] = std::move(v);
  return p;
}

Rational DecisionProblem::value(int decision, PlayerId player,
                                const TypeValue& type) const {
  if (decision < 0 || decision >= num_decisions())
    throw std::invalid_argument("unknown decision index " +
                                std::to_string(decision));
  if (player < 0 || player >= num_players())
    throw std::invalid_argument("unknown player index " +
                                std::to_string(player));
  return valuation(decision, player, type);
}

void DecisionProblem::check_profile(const TypeProfile& profile) const {
  if (profile.size() != num_players())
    throw std::invalid_argument("profile has " +
                                std::to_string(profile.size()) +
                                " entries, expected " +
                                std::to_string(num_players()));
  for (PlayerId i = 0; i < num_players(); ++i) {
    if (!space_contains(type_spaces[i], profile[i]))
      throw std::invalid_argument("type " + profile[i].str() +
                                  " outside the type space of player " +
                                  (i < static_cast<int>(player_labels.size())
                                       ? player_labels[i]
                                       : std::to_string(i + 1)));
  }
}

int DecisionProblem::decision_index(std::string_view label) const {
  for (int d = 0; d < num_decisions(); ++d)
    if (decision_labels[d] == label) return d;
  throw std::invalid_argument("unknown decision label '" + std::string(label) +
                              "'");
}

namespace {

// Mixed-radix index of a FiniteSet profile, player 0 most significant.
size_t explicit_table_index(const DecisionProblem& problem,
                            const TypeProfile& profile) {
  size_t index = 0;
  for (PlayerId i = 0; i < problem.num_players(); ++i) {
    const auto* fs = std::get_if<FiniteSet>(&problem.type_spaces[i]);
    if (!fs)
      throw std::invalid_argument(
          "explicit decision tables require finite type spaces");
    auto it = std::find(fs->values.begin(), fs->values.end(), profile[i]);
    if (it == fs->values.end())
      throw std::invalid_argument("type " + profile[i].str() +
                                  " not in the finite space of player " +
                                  std::to_string(i + 1));
    index = index * fs->values.size() +
            static_cast<size_t>(it - fs->values.begin());
  }
  return index;
}

}  // namespace

int DecisionProblem::decide(const TypeProfile& profile) const {
  return std::visit(
      [&](const auto& r) -> int {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, EfficientArgmax>) {
          return efficient_decision(*this, profile);
        } else if constexpr (std::is_same_v<R, ExplicitTable>) {
          size_t idx = explicit_table_index(*this, profile);
          if (idx >= r.decisions.size())
            throw std::invalid_argument("decision table too small");
          return r.decisions[idx];
        } else {
          return r.fn(profile);
        }
      },
      rule);
}

Rational social_welfare(const DecisionProblem& problem, int decision,
                        const TypeProfile& profile) {
  if (profile.size() != problem.num_players())
    throw std::invalid_argument("profile size mismatch");
  Rational total;
  for (PlayerId i = 0; i < problem.num_players(); ++i)
    total += problem.value(decision, i, profile[i]);
  return total;
}

int efficient_decision(const DecisionProblem& problem,
                       const TypeProfile& profile) {
  if (problem.num_decisions() == 0)
    throw std::invalid_argument("empty decision set");
  int best = 0;
  Rational best_welfare = social_welfare(problem, 0, profile);
  for (int d = 1; d < problem.num_decisions(); ++d) {
    Rational w = social_welfare(problem, d, profile);
    if (w > best_welfare) {  // strict: lowest index wins ties
      best = d;
      best_welfare = w;
    }
  }
  return best;
}

unsigned long long grid_profile_count(const Grids& grids,
                                      unsigned long long cap) {
  unsigned long long count = 1;
  for (const auto& g : grids) {
    if (g.empty()) throw std::invalid_argument("empty grid for some player");
    if (count > cap / g.size() + 1) throw SearchCapExceeded("grid too large");
    count *= g.size();
    if (count > cap)
      throw SearchCapExceeded("grid profile count " + std::to_string(count) +
                              " exceeds cap " + std::to_string(cap));
  }
  return count;
}

TypeProfile grid_profile_at(const Grids& grids, unsigned long long index) {
  TypeProfile p;
  p.values.resize(grids.size());
  for (int i = static_cast<int>(grids.size()) - 1; i >= 0; --i) {
    const auto& g = grids[i];
    p.values[i] = g[index % g.size()];
    index /= g.size();
  }
  return p;
}

std::optional<EfficiencyViolation> find_efficiency_violation(
    const DecisionProblem& problem, const Grids& grids,
    unsigned long long cap) {
  if (static_cast<int>(grids.size()) != problem.num_players())
    throw std::invalid_argument("grid/player count mismatch");
  const unsigned long long total = grid_profile_count(grids, cap);
  for (unsigned long long idx = 0; idx < total; ++idx) {
    TypeProfile profile = grid_profile_at(grids, idx);
    const int chosen = problem.decide(profile);
    const Rational chosen_welfare = social_welfare(problem, chosen, profile);
    for (int d = 0; d < problem.num_decisions(); ++d) {
      if (social_welfare(problem, d, profile) > chosen_welfare)
        return EfficiencyViolation{std::move(profile), d};
    }
  }
  return std::nullopt;
}

std::optional<StrategyProofnessViolation> find_strategy_proofness_violation(
    const DecisionProblem& problem, const Grids& grids,
    unsigned long long cap) {
  if (static_cast<int>(grids.size()) != problem.num_players())
    throw std::invalid_argument("grid/player count mismatch");
  const unsigned long long total = grid_profile_count(grids, cap);
  for (unsigned long long idx = 0; idx < total; ++idx) {
    const TypeProfile profile = grid_profile_at(grids, idx);
    for (PlayerId i = 0; i < problem.num_players(); ++i) {
      const Rational truthful =
          problem.value(problem.decide(profile), i, profile[i]);
      for (const TypeValue& dev : grids[i]) {
        const TypeProfile deviated = profile.with(i, dev);
        if (problem.value(problem.decide(deviated), i, profile[i]) > truthful)
          return StrategyProofnessViolation{i, profile, dev};
      }
    }
  }
  return std::nullopt;
}

}  // namespace seqvcg
