#include "seqvcg/scenarios.hpp"

namespace seqvcg {

namespace {

std::vector<std::string> default_labels(int n,
                                        const std::vector<std::string>& given) {
  if (!given.empty()) {
    if (static_cast<int>(given.size()) != n)
      throw std::invalid_argument("label count does not match player count");
    return given;
  }
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

Rational prefix_sum(std::span<const TypeValue> prefix,
                    const TypeValue& true_type) {
  Rational s = true_type.as_scalar();
  for (const TypeValue& v : prefix) s += v.as_scalar();
  return s;
}

}  // namespace

DecisionProblem build_public_project(const PublicProjectParams& params) {
  if (params.n < 1) throw std::invalid_argument("need at least one player");
  if (!(params.cost > Rational(0)))
    throw std::invalid_argument("project cost must be positive");

  DecisionProblem p;
  p.decision_labels = {"0", "1"};
  p.player_labels = default_labels(params.n, params.labels);
  if (params.type_spaces.empty()) {
    p.type_spaces.assign(params.n, Interval{Rational(0), params.cost});
  } else {
    if (static_cast<int>(params.type_spaces.size()) != params.n)
      throw std::invalid_argument("type space count mismatch");
    p.type_spaces = params.type_spaces;
  }
  for (const TypeSpace& s : p.type_spaces) {
    if (!space_contains(s, TypeValue::scalar(0)) ||
        !space_contains(s, TypeValue::scalar(params.cost)))
      throw std::invalid_argument(
          "every type space must contain 0 and the project cost");
  }

  const Rational share = params.cost / Rational(params.n);
  p.valuation = [share](int d, PlayerId, const TypeValue& t) -> Rational {
    return d == 0 ? Rational(0) : t.as_scalar() - share;
  };
  const Rational cost = params.cost;
  p.rule = CustomRule{[cost](const TypeProfile& profile) -> int {
    Rational sum;
    for (const TypeValue& v : profile.values) sum += v.as_scalar();
    return sum >= cost ? 1 : 0;
  }};
  return p;
}

DecisionProblem build_bounded_public_project(
    const BoundedProjectParams& params) {
  if (params.n < 1) throw std::invalid_argument("need at least one player");
  if (static_cast<int>(params.bounds.size()) != params.n)
    throw std::invalid_argument("bound count does not match player count");
  for (const Rational& r : params.bounds)
    if (r < Rational(0)) throw std::invalid_argument("bounds must be >= 0");

  PublicProjectParams base;
  base.n = params.n;
  base.cost = params.cost;
  base.labels = params.labels;
  DecisionProblem p = build_public_project(base);
  for (int i = 0; i < params.n; ++i)
    p.type_spaces[i] = Interval{Rational(0), params.bounds[i]};
  return p;
}

DecisionProblem build_choose_project(const ChooseProjectParams& params) {
  if (params.n < 1) throw std::invalid_argument("need at least one player");
  if (params.m < 2) throw std::invalid_argument("need at least two projects");
  if (static_cast<int>(params.bounds.size()) != params.n)
    throw std::invalid_argument("bound rows do not match player count");

  DecisionProblem p;
  for (int k = 1; k <= params.m; ++k)
    p.decision_labels.push_back(std::to_string(k));
  p.player_labels = default_labels(params.n, params.labels);
  for (int i = 0; i < params.n; ++i) {
    if (static_cast<int>(params.bounds[i].size()) != params.m)
      throw std::invalid_argument("bound row length does not match m");
    for (const Rational& r : params.bounds[i])
      if (r < Rational(0)) throw std::invalid_argument("bounds must be >= 0");
    p.type_spaces.push_back(Box{params.bounds[i]});
  }
  p.valuation = [](int d, PlayerId, const TypeValue& t) -> Rational {
    return t.entries()[d];
  };
  p.rule = EfficientArgmax{};
  return p;
}

SequentialStrategy public_project_strategy(PublicProjectParams params) {
  SequentialStrategy s;
  s.name = "tax-minimizing";
  const Rational cost = params.cost;
  s.eval = [cost](std::span<const TypeValue> prefix, const TypeValue& truth,
                  const Ordering& ordering, int position) -> TypeValue {
    const Rational running = prefix_sum(prefix, truth);
    if (running >= cost) return TypeValue::scalar(cost);
    if (position == ordering.size() - 1) return TypeValue::scalar(0);
    return truth;
  };
  return s;
}

SequentialStrategy bounded_project_strategy(BoundedProjectParams params) {
  SequentialStrategy s;
  s.name = "tax-minimizing";
  s.eval = [params](std::span<const TypeValue> prefix, const TypeValue& truth,
                    const Ordering& ordering, int position) -> TypeValue {
    const Rational running = prefix_sum(prefix, truth);
    const PlayerId self = ordering.seq[position];
    if (running >= params.cost) return TypeValue::scalar(params.bounds[self]);
    Rational future;
    for (int p = position + 1; p < ordering.size(); ++p)
      future += params.bounds[ordering.seq[p]];
    if (running + future < params.cost) return TypeValue::scalar(0);
    return truth;
  };
  return s;
}

SequentialStrategy choose_project_strategy(ChooseProjectParams params) {
  SequentialStrategy s;
  s.name = "tax-minimizing";
  s.eval = [params](std::span<const TypeValue> prefix, const TypeValue& truth,
                    const Ordering& ordering, int position) -> TypeValue {
    const int m = params.m;
    const PlayerId self = ordering.seq[position];

    std::vector<Rational> running(truth.entries().begin(),
                                  truth.entries().end());
    for (const TypeValue& v : prefix)
      for (int k = 0; k < m; ++k) running[k] += v.entries()[k];

    std::vector<Rational> future(m);
    for (int p = position + 1; p < ordering.size(); ++p)
      for (int k = 0; k < m; ++k)
        future[k] += params.bounds[ordering.seq[p]][k];

    // A project is a sure winner when its running total already beats
    // every other project's best reachable total.
    for (int winner = 0; winner < m; ++winner) {
      bool sure = true;
      for (int k = 0; k < m && sure; ++k)
        if (k != winner && !(running[winner] > running[k] + future[k]))
          sure = false;
      if (sure) {
        std::vector<Rational> out(m, Rational(0));
        out[winner] = params.bounds[self][winner];
        return TypeValue::vec(std::move(out));
      }
    }
    // No sure winner (including the partially-decided gap): truth keeps
    // the decision unchanged.
    return truth;
  };
  return s;
}

SequentialStrategy constant_strategy(TypeValue announcement) {
  SequentialStrategy s;
  s.name = "constant-" + announcement.str();
  s.eval = [a = std::move(announcement)](std::span<const TypeValue>,
                                         const TypeValue&, const Ordering&,
                                         int) { return a; };
  return s;
}

}  // namespace seqvcg
