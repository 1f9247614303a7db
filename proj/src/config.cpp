#include "seqvcg/config.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

namespace seqvcg {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;  // commas inside (...) do not split
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Rational parse_rational_or_fail(const std::string& text, int line) {
  auto r = Rational::parse(text);
  if (!r) fail(line, "not a rational number: '" + text + "'");
  return *r;
}

TypeValue parse_type_value_or_fail(const std::string& text, int line) {
  try {
    return parse_type_value(text);
  } catch (const std::exception& e) {
    fail(line, e.what());
  }
}

std::vector<TypeValue> parse_value_list(const std::string& text, int line) {
  std::vector<TypeValue> out;
  for (const std::string& item : split(text, ','))
    out.push_back(parse_type_value_or_fail(item, line));
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text, int line) {
  std::vector<Rational> out;
  for (const std::string& item : split(text, ','))
    out.push_back(parse_rational_or_fail(item, line));
  return out;
}

}  // namespace

TypeValue parse_type_value(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    std::vector<Rational> entries;
    for (const std::string& part :
         split(text.substr(1, text.size() - 2), ',')) {
      auto r = Rational::parse(part);
      if (!r)
        throw ConfigError("not a rational number: '" + part + "'");
      entries.push_back(*r);
    }
    return TypeValue::vec(std::move(entries));
  }
  auto r = Rational::parse(text);
  if (!r) throw ConfigError("not a rational number: '" + text + "'");
  return TypeValue::scalar(*r);
}

ScenarioConfig parse_scenario_config(std::istream& in) {
  ScenarioConfig cfg;
  bool kind_seen = false;

  std::string section;
  std::string line;
  int lineno = 0;

  auto find_player = [&](const std::string& label,
                         bool create) -> ScenarioConfig::Player* {
    for (auto& p : cfg.players)
      if (p.label == label) return &p;
    if (!create) return nullptr;
    cfg.players.push_back({});
    cfg.players.back().label = label;
    return &cfg.players.back();
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;

    if (t.front() == '[') {
      if (t.back() != ']') fail(lineno, "unterminated section header");
      section = trim(t.substr(1, t.size() - 2));
      if (section.rfind("player.", 0) == 0)
        find_player(section.substr(7), true);
      continue;
    }

    const auto eq = t.find('=');
    if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty() || value.empty()) fail(lineno, "empty key or value");

    if (section == "scenario") {
      if (key == "kind") {
        kind_seen = true;
        if (value == "public_project_1")
          cfg.kind = ScenarioConfig::Kind::PublicProject1;
        else if (value == "public_project_2")
          cfg.kind = ScenarioConfig::Kind::PublicProject2;
        else if (value == "choose_project")
          cfg.kind = ScenarioConfig::Kind::ChooseProject;
        else if (value == "explicit_table")
          cfg.kind = ScenarioConfig::Kind::ExplicitTable;
        else
          fail(lineno, "unknown scenario kind '" + value + "'");
      } else if (key == "cost") {
        cfg.cost = parse_rational_or_fail(value, lineno);
      } else if (key == "projects") {
        cfg.num_projects = std::stoi(value);
      } else if (key == "decisions") {
        for (const std::string& d : split(value, ','))
          cfg.decision_labels.push_back(d);
      } else {
        fail(lineno, "unknown [scenario] key '" + key + "'");
      }
    } else if (section.rfind("player.", 0) == 0) {
      ScenarioConfig::Player* p = find_player(section.substr(7), false);
      if (key == "true")
        p->true_type = parse_type_value_or_fail(value, lineno);
      else if (key == "strategy")
        p->strategy = value;
      else if (key == "bound")
        p->bound = parse_rational_or_fail(value, lineno);
      else if (key == "bounds")
        p->bounds = parse_rational_list(value, lineno);
      else if (key == "types")
        p->types = parse_value_list(value, lineno);
      else if (key == "grid")
        p->grid = parse_value_list(value, lineno);
      else
        fail(lineno, "unknown [player] key '" + key + "'");
    } else if (section.rfind("valuation.", 0) == 0) {
      ScenarioConfig::Player* p = find_player(section.substr(10), false);
      if (!p) fail(lineno, "valuation for unknown player '" +
                               section.substr(10) + "'");
      // key is the type value, value lists v(d, type) per decision
      const TypeValue type = parse_type_value_or_fail(key, lineno);
      auto it = std::find(p->types.begin(), p->types.end(), type);
      if (it == p->types.end())
        fail(lineno, "valuation row for type " + type.str() +
                         " not listed in the player's types");
      const size_t ti = static_cast<size_t>(it - p->types.begin());
      if (p->valuation_rows.size() < p->types.size())
        p->valuation_rows.resize(p->types.size());
      p->valuation_rows[ti] = parse_rational_list(value, lineno);
    } else if (section == "rule") {
      if (key == "table") {
        for (const std::string& d : split(value, ',')) {
          auto it = std::find(cfg.decision_labels.begin(),
                              cfg.decision_labels.end(), d);
          if (it == cfg.decision_labels.end())
            fail(lineno, "unknown decision label '" + d + "' in rule table");
          cfg.rule_table.push_back(
              static_cast<int>(it - cfg.decision_labels.begin()));
        }
      } else {
        fail(lineno, "unknown [rule] key '" + key + "'");
      }
    } else if (section == "run") {
      if (key == "ordering")
        cfg.ordering = value;
      else if (key == "cap")
        cfg.cap = std::stoull(value);
      else
        fail(lineno, "unknown [run] key '" + key + "'");
    } else {
      fail(lineno, "key outside a known section");
    }
  }

  if (!kind_seen) throw ConfigError("config has no [scenario] kind");
  if (cfg.players.empty()) throw ConfigError("config has no [player.*] blocks");
  return cfg;
}

ScenarioConfig load_scenario_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_scenario_config(in);
}

namespace {

std::vector<TypeValue> sorted_unique_scalars(std::vector<Rational> vals) {
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<TypeValue> out;
  for (Rational& v : vals) out.push_back(TypeValue::scalar(std::move(v)));
  return out;
}

// Default scalar grid: 0, every true value within [0, upper], the upper
// bound itself; with a step, the whole progression 0, step, ... <= upper
// merged in.
std::vector<TypeValue> scalar_grid(const Rational& upper,
                                   const std::vector<Rational>& truths,
                                   const std::optional<Rational>& step) {
  std::vector<Rational> pts = {Rational(0), upper};
  for (const Rational& t : truths)
    if (Rational(0) <= t && t <= upper) pts.push_back(t);
  if (step) {
    if (!(*step > Rational(0)))
      throw ConfigError("grid step must be positive");
    for (Rational v = *step; v < upper; v += *step) pts.push_back(v);
  }
  return sorted_unique_scalars(std::move(pts));
}

std::vector<Ordering> parse_orderings(const std::string& text,
                                      const std::vector<std::string>& labels) {
  if (trim(text) == "all")
    return Ordering::all(static_cast<int>(labels.size()));
  std::vector<Ordering> out;
  for (const std::string& one : split(text, ';')) {
    Ordering ord;
    std::vector<bool> seen(labels.size(), false);
    for (const std::string& lab : split(one, ',')) {
      auto it = std::find(labels.begin(), labels.end(), lab);
      if (it == labels.end())
        throw ConfigError("ordering mentions unknown player '" + lab + "'");
      const PlayerId id = static_cast<PlayerId>(it - labels.begin());
      if (seen[id])
        throw ConfigError("ordering repeats player '" + lab + "'");
      seen[id] = true;
      ord.seq.push_back(id);
    }
    if (ord.size() != static_cast<int>(labels.size()))
      throw ConfigError("ordering '" + one + "' does not list every player");
    out.push_back(std::move(ord));
  }
  return out;
}

SequentialStrategy make_strategy(const std::string& spec,
                                 const std::function<SequentialStrategy()>&
                                     tax_minimizing) {
  if (spec == "truth") return SequentialStrategy::truth();
  if (spec == "tax_minimizing") {
    if (!tax_minimizing)
      throw ConfigError(
          "strategy 'tax_minimizing' is only defined for the built-in "
          "scenario kinds; use 'truth' or 'constant:<value>'");
    return tax_minimizing();
  }
  if (spec.rfind("constant:", 0) == 0)
    return constant_strategy(parse_type_value(spec.substr(9)));
  throw ConfigError("unknown strategy '" + spec + "'");
}

}  // namespace

BuiltScenario build_scenario(const ScenarioConfig& cfg,
                             const std::optional<Rational>& grid_step,
                             const std::optional<std::string>& ordering_override) {
  const int n = static_cast<int>(cfg.players.size());
  BuiltScenario out;
  for (const auto& p : cfg.players) out.labels.push_back(p.label);
  for (const auto& p : cfg.players) out.true_types.values.push_back(p.true_type);

  std::vector<Rational> truths;
  const bool scalar_kind = cfg.kind != ScenarioConfig::Kind::ChooseProject;
  if (scalar_kind)
    for (const auto& p : cfg.players)
      if (p.true_type.is_scalar()) truths.push_back(p.true_type.as_scalar());

  std::function<SequentialStrategy()> default_strategy;
  Grids grids(n);

  switch (cfg.kind) {
    case ScenarioConfig::Kind::PublicProject1: {
      PublicProjectParams params;
      params.n = n;
      params.cost = cfg.cost;
      params.labels = out.labels;
      out.mech = Mechanism::clarke(build_public_project(params));
      default_strategy = [params] { return public_project_strategy(params); };
      for (int i = 0; i < n; ++i)
        grids[i] = cfg.players[i].grid.empty()
                       ? scalar_grid(cfg.cost, truths, grid_step)
                       : cfg.players[i].grid;
      break;
    }
    case ScenarioConfig::Kind::PublicProject2: {
      BoundedProjectParams params;
      params.n = n;
      params.cost = cfg.cost;
      params.labels = out.labels;
      for (const auto& p : cfg.players) {
        if (!p.bound)
          throw ConfigError("player '" + p.label +
                            "' needs a bound= for public_project_2");
        params.bounds.push_back(*p.bound);
      }
      out.mech = Mechanism::clarke(build_bounded_public_project(params));
      default_strategy = [params] { return bounded_project_strategy(params); };
      for (int i = 0; i < n; ++i)
        grids[i] = cfg.players[i].grid.empty()
                       ? scalar_grid(params.bounds[i], truths, grid_step)
                       : cfg.players[i].grid;
      break;
    }
    case ScenarioConfig::Kind::ChooseProject: {
      ChooseProjectParams params;
      params.n = n;
      params.labels = out.labels;
      for (const auto& p : cfg.players) {
        if (p.bounds.empty())
          throw ConfigError("player '" + p.label +
                            "' needs bounds= for choose_project");
        params.bounds.push_back(p.bounds);
      }
      params.m = cfg.num_projects > 0
                     ? cfg.num_projects
                     : static_cast<int>(params.bounds[0].size());
      out.mech = Mechanism::clarke(build_choose_project(params));
      default_strategy = [params] { return choose_project_strategy(params); };
      for (int i = 0; i < n; ++i) {
        if (!cfg.players[i].grid.empty()) {
          grids[i] = cfg.players[i].grid;
          continue;
        }
        // Default: origin, truth, the bound corner, and each single-axis
        // corner. Duplicates removed, order preserved.
        const auto& b = params.bounds[i];
        std::vector<TypeValue> g;
        auto add = [&g](TypeValue v) {
          if (std::find(g.begin(), g.end(), v) == g.end())
            g.push_back(std::move(v));
        };
        add(TypeValue::vec(std::vector<Rational>(b.size(), Rational(0))));
        add(cfg.players[i].true_type);
        add(TypeValue::vec(b));
        for (size_t k = 0; k < b.size(); ++k) {
          std::vector<Rational> corner(b.size(), Rational(0));
          corner[k] = b[k];
          add(TypeValue::vec(std::move(corner)));
        }
        grids[i] = std::move(g);
      }
      break;
    }
    case ScenarioConfig::Kind::ExplicitTable: {
      if (cfg.decision_labels.empty())
        throw ConfigError("explicit_table needs decisions= in [scenario]");
      DecisionProblem problem;
      problem.decision_labels = cfg.decision_labels;
      problem.player_labels = out.labels;
      const int m = static_cast<int>(cfg.decision_labels.size());
      // Valuations are looked up by (player, type index, decision).
      auto rows = std::make_shared<std::vector<std::vector<std::vector<Rational>>>>();
      auto types = std::make_shared<std::vector<std::vector<TypeValue>>>();
      for (const auto& p : cfg.players) {
        if (p.types.empty())
          throw ConfigError("player '" + p.label +
                            "' needs types= for explicit_table");
        if (p.valuation_rows.size() != p.types.size())
          throw ConfigError("player '" + p.label +
                            "' is missing valuation rows");
        for (const auto& row : p.valuation_rows)
          if (static_cast<int>(row.size()) != m)
            throw ConfigError("player '" + p.label +
                              "' has a valuation row not matching the "
                              "decision count");
        problem.type_spaces.push_back(FiniteSet{p.types});
        types->push_back(p.types);
        rows->push_back(p.valuation_rows);
      }
      problem.valuation = [rows, types](int d, PlayerId i,
                                        const TypeValue& t) -> Rational {
        const auto& ts = (*types)[i];
        auto it = std::find(ts.begin(), ts.end(), t);
        if (it == ts.end())
          throw std::invalid_argument("type " + t.str() +
                                      " has no valuation row");
        return (*rows)[i][static_cast<size_t>(it - ts.begin())][d];
      };
      if (!cfg.rule_table.empty()) {
        size_t expect = 1;
        for (const auto& p : cfg.players) expect *= p.types.size();
        if (cfg.rule_table.size() != expect)
          throw ConfigError("rule table has " +
                            std::to_string(cfg.rule_table.size()) +
                            " entries, expected " + std::to_string(expect));
        problem.rule = ExplicitTable{cfg.rule_table};
      } else {
        problem.rule = EfficientArgmax{};
      }
      out.mech = Mechanism::clarke(std::move(problem));
      for (int i = 0; i < n; ++i)
        grids[i] = cfg.players[i].grid.empty() ? cfg.players[i].types
                                               : cfg.players[i].grid;
      break;
    }
  }

  for (const auto& p : cfg.players)
    out.strategies.push_back(make_strategy(p.strategy, default_strategy));

  out.mech.problem.check_profile(out.true_types);
  for (int i = 0; i < n; ++i)
    for (const TypeValue& v : grids[i])
      if (!space_contains(out.mech.problem.type_spaces[i], v))
        throw ConfigError("grid point " + v.str() +
                          " outside the type space of player '" +
                          out.labels[i] + "'");
  out.grid = GridSpec{std::move(grids)};

  out.orderings = parse_orderings(
      ordering_override ? *ordering_override : cfg.ordering, out.labels);
  return out;
}

}  // namespace seqvcg
