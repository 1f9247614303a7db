#include "seqvcg/render.hpp"

#include <json.hpp>

#include <sstream>

namespace seqvcg {

using json = nlohmann::ordered_json;

namespace {

// CSV fields are plain rationals, labels, or parenthesized vectors; none
// of those need quoting, except vector announcements whose commas would
// split the field.
std::string csv_field(const std::string& s) {
  if (s.find(',') == std::string::npos) return s;
  return "\"" + s + "\"";
}

std::string join_row(const std::vector<std::string>& cells, char sep) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += sep == ',' ? csv_field(cells[i]) : cells[i];
  }
  return out;
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> widths;
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c) {
      if (widths.size() <= c) widths.resize(c + 1, 0);
      widths[c] = std::max(widths[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      std::string cell = row[c];
      cell.resize(widths[c], ' ');
      if (c) line += "  ";
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

json rational_json(const Rational& r) { return r.str(); }

json run_json(const RunReport& run, const std::vector<std::string>& labels) {
  json players = json::array();
  for (size_t i = 0; i < labels.size(); ++i) {
    players.push_back({{"player", labels[i]},
                       {"announced", run.announced[static_cast<PlayerId>(i)].str()},
                       {"tax", rational_json(run.outcome.taxes[i])},
                       {"v_utility", rational_json(run.outcome.valuation_utility[i])},
                       {"u_utility", rational_json(run.outcome.full_utility[i])}});
  }
  return {{"ordering", run.ordering.str(labels)},
          {"decision", run.outcome.decision},
          {"players", players}};
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("unknown output format '" + name +
                    "' (expected text, csv, or json)");
}

std::string render_runs(const std::vector<RunReport>& runs,
                        const std::vector<std::string>& labels,
                        OutputFormat format) {
  if (format == OutputFormat::Json) {
    json doc = json::array();
    for (const RunReport& run : runs) doc.push_back(run_json(run, labels));
    return doc.dump(2) + "\n";
  }

  const std::vector<std::string> header = {"ordering", "player",   "announced",
                                           "tax",      "v_utility", "u_utility"};
  std::vector<std::vector<std::string>> rows = {header};
  for (const RunReport& run : runs) {
    for (size_t i = 0; i < labels.size(); ++i) {
      rows.push_back({run.ordering.str(labels), labels[i],
                      run.announced[static_cast<PlayerId>(i)].str(),
                      run.outcome.taxes[i].str(),
                      run.outcome.valuation_utility[i].str(),
                      run.outcome.full_utility[i].str()});
    }
  }
  if (format == OutputFormat::Csv) {
    std::string out;
    for (const auto& row : rows) out += join_row(row, ',') + "\n";
    return out;
  }
  std::string out = aligned(rows);
  for (const RunReport& run : runs) {
    out += "decision(" + run.ordering.str(labels) +
           ") = " + std::to_string(run.outcome.decision) + "\n";
  }
  return out;
}

std::string render_tables(const std::vector<TableReport>& tables,
                          OutputFormat format) {
  if (format == OutputFormat::Json) {
    json doc = json::array();
    for (const TableReport& t : tables) {
      json rows = json::array();
      for (const TableRow& row : t.rows) {
        json cells = json::array();
        for (const TableCell& c : row.cells) {
          json cell = {{"column", c.column},
                       {"published", rational_json(c.published)},
                       {"expected", rational_json(c.expected)},
                       {"actual", rational_json(c.actual)},
                       {"match", c.match}};
          if (c.erratum) {
            cell["erratum"] = true;
            cell["note"] = c.note;
          }
          cells.push_back(std::move(cell));
        }
        rows.push_back({{"key", row.key}, {"cells", cells}});
      }
      doc.push_back({{"table", t.id},
                     {"caption", t.caption},
                     {"all_match", t.all_match},
                     {"rows", rows}});
    }
    return doc.dump(2) + "\n";
  }

  std::string out;
  for (const TableReport& t : tables) {
    std::vector<std::string> footnotes;
    if (format == OutputFormat::Csv) {
      out += "# table " + t.id + ": " + t.caption + "\n";
      std::vector<std::string> header = {"key"};
      for (const TableCell& c : t.rows.front().cells) {
        header.push_back(c.column);
        header.push_back(c.column + "_ok");
      }
      out += join_row(header, ',') + "\n";
      for (const TableRow& row : t.rows) {
        std::vector<std::string> cells = {row.key};
        for (const TableCell& c : row.cells) {
          cells.push_back(c.actual.str());
          cells.push_back(c.match ? "match" : "MISMATCH");
        }
        out += join_row(cells, ',') + "\n";
      }
      out += "\n";
      continue;
    }
    out += "Table " + t.id + ": " + t.caption + "\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {""};
    for (const TableCell& c : t.rows.front().cells) header.push_back(c.column);
    rows.push_back(header);
    for (const TableRow& row : t.rows) {
      std::vector<std::string> cells = {row.key};
      for (const TableCell& c : row.cells) {
        std::string cell = c.actual.str();
        cell += c.match ? " ok" : " MISMATCH(expected " + c.expected.str() + ")";
        if (c.erratum) {
          cell += " [*]";
          footnotes.push_back("[*] " + row.key + "/" + c.column +
                              ": published value " + c.published.str() + "; " +
                              c.note);
        }
        cells.push_back(std::move(cell));
      }
      rows.push_back(std::move(cells));
    }
    out += aligned(rows);
    for (const std::string& f : footnotes) out += f + "\n";
    out += t.all_match ? "all cells match\n\n" : "MISMATCHES PRESENT\n\n";
  }
  return out;
}

std::string render_verification(const VerificationReport& report,
                                const std::vector<std::string>& labels,
                                OutputFormat format) {
  auto profile_str = [&](const TypeProfile& p) {
    std::string out = "(";
    for (int i = 0; i < p.size(); ++i) {
      if (i) out += ", ";
      out += labels[i] + "=" + p[i].str();
    }
    return out + ")";
  };

  if (format == OutputFormat::Json) {
    json doc = {{"claim", report.claim},
                {"holds", report.holds},
                {"domain_size", report.domain_size},
                {"evaluations", report.evaluations},
                {"detail", report.detail}};
    if (report.dominance_witness) {
      const DominanceWitness& w = *report.dominance_witness;
      doc["witness"] = {{"profile", profile_str(w.profile)},
                        {"strategy", w.strategy_output.str()},
                        {"deviation", w.deviation.str()},
                        {"utility_strategy", rational_json(w.utility_strategy)},
                        {"utility_deviation", rational_json(w.utility_deviation)}};
    }
    if (report.tax_witness) {
      const TaxMinimalityWitness& w = *report.tax_witness;
      doc["witness"] = {{"profile", profile_str(w.profile)},
                        {"other_player", labels[w.other]},
                        {"strategy", w.strategy_output.str()},
                        {"better_deviation", w.better_deviation.str()},
                        {"transfer_strategy", rational_json(w.transfer_strategy)},
                        {"transfer_deviation", rational_json(w.transfer_deviation)}};
    }
    if (report.strategy_proofness_witness) {
      const StrategyProofnessViolation& w = *report.strategy_proofness_witness;
      doc["witness"] = {{"player", labels[w.player]},
                        {"profile", profile_str(w.profile)},
                        {"deviation", w.deviation.str()}};
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "claim: " << report.claim << "\n";
  out << "result: " << (report.holds ? "holds" : "REFUTED") << "\n";
  out << "domain: " << report.domain_size << " profiles, "
      << report.evaluations << " evaluations\n";
  if (!report.detail.empty()) out << report.detail << "\n";
  if (report.dominance_witness) {
    const DominanceWitness& w = *report.dominance_witness;
    out << "witness profile " << profile_str(w.profile) << ": strategy "
        << w.strategy_output.str() << " yields " << w.utility_strategy.str()
        << ", deviation " << w.deviation.str() << " yields "
        << w.utility_deviation.str() << "\n";
  }
  if (report.tax_witness) {
    const TaxMinimalityWitness& w = *report.tax_witness;
    out << "witness profile " << profile_str(w.profile) << ": strategy "
        << w.strategy_output.str() << " gives player " << labels[w.other]
        << " transfer " << w.transfer_strategy.str()
        << ", decision-preserving deviation " << w.better_deviation.str()
        << " gives " << w.transfer_deviation.str() << "\n";
  }
  if (report.strategy_proofness_witness) {
    const StrategyProofnessViolation& w = *report.strategy_proofness_witness;
    out << "witness: player " << labels[w.player] << " at "
        << profile_str(w.profile) << " gains by announcing "
        << w.deviation.str() << "\n";
  }
  return out.str();
}

std::string render_witness(const WitnessConstruction& w, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json doc = {{"v_keep_true", rational_json(w.v_keep_true)},
                {"v_keep_dev", rational_json(w.v_keep_dev)},
                {"v_alt_true", rational_json(w.v_alt_true)},
                {"v_alt_dev", rational_json(w.v_alt_dev)},
                {"gap", rational_json(w.gap)},
                {"slack", rational_json(w.slack)},
                {"epsilon", rational_json(w.epsilon)},
                {"opponent_v_keep", rational_json(w.opponent_v_keep)},
                {"opponent_v_alt", rational_json(w.opponent_v_alt)},
                {"utility_truth", rational_json(w.utility_truth)},
                {"utility_deviation", rational_json(w.utility_deviation)}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "deviator valuations: v(keep,true)=" << w.v_keep_true.str()
      << " v(keep,dev)=" << w.v_keep_dev.str()
      << " v(alt,true)=" << w.v_alt_true.str()
      << " v(alt,dev)=" << w.v_alt_dev.str() << "\n";
  out << "slack = " << w.slack.str() << ", epsilon = " << w.epsilon.str()
      << "\n";
  out << "constructed opponent: v(keep)=" << w.opponent_v_keep.str()
      << " v(alt)=" << w.opponent_v_alt.str() << "\n";
  out << "deviator utility: truth " << w.utility_truth.str() << ", deviation "
      << w.utility_deviation.str() << " (loss "
      << (w.utility_truth - w.utility_deviation).str() << ")\n";
  return out.str();
}

}  // namespace seqvcg
