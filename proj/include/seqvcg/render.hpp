#pragma once

#include "seqvcg/config.hpp"
#include "seqvcg/example_tables.hpp"

namespace seqvcg {

enum class OutputFormat { Text, Csv, Json };

OutputFormat parse_output_format(const std::string& name);  // throws ConfigError

/// One CSV/text row per (ordering, player). Columns: ordering, player,
/// announced, tax, v_utility, u_utility. Rationals render exactly, as an
/// integer or p/q, never through floating point.
std::string render_runs(const std::vector<RunReport>& runs,
                        const std::vector<std::string>& labels,
                        OutputFormat format);

std::string render_tables(const std::vector<TableReport>& tables,
                          OutputFormat format);

std::string render_verification(const VerificationReport& report,
                                const std::vector<std::string>& labels,
                                OutputFormat format);

std::string render_witness(const WitnessConstruction& w, OutputFormat format);

}  // namespace seqvcg
