#pragma once

#include <borwein/classify.hpp>
#include <borwein/series.hpp>

#include <iosfwd>
#include <string>

namespace borwein {

enum class OutputFormat { json, csv, markdown, tsv };

OutputFormat parse_format(const std::string& name);

/// Line-oriented `n<TAB>coefficient` serialization (decimal coefficients).
void write_tsv(std::ostream& os, const IntegerSeries& s);
IntegerSeries read_tsv(std::istream& is);

/// JSON array of decimal strings (coefficients routinely exceed 64 bits).
std::string to_json_coeffs(const IntegerSeries& s);

/// Coefficient rows in the requested format.
void write_series(std::ostream& os, const IntegerSeries& s, OutputFormat format);

std::string to_json(const SignTable& table);

/// One summary table (columns m | P | N | Z | note) for a fixed t, matching
/// the layout of the reference tables; rows cover 1 <= m <= 24/(t-1).
std::string markdown_table(long t, const std::vector<SignTable>& rows);

/// Markdown row for a single classification.
std::string markdown_row(const SignTable& table);

std::string format_residue_set(const std::set<long>& s);

}  // namespace borwein
