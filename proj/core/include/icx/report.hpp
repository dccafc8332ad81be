#pragma once

// Structured results of checks and scans, with CSV / JSON / text emitters.
// Emission is deterministic: entries keep insertion order and reals are
// written with six significant digits.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace icx {

using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

struct Report {
  std::string name;
  /// Verdict: false when the check found counterexamples.
  bool holds = true;
  /// Provenance (limit, algorithm, reliable ranges).
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<std::pair<std::string, Cell>> stats;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  Report& add_meta(std::string key, Cell value);
  Report& add_stat(std::string key, Cell value);
  void add_row(std::vector<Cell> row);

  friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { csv, json, text };

/// "csv", "json" or "text"; ParseError otherwise.
Format parse_format(std::string_view name);

/// %.6g, with ".0" appended when the result would read as an integer.
std::string format_real(double value);
/// The value a real takes after a write/read cycle.
double round_real(double value);

std::string to_csv(const Report& report);
std::string to_json(const Report& report);
std::string to_text(const Report& report);
std::string render(const Report& report, Format format);
/// Several reports: concatenated for csv/text, a JSON array for json.
std::string render(const std::vector<Report>& reports, Format format);

/// Inverse of to_csv / to_json up to round_real. ParseError on malformed input.
Report parse_csv(std::string_view text);
Report parse_json(std::string_view text);

}  // namespace icx
