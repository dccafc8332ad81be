#include "icx/report.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "icx/errors.hpp"
#include "json.hpp"

namespace icx {
namespace {

using ordered_json = nlohmann::ordered_json;

bool is_integer_text(std::string_view s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; });
}

// Reads an unquoted CSV field back into the narrowest cell type that prints as it.
Cell parse_bare(const std::string& s) {
  if (s.empty()) return std::monostate{};
  if (s == "true") return true;
  if (s == "false") return false;
  if (is_integer_text(s)) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno == 0 && *end == '\0') return static_cast<std::int64_t>(v);
    return s;
  }
  char* end = nullptr;
  const double d = std::strtod(s.c_str(), &end);
  if (end != s.c_str() && *end == '\0') return d;
  return s;
}

bool needs_quotes(const std::string& s) {
  if (s.empty()) return true;
  if (s.front() == ' ' || s.back() == ' ') return true;
  if (s.find_first_of(",\"\r\n") != std::string::npos) return true;
  return !std::holds_alternative<std::string>(parse_bare(s));
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_field(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(const std::string& s) const { return needs_quotes(s) ? quote(s) : s; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

std::string text_field(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "-"; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(bool b) const { return b ? "yes" : "no"; }
  };
  return std::visit(Visitor{}, cell);
}

ordered_json json_cell(const Cell& cell) {
  struct Visitor {
    ordered_json operator()(std::monostate) const { return nullptr; }
    ordered_json operator()(std::int64_t v) const { return v; }
    ordered_json operator()(double v) const { return round_real(v); }
    ordered_json operator()(const std::string& s) const { return s; }
    ordered_json operator()(bool b) const { return b; }
  };
  return std::visit(Visitor{}, cell);
}

Cell cell_from_json(const ordered_json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw ParseError("integer cell out of range");
    }
    return static_cast<std::int64_t>(v);
  }
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw ParseError("report cells must be scalars");
}

ordered_json json_object(const Report& report) {
  ordered_json j;
  j["report"] = report.name;
  j["holds"] = report.holds;
  j["meta"] = ordered_json::object();
  for (const auto& [key, value] : report.meta) j["meta"][key] = json_cell(value);
  j["stats"] = ordered_json::object();
  for (const auto& [key, value] : report.stats) j["stats"][key] = json_cell(value);
  j["columns"] = report.columns;
  j["rows"] = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r = ordered_json::array();
    for (const auto& cell : row) r.push_back(json_cell(cell));
    j["rows"].push_back(std::move(r));
  }
  return j;
}

// One CSV record starting at `pos`; advances past its line terminator.
std::vector<std::pair<std::string, bool>> read_record(std::string_view text, std::size_t& pos) {
  std::vector<std::pair<std::string, bool>> fields;
  std::string field;
  bool quoted = false;
  while (true) {
    if (pos < text.size() && text[pos] == '"' && field.empty() && !quoted) {
      quoted = true;
      ++pos;
      while (true) {
        if (pos >= text.size()) throw ParseError("unterminated quoted field");
        if (text[pos] == '"') {
          if (pos + 1 < text.size() && text[pos + 1] == '"') {
            field += '"';
            pos += 2;
            continue;
          }
          ++pos;
          break;
        }
        field += text[pos++];
      }
      if (pos < text.size() && text[pos] != ',' && text[pos] != '\n' && text[pos] != '\r') {
        throw ParseError("stray characters after quoted field");
      }
      continue;
    }
    if (pos >= text.size() || text[pos] == '\n' || text[pos] == '\r') {
      fields.emplace_back(std::move(field), quoted);
      if (pos < text.size() && text[pos] == '\r') ++pos;
      if (pos < text.size() && text[pos] == '\n') ++pos;
      return fields;
    }
    if (text[pos] == ',') {
      fields.emplace_back(std::move(field), quoted);
      field.clear();
      quoted = false;
      ++pos;
      continue;
    }
    field += text[pos++];
  }
}

Cell field_cell(const std::pair<std::string, bool>& field) {
  if (field.second) return field.first;
  return parse_bare(field.first);
}

void append_entries(std::string& out, const char* prefix,
                    const std::vector<std::pair<std::string, Cell>>& entries) {
  for (const auto& [key, value] : entries) out += "# " + std::string(prefix) + key + "=" + csv_field(value) + "\n";
}

}  // namespace

Report& Report::add_meta(std::string key, Cell value) {
  meta.emplace_back(std::move(key), std::move(value));
  return *this;
}

Report& Report::add_stat(std::string key, Cell value) {
  stats.emplace_back(std::move(key), std::move(value));
  return *this;
}

void Report::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw ContractViolation("row width differs from column count");
  rows.push_back(std::move(row));
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "text") return Format::text;
  throw ParseError("unknown format '" + std::string(name) + "' (expected csv, json or text)");
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  std::string s = buf;
  if (is_integer_text(s)) s += ".0";
  return s;
}

double round_real(double value) {
  if (!std::isfinite(value)) return value;
  return std::strtod(format_real(value).c_str(), nullptr);
}

std::string to_csv(const Report& report) {
  std::string out = "# report=" + csv_field(report.name) + "\n";
  out += std::string("# holds=") + (report.holds ? "true" : "false") + "\n";
  append_entries(out, "meta.", report.meta);
  append_entries(out, "stat.", report.stats);
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(report.columns[i]);
  }
  out += '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Report& report) { return json_object(report).dump(2) + "\n"; }

std::string to_text(const Report& report) {
  std::string out = report.name + ": " + (report.holds ? "holds" : "FAILS") + "\n";
  for (const auto& [key, value] : report.meta) out += "  " + key + " = " + text_field(value) + "\n";
  for (const auto& [key, value] : report.stats) out += "  " + key + " = " + text_field(value) + "\n";
  if (report.columns.empty()) return out;

  std::vector<std::size_t> width(report.columns.size());
  for (std::size_t i = 0; i < width.size(); ++i) width[i] = report.columns[i].size();
  std::vector<std::vector<std::string>> cells;
  cells.reserve(report.rows.size());
  for (const auto& row : report.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(text_field(row[i]));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) s += "  ";
      s += line[i];
      if (i + 1 < line.size()) s.append(width[i] - line[i].size(), ' ');
    }
    out += s + "\n";
  };
  out += "\n";
  emit(report.columns);
  for (const auto& line : cells) emit(line);
  return out;
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::csv:
      return to_csv(report);
    case Format::json:
      return to_json(report);
    case Format::text:
      return to_text(report);
  }
  return {};
}

std::string render(const std::vector<Report>& reports, Format format) {
  if (reports.size() == 1) return render(reports.front(), format);
  if (format == Format::json) {
    ordered_json all = ordered_json::array();
    for (const auto& r : reports) all.push_back(json_object(r));
    return all.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out += "\n";
    out += render(reports[i], format);
  }
  return out;
}

Report parse_csv(std::string_view text) {
  Report report;
  std::size_t pos = 0;
  bool saw_name = false;
  while (pos < text.size() && text[pos] == '#') {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.substr(0, 2) != "# ") throw ParseError("comment lines must start with '# '");
    line.remove_prefix(2);
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("comment line without '='");
    const std::string key(line.substr(0, eq));
    std::size_t vpos = 0;
    const auto fields = read_record(line.substr(eq + 1), vpos);
    if (fields.size() != 1) throw ParseError("comment value for '" + key + "' is not a single field");
    const Cell value = field_cell(fields.front());
    if (key == "report") {
      report.name = fields.front().first;
      saw_name = true;
    } else if (key == "holds") {
      if (!std::holds_alternative<bool>(value)) throw ParseError("holds must be true or false");
      report.holds = std::get<bool>(value);
    } else if (key.rfind("meta.", 0) == 0) {
      report.meta.emplace_back(key.substr(5), value);
    } else if (key.rfind("stat.", 0) == 0) {
      report.stats.emplace_back(key.substr(5), value);
    } else {
      throw ParseError("unknown comment key '" + key + "'");
    }
    pos = eol < text.size() ? eol + 1 : eol;
  }
  if (!saw_name) throw ParseError("missing '# report=' line");
  if (pos >= text.size()) throw ParseError("missing header row");
  for (auto& field : read_record(text, pos)) report.columns.push_back(std::move(field.first));
  if (report.columns.size() == 1 && report.columns.front().empty()) report.columns.clear();
  while (pos < text.size()) {
    const auto fields = read_record(text, pos);
    if (fields.size() == 1 && fields.front().first.empty() && !fields.front().second &&
        report.columns.size() != 1) {
      continue;
    }
    if (fields.size() != report.columns.size()) {
      throw ParseError("row has " + std::to_string(fields.size()) + " fields, header has " +
                       std::to_string(report.columns.size()));
    }
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (const auto& field : fields) row.push_back(field_cell(field));
    report.rows.push_back(std::move(row));
  }
  return report;
}

Report parse_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    Report report;
    report.name = j.at("report").get<std::string>();
    report.holds = j.at("holds").get<bool>();
    for (const auto& [key, value] : j.at("meta").items()) report.meta.emplace_back(key, cell_from_json(value));
    for (const auto& [key, value] : j.at("stats").items()) report.stats.emplace_back(key, cell_from_json(value));
    report.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows")) {
      std::vector<Cell> row;
      for (const auto& cell : r) row.push_back(cell_from_json(cell));
      if (row.size() != report.columns.size()) throw ParseError("row width differs from column count");
      report.rows.push_back(std::move(row));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace icx
