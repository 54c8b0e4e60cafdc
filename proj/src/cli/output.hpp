#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace unruh::cli {

using Cell = std::variant<double, long long, bool, std::string>;

/// A result table plus the metadata written alongside it.
struct Table {
  std::string command;
  nlohmann::json config;
  /// Scalar results that are not per-row (ordered as inserted).
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest-safe decimal form: 17 significant digits, '.' separator,
/// independent of the global locale.
std::string format_double(double v);

/// '#'-prefixed metadata lines, one header line, then the rows.
std::string render_csv(const Table& t);

/// {"tool", "command", "config", "summary", "columns", "rows"}.
std::string render_json(const Table& t);

std::string render(const Table& t, const std::string& format);

/// Writes `text` to `path` via a temporary file in the same directory and a
/// rename, so readers never see a partial file. Throws std::runtime_error.
void write_atomically(const std::string& path, const std::string& text);

} // namespace unruh::cli
