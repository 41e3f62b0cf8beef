#pragma once

#include "moduli/integer.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace moduli::cli {

enum class Format { markdown, csv, json };

/// Reads MODULI_LAB_FORMAT; unset means markdown. Throws bad_input on other values.
Format format_from_env();
std::optional<Format> parse_format(const std::string& name);

using Cell = std::variant<std::monostate, std::string, Integer, bool>;

struct OutputTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Where the rows come from; printed with golden tables.
  std::string citation;
  std::vector<std::string> notes;

  void add_row(std::vector<Cell> row);
};

/// Column rendered as a dagger glyph in markdown and as a boolean elsewhere.
inline constexpr const char* kDaggerColumn = "requires_non_hyperelliptic";

std::string render_markdown(const OutputTable& t);
/// RFC 4180, LF line endings, header row always present. Notes are not part of the CSV.
std::string render_csv(const OutputTable& t);
nlohmann::ordered_json table_to_json(const OutputTable& t);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json integer_to_json(const Integer& v);
Integer integer_from_json(const nlohmann::ordered_json& j);

std::string render(const OutputTable& t, Format f);

}  // namespace moduli::cli
