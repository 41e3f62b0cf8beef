#include "moduli/cli/output.hpp"

#include "moduli/error.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>

namespace moduli::cli {

namespace {

std::string plain(const Cell& c) {
  struct V {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const Integer& v) const { return v.str(); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(V{}, c);
}

std::string markdown_cell(const Cell& c, bool dagger_column) {
  if (dagger_column) {
    if (const bool* b = std::get_if<bool>(&c)) return *b ? "†" : "";
  }
  std::string s = plain(c);
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  return out + "\"";
}

}  // namespace

std::optional<Format> parse_format(const std::string& name) {
  if (name == "markdown") return Format::markdown;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

Format format_from_env() {
  const char* v = std::getenv("MODULI_LAB_FORMAT");
  if (!v || !*v) return Format::markdown;
  auto f = parse_format(v);
  if (!f)
    throw ModuliError(Errc::bad_input,
                      std::string("MODULI_LAB_FORMAT must be markdown, csv or json, got '") + v + "'");
  return *f;
}

void OutputTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::logic_error("row width does not match the column count in table " + title);
  rows.push_back(std::move(row));
}

std::string render_markdown(const OutputTable& t) {
  std::ostringstream os;
  if (!t.title.empty()) os << "## " << t.title << "\n\n";
  if (!t.citation.empty()) os << "Source: " << t.citation << "\n\n";
  std::vector<bool> dagger(t.columns.size());
  os << "|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    dagger[i] = t.columns[i] == kDaggerColumn;
    os << " " << (dagger[i] ? "†" : t.columns[i]) << " |";
  }
  os << "\n|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << " --- |";
  os << "\n";
  for (const auto& row : t.rows) {
    os << "|";
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string s = markdown_cell(row[i], dagger[i]);
      os << (s.empty() ? " |" : " " + s + " |");
    }
    os << "\n";
  }
  if (!t.notes.empty()) {
    os << "\n";
    for (const auto& n : t.notes) os << "- " << n << "\n";
  }
  return os.str();
}

std::string render_csv(const OutputTable& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(plain(row[i]));
    os << "\n";
  }
  return os.str();
}

nlohmann::ordered_json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Integer integer_from_json(const nlohmann::ordered_json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw ModuliError(Errc::bad_input, "expected an integer in JSON, got " + j.dump());
}

nlohmann::ordered_json table_to_json(const OutputTable& t) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      if (std::holds_alternative<std::monostate>(c)) obj[t.columns[i]] = nullptr;
      else if (auto* s = std::get_if<std::string>(&c)) obj[t.columns[i]] = *s;
      else if (auto* v = std::get_if<Integer>(&c)) obj[t.columns[i]] = integer_to_json(*v);
      else obj[t.columns[i]] = std::get<bool>(c);
    }
    rows.push_back(std::move(obj));
  }
  nlohmann::ordered_json j;
  j["title"] = t.title;
  if (!t.citation.empty()) j["citation"] = t.citation;
  j["columns"] = t.columns;
  j["rows"] = std::move(rows);
  j["notes"] = t.notes;
  return j;
}

std::string render(const OutputTable& t, Format f) {
  switch (f) {
    case Format::markdown: return render_markdown(t);
    case Format::csv: return render_csv(t);
    case Format::json: {
      nlohmann::ordered_json j;
      j["format"] = "moduli-lab/1";
      j.update(table_to_json(t));
      return j.dump(2) + "\n";
    }
  }
  return "";
}

}  // namespace moduli::cli
