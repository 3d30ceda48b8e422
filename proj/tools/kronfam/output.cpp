#include "kronfam/output.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kronfam {

Format parse_format(const std::string& name) {
  if (name == "pretty") return Format::pretty;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string render_csv(const Result& result) {
  std::ostringstream out;
  if (!result.lines.empty() && result.rows.empty()) {
    for (const auto& line : result.lines) out << line << '\n';
    return out.str();
  }
  if (result.scalar) return *result.scalar + "\n";
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
    out << '\n';
  };
  if (!result.header.empty()) emit(result.header);
  for (const auto& row : result.rows) emit(row);
  return out.str();
}

std::string render_pretty(const Result& result) {
  std::ostringstream out;
  if (!result.lines.empty()) {
    for (const auto& line : result.lines) out << line << '\n';
    return out.str();
  }
  if (result.scalar) return *result.scalar + "\n";
  std::vector<std::size_t> width(result.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& row) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  };
  measure(result.header);
  for (const auto& row : result.rows) measure(row);
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    out << line << '\n';
  };
  if (!result.header.empty()) emit(result.header);
  for (const auto& row : result.rows) emit(row);
  return out.str();
}

}  // namespace

std::string render(const Result& result, Format format) {
  switch (format) {
    case Format::json:
      return result.json.dump(2) + "\n";
    case Format::csv:
      return render_csv(result);
    case Format::pretty:
      return render_pretty(result);
  }
  return {};
}

}  // namespace kronfam
