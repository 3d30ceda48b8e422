#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace kronfam {

using Json = nlohmann::ordered_json;

enum class Format { pretty, csv, json };

/// Parses "pretty", "csv" or "json"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& name);

/// What a subcommand produces. JSON is always filled in; pretty and CSV use
/// `lines` when present, else `scalar`, else the table.
struct Result {
  Json json;
  std::optional<std::string> scalar;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> lines;
  int exit_code = 0;
};

/// Marker used for values no pathway could evaluate.
inline constexpr const char* kScaleExceeded = "scale-exceeded";

std::string render(const Result& result, Format format);

/// RFC 4180 quoting when the field holds a comma, quote or newline.
std::string csv_field(const std::string& field);

}  // namespace kronfam
