#include "bernbound/report.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

namespace bernbound {

namespace {

// Quotes a cell when it contains a comma, a quote, or a line break;
// embedded quotes are doubled.
std::string csv_escape(const std::string& cell) {
  const bool needs_quotes =
      cell.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) {
    return cell;
  }
  std::string quoted = "\"";
  for (const char c : cell) {
    if (c == '"') {
      quoted += "\"\"";
    } else {
      quoted += c;
    }
  }
  quoted += '"';
  return quoted;
}

}  // namespace

OutputFormat parse_format(const std::string& token) {
  if (token == "csv") {
    return OutputFormat::csv;
  }
  if (token == "json") {
    return OutputFormat::json;
  }
  throw std::invalid_argument("unknown output format: " + token);
}

std::string to_csv(const OutputRecord& record) {
  std::string out;
  out += "# schema_version=" + record.schema_version + "\r\n";
  out += "# command=" + record.command + "\r\n";
  for (const auto& [key, value] : record.metadata) {
    out += "# " + key + "=" + value + "\r\n";
  }
  for (std::size_t i = 0; i < record.columns.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += csv_escape(record.columns[i]);
  }
  out += "\r\n";
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < record.columns.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      const auto it = row.find(record.columns[i]);
      out += csv_escape(it == row.end() ? std::string() : it->second);
    }
    out += "\r\n";
  }
  return out;
}

std::string to_json(const OutputRecord& record) {
  nlohmann::json j;
  j["schema_version"] = record.schema_version;
  j["command"] = record.command;
  j["columns"] = record.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : record.rows) {
    rows.push_back(row);
  }
  j["rows"] = std::move(rows);
  j["metadata"] = record.metadata;
  return j.dump(2);
}

std::string render(const OutputRecord& record, OutputFormat format) {
  return format == OutputFormat::csv ? to_csv(record) : to_json(record);
}

void write_output(const OutputRecord& record, OutputFormat format,
                  const std::string& path) {
  std::string text = render(record, format);
  if (format == OutputFormat::json) {
    text += '\n';
  }
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  file << text;
  if (!file) {
    throw std::runtime_error("write failed: " + path);
  }
}

}  // namespace bernbound
