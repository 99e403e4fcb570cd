#pragma once

#include <map>
#include <string>
#include <vector>

namespace bernbound {

enum class OutputFormat { csv, json };

OutputFormat parse_format(const std::string& token);

// One serializable result set: ordered columns, rows of string-valued
// cells, and the metadata needed to re-run the command and reproduce the
// output byte for byte.
struct OutputRecord {
  std::string schema_version = "1";
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::map<std::string, std::string>> rows;
  std::map<std::string, std::string> metadata;
};

// RFC-4180 CSV: one `# key=value` comment line per metadata entry (keys
// sorted, schema_version and command first), then the header row and the
// data rows in column order.
std::string to_csv(const OutputRecord& record);

// UTF-8 JSON, keys sorted, two-space indent.
std::string to_json(const OutputRecord& record);

std::string render(const OutputRecord& record, OutputFormat format);

// Writes the rendered record plus a trailing newline to the path, or to
// stdout when the path is empty.
void write_output(const OutputRecord& record, OutputFormat format,
                  const std::string& path);

}  // namespace bernbound
