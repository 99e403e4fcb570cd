#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bernbound/report.hpp"

using namespace bernbound;

namespace {

OutputRecord sample_record() {
  OutputRecord rec;
  rec.command = "tail";
  rec.columns = {"n", "p", "probability"};
  rec.metadata["precision_bits"] = "128";
  rec.metadata["boundary_default"] = "strict";
  std::map<std::string, std::string> row;
  row["n"] = "33";
  row["p"] = "5/11";
  row["probability"] = "0.382439";
  rec.rows.push_back(row);
  return rec;
}

}  // namespace

TEST_CASE("format tokens parse and reject") {
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("csv output leads with schema and command") {
  const std::string text = to_csv(sample_record());
  CHECK(text.rfind("# schema_version=1\r\n# command=tail\r\n", 0) == 0);
  CHECK(text.find("n,p,probability\r\n") != std::string::npos);
  CHECK(text.find("33,5/11,0.382439\r\n") != std::string::npos);
}

TEST_CASE("csv escapes delimiters, quotes and newlines") {
  OutputRecord rec;
  rec.command = "bound";
  rec.columns = {"a", "b", "c", "d"};
  std::map<std::string, std::string> row;
  row["a"] = "plain";
  row["b"] = "has,comma";
  row["c"] = "has\"quote";
  row["d"] = "has\nnewline";
  rec.rows.push_back(row);
  const std::string text = to_csv(rec);
  CHECK(text.find("plain,\"has,comma\",\"has\"\"quote\",\"has\nnewline\"") !=
        std::string::npos);
}

TEST_CASE("missing cells render as empty fields") {
  OutputRecord rec;
  rec.command = "bound";
  rec.columns = {"a", "b", "c"};
  std::map<std::string, std::string> row;
  row["b"] = "x";
  rec.rows.push_back(row);
  const std::string text = to_csv(rec);
  CHECK(text.find(",x,") != std::string::npos);
}

TEST_CASE("json output is valid and carries sorted keys") {
  const std::string text = to_json(sample_record());
  const nlohmann::json parsed = nlohmann::json::parse(text);
  CHECK(parsed["schema_version"] == "1");
  CHECK(parsed["command"] == "tail");
  CHECK(parsed["metadata"]["precision_bits"] == "128");
  REQUIRE(parsed["rows"].size() == 1);
  CHECK(parsed["rows"][0]["probability"] == "0.382439");
  CHECK(parsed["columns"][0] == "n");
  // nlohmann objects iterate in sorted key order; serializing preserves it.
  const std::string round_trip = parsed.dump(2);
  CHECK(round_trip == text);
}

TEST_CASE("rendering is deterministic") {
  const OutputRecord rec = sample_record();
  CHECK(render(rec, OutputFormat::csv) == render(rec, OutputFormat::csv));
  CHECK(render(rec, OutputFormat::json) == render(rec, OutputFormat::json));
}

TEST_CASE("write_output writes files byte-for-byte") {
  const OutputRecord rec = sample_record();
  const std::string path = "/tmp/bernbound_report_test.csv";
  write_output(rec, OutputFormat::csv, path);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == render(rec, OutputFormat::csv));
  std::remove(path.c_str());
}
