// End-to-end driver for the command-line tool. Runs the binary given as
// argv[1] through representative invocations and checks exit codes and
// output against frozen expectations.

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string g_binary;
int g_counter = 0;

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string capture =
      "/tmp/bernbound_smoke_" + std::to_string(g_counter++) + ".out";
  const std::string command =
      env + " '" + g_binary + "' " + args + " > " + capture + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  std::ifstream in(capture, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  std::remove(capture.c_str());
  return result;
}

void expect(bool condition, const std::string& what) {
  if (!condition) {
    std::cerr << "FAIL: " << what << "\n";
    ++failures;
  }
}

void expect_exit(const RunResult& result, int code, const std::string& what) {
  if (result.exit_code != code) {
    std::cerr << "FAIL: " << what << " (exit " << result.exit_code
              << ", wanted " << code << ")\n---\n"
              << result.output << "---\n";
    ++failures;
  }
}

void expect_contains(const RunResult& result, const std::string& needle,
                     const std::string& what) {
  if (result.output.find(needle) == std::string::npos) {
    std::cerr << "FAIL: " << what << " (missing \"" << needle << "\")\n---\n"
              << result.output << "---\n";
    ++failures;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_smoke <path-to-binary>\n";
    return 64;
  }
  g_binary = argv[1];

  // Bound evaluation at worked points.
  {
    RunResult r = run("bound --family general-discrete --n 33 --eps 2/33");
    expect_exit(r, 0, "general-discrete bound runs");
    expect_contains(r, "0.785420", "general-discrete value at the grid point");
  }
  {
    RunResult r = run("bound --family hoeffding --n 33 --eps 0");
    expect_exit(r, 0, "hoeffding bound accepts eps = 0");
    expect_contains(r, "2.000000", "hoeffding value saturates at 2");
  }
  {
    RunResult r = run("bound --family classical-bernoulli --k 1 --r 2 --s 2");
    expect_exit(r, 0, "classical bound runs");
    expect_contains(r, "0.400000", "classical value on the symmetric grid");
  }

  // Regime violations exit 1 and name the condition.
  {
    RunResult r = run("bound --family continuous --n 100 --p 0.5 --eps 0.005");
    expect_exit(r, 1, "continuous bound outside its regime");
    expect_contains(r, "1/n", "regime message names the violated condition");
  }

  // Exact tails, strict versus weak.
  {
    RunResult r = run(
        "tail --n 33 --p 15/33 --eps 2/33 --side two --boundary strict");
    expect_exit(r, 0, "strict tail runs");
    expect_contains(r, "0.382439", "strict tail decimal");
    expect_contains(r, "/2111377674535255285545615254209921",
                    "strict tail exact denominator");
  }
  {
    RunResult r =
        run("tail --n 33 --p 15/33 --eps 2/33 --side two --boundary weak");
    expect_exit(r, 0, "weak tail runs");
    expect_contains(r, "0.600713", "weak tail decimal");
  }
  {
    RunResult r = run("tail --n 2000 --p 0.5 --eps 0.01");
    expect_exit(r, 0, "log backend tail runs");
    expect_contains(r, "log", "large n uses the log backend");
  }

  // Decimal and rational input must agree exactly.
  {
    RunResult a = run("tail --n 20 --p 0.25 --eps 0.1");
    RunResult b = run("tail --n 20 --p 1/4 --eps 1/10");
    expect_exit(a, 0, "decimal probability input");
    expect_exit(b, 0, "rational probability input");
    // Same exact fraction in both outputs.
    std::string frac_a = a.output.substr(a.output.find("strict"));
    std::string frac_b = b.output.substr(b.output.find("strict"));
    expect(frac_a == frac_b, "decimal and rational inputs give identical rows");
  }

  // Group decomposition.
  {
    RunResult r = run("decompose --k 1 --r 1 --s 1");
    expect_exit(r, 0, "lattice decomposition runs");
    expect_contains(r, "p0,0.500000,1/2", "center mass");
    expect_contains(r, "S1,0.250000,1/4", "left group mass");
    expect_contains(r, "Z1,0.250000,1/4", "right group mass");
  }
  {
    RunResult r = run("decompose --n 33 --m 18 --k 4");
    expect_exit(r, 0, "direct decomposition runs");
    expect_contains(r, "S-terminal", "left terminal group is reported");
    expect_contains(r, "Z-terminal", "right terminal group is reported");
    expect_contains(r, "# total=1", "decomposition mass is conserved");
  }

  // Planning.
  {
    RunResult r = run("samplesize --family hoeffding --eps 0.1 --target 0.05");
    expect_exit(r, 0, "sample size inversion runs");
    expect_contains(r, "hoeffding,185,", "minimal n at the worked point");
  }
  {
    RunResult r = run("samplesize --eps 0.1 --target 0.05 --rank");
    expect_exit(r, 0, "ranking runs");
    expect_contains(r, "1,sharp,150,", "sharp family ranks first");
  }

  // Verification suites: exit 0 on pass, JSON by default.
  {
    RunResult r = run("verify --suite median --kmax 1 --rsmax 2");
    expect_exit(r, 0, "median suite passes");
    expect(r.output.rfind("{", 0) == 0, "verify defaults to json");
    try {
      const nlohmann::json parsed = nlohmann::json::parse(r.output);
      expect(parsed["schema_version"] == "1", "json schema version");
      expect(parsed["metadata"]["result"] == "pass", "json result metadata");
    } catch (const std::exception& e) {
      expect(false, std::string("verify output parses as json: ") + e.what());
    }
  }
  {
    RunResult r = run("verify --suite collapse");
    expect_exit(r, 0, "collapse suite passes");
  }

  // Tables default to CSV.
  {
    RunResult r = run("table1");
    expect_exit(r, 0, "table1 runs");
    expect(r.output.rfind("# schema_version=1", 0) == 0,
           "tables default to csv");
    expect_contains(r, "0.0606,0.600713,0.785420,1.569446", "first table row");
    expect_contains(r, "0.4545,0.000000,0.000012,0.000002", "last table row");
  }
  {
    RunResult r = run("table2");
    expect_exit(r, 0, "table2 runs");
    expect_contains(r, "100,1.0412,1.0697,1.1436,1.3737,1.7612,2.0357",
                    "first correction row");
  }
  {
    RunResult r = run("figure-data --panel c");
    expect_exit(r, 0, "crossover series runs");
    expect_contains(r, "100000000,", "series reaches the largest n");
  }

  // Output format and destination controls.
  {
    RunResult r = run("table1 --format json");
    expect_exit(r, 0, "table1 renders as json on request");
    try {
      const nlohmann::json parsed = nlohmann::json::parse(r.output);
      expect(parsed["rows"][0]["eps"] == "0.0606", "json table row content");
    } catch (const std::exception& e) {
      expect(false, std::string("table json parses: ") + e.what());
    }
  }
  {
    const std::string path = "/tmp/bernbound_smoke_out.csv";
    RunResult r = run("table1 --out " + path);
    expect_exit(r, 0, "file output runs");
    expect(r.output.empty(), "nothing on stdout when --out is given");
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    expect(buffer.str().rfind("# schema_version=1", 0) == 0,
           "file carries the rendered table");
    std::remove(path.c_str());
  }

  // Determinism: identical invocations produce identical bytes.
  {
    RunResult a = run("table1");
    RunResult b = run("table1");
    expect(a.output == b.output, "repeated runs are byte-identical");
  }

  // Environment default for precision.
  {
    RunResult r = run("bound --family uspensky --n 10 --eps 0.1",
                      "BERNBOUND_PRECISION_BITS=64");
    expect_exit(r, 0, "environment precision accepted");
    expect_contains(r, "# precision_bits=64", "environment sets the default");
  }
  {
    RunResult r = run("bound --family uspensky --n 10 --eps 0.1",
                      "BERNBOUND_PRECISION_BITS=junk");
    expect_exit(r, 2, "malformed environment value is a usage error");
  }

  // Usage errors exit 2.
  {
    expect_exit(run(""), 2, "missing subcommand");
    expect_exit(run("unknown-command"), 2, "unknown subcommand");
    expect_exit(run("tail --n 33 --p 15/33"), 2, "missing required flag");
    expect_exit(run("bound --family nonsense --n 5 --eps 0.1"), 2,
                "unknown family");
    expect_exit(run("samplesize --family hoeffding --target 0.05"), 2,
                "neither eps nor n given");
  }

  // Help exits 0.
  {
    expect_exit(run("--help"), 0, "help exits cleanly");
    expect_exit(run("tail --help"), 0, "subcommand help exits cleanly");
  }

  if (failures == 0) {
    std::cout << "cli smoke: all checks passed\n";
  } else {
    std::cout << "cli smoke: " << failures << " check(s) failed\n";
  }
  return failures == 0 ? 0 : 1;
}
