#pragma once

// The pzbench command-line driver. Every subcommand maps a JSON config
// (flags merged over an optional --config file) to a Report.

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace pzbench::cli {

using nlohmann::json;

struct Verdict {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::string subcommand;
  json config;                    // every parameter, defaults resolved
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;  // numbers or strings, one per column
  json provenance = json::object();
  std::vector<Verdict> verdicts;

  bool passed() const;
};

enum ExitCode { kOk = 0, kUsage = 1, kVerdictFailed = 2 };

/// Runs one subcommand on a resolved config. Throws PreconditionError (or
/// json errors) on bad parameters.
Report run(const std::string& subcommand, const json& config);

std::vector<std::string> subcommands();

/// CSV: "# "-prefixed JSON lines for the config echo, provenance and
/// verdicts, then the header and rows; numbers printed with %.17g.
void write_csv(const Report& r, std::ostream& os);
json to_json(const Report& r);

/// Full driver: parses argv, runs, writes the report, returns the exit code.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pzbench::cli
