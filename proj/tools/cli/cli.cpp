#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "commands.hpp"
#include "pzbench/errors.hpp"

namespace pzbench::cli {
namespace {

std::string cell(const json& v) {
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  if (v.is_number()) return v.dump();
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

json convert(const Param& p, const std::string& raw) {
  try {
    std::size_t used = 0;
    switch (p.type) {
      case ParamType::integer: {
        const long long v = std::stoll(raw, &used);
        if (used != raw.size()) break;
        return v;
      }
      case ParamType::real: {
        const double v = std::stod(raw, &used);
        if (used != raw.size()) break;
        return v;
      }
      case ParamType::text:
        return raw;
      case ParamType::integer_list: {
        json a = json::array();
        for (const auto& s : split_list(raw)) a.push_back(std::stoll(s));
        return a;
      }
      case ParamType::real_list: {
        json a = json::array();
        for (const auto& s : split_list(raw)) a.push_back(std::stod(s));
        return a;
      }
    }
  } catch (const std::logic_error&) {
  }
  throw PreconditionError("bad value '" + raw + "' for --" + p.name);
}

bool type_matches(const Param& p, const json& v) {
  switch (p.type) {
    case ParamType::integer: return v.is_number_integer();
    case ParamType::real: return v.is_number();
    case ParamType::text: return v.is_string();
    case ParamType::integer_list:
      return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number_integer(); });
    case ParamType::real_list:
      return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number(); });
  }
  return false;
}

// A config file is a bare config object, a JSON report, or a CSV report.
json load_config(const std::string& path, const std::string& subcommand) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  json j;
  const std::string head = "# pzbench ", marker = "# config ";
  if (text.rfind(head, 0) == 0) {
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    j["subcommand"] = line.substr(head.size());
    while (std::getline(lines, line)) {
      if (line.rfind(marker, 0) == 0) {
        j["config"] = json::parse(line.substr(marker.size()));
        break;
      }
    }
    if (!j.contains("config")) throw PreconditionError("CSV report '" + path + "' has no config line");
  } else {
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw PreconditionError("bad config '" + path + "': " + e.what());
    }
  }
  if (j.contains("config")) {
    if (j.contains("subcommand") && j.at("subcommand") != subcommand) {
      throw PreconditionError("config '" + path + "' belongs to subcommand " +
                              j.at("subcommand").dump());
    }
    return j.at("config");
  }
  return j;
}

json resolve(const Command& cmd, const json& file_cfg,
             const std::map<std::string, std::string>& flags, const CLI::App& sub) {
  json cfg = json::object();
  for (const auto& p : cmd.params) cfg[p.name] = p.fallback;
  if (!file_cfg.is_null()) {
    if (!file_cfg.is_object()) throw PreconditionError("config must be a JSON object");
    for (const auto& [k, v] : file_cfg.items()) {
      auto it = std::find_if(cmd.params.begin(), cmd.params.end(),
                             [&k](const Param& p) { return p.name == k; });
      if (it == cmd.params.end()) throw PreconditionError("unknown config key '" + k + "'");
      if (!type_matches(*it, v)) throw PreconditionError("config key '" + k + "' has the wrong type");
      cfg[k] = v;
    }
  }
  for (const auto& p : cmd.params) {
    if (sub.get_option("--" + p.name)->count() > 0) cfg[p.name] = convert(p, flags.at(p.name));
  }
  return cfg;
}

}  // namespace

bool Report::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

std::vector<std::string> subcommands() {
  std::vector<std::string> out;
  for (const auto& c : commands()) out.push_back(c.name);
  return out;
}

Report run(const std::string& subcommand, const json& config) {
  const Command& cmd = find_command(subcommand);
  json cfg = json::object();
  for (const auto& p : cmd.params) cfg[p.name] = config.contains(p.name) ? config.at(p.name) : p.fallback;
  return cmd.run(cfg);
}

json to_json(const Report& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  }
  return {{"subcommand", r.subcommand}, {"config", r.config},   {"columns", r.columns},
          {"rows", r.rows},             {"provenance", r.provenance}, {"verdicts", verdicts}};
}

void write_csv(const Report& r, std::ostream& os) {
  os << "# pzbench " << r.subcommand << "\n";
  os << "# config " << r.config.dump() << "\n";
  os << "# provenance " << r.provenance.dump() << "\n";
  for (const auto& v : r.verdicts) {
    os << "# verdict " << (v.pass ? "PASS " : "FAIL ") << v.name;
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
  os << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell(row[i]);
    os << "\n";
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"pzbench: Paley and Zygmund Fourier inequality experiments"};
  app.require_subcommand(1, 1);
  std::map<std::string, std::map<std::string, std::string>> values;
  std::string format = "csv", output, config_path;
  for (const auto& cmd : commands()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    auto& vals = values[cmd.name];
    for (const auto& p : cmd.params) {
      std::string help = p.help;
      help += (help.empty() ? "" : " ");
      help += "(default " + p.fallback.dump() + ")";
      sub->add_option("--" + p.name, vals[p.name], help);
    }
    sub->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", output, "output file (default $PZBENCH_OUTPUT_DIR/<cmd>.<fmt> or stdout)");
    sub->add_option("--config", config_path, "replay a config object or an earlier report");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const Command& cmd = find_command(sub->get_name());
  Report report;
  try {
    const json file_cfg = config_path.empty() ? json() : load_config(config_path, cmd.name);
    report = cmd.run(resolve(cmd, file_cfg, values[cmd.name], *sub));
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::string path = output;
  if (path.empty()) {
    if (const char* dir = std::getenv("PZBENCH_OUTPUT_DIR"); dir && *dir) {
      path = (std::filesystem::path(dir) / (cmd.name + "." + format)).string();
    }
  }
  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) {
      err << "error: cannot write '" << path << "'\n";
      return kUsage;
    }
  }
  std::ostream& dst = path.empty() ? out : file;
  if (format == "json") {
    dst << to_json(report).dump(2) << "\n";
  } else {
    write_csv(report, dst);
  }
  for (const auto& v : report.verdicts) {
    if (!v.pass) err << "verdict failed: " << v.name << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
  }
  return report.passed() ? kOk : kVerdictFailed;
}

}  // namespace pzbench::cli
