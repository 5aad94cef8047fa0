#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cli.hpp"

namespace pzbench::cli {

enum class ParamType { integer, real, text, integer_list, real_list };

struct Param {
  std::string name;  // flag is --name, config key is name
  ParamType type;
  json fallback;
  std::string help;
};

struct Command {
  std::string name;
  std::string help;
  std::vector<Param> params;
  std::function<Report(const json&)> run;
};

const std::vector<Command>& commands();
const Command& find_command(const std::string& name);

}  // namespace pzbench::cli
