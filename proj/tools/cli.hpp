#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace eulerlab::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

enum class OutputFormat { plain, json_lines };

// Inclusive range "a..b", or a single value.
struct NRange {
  std::uint32_t first = 0;
  std::uint32_t last = 0;
};

// Throws std::invalid_argument on malformed or empty ranges.
NRange parse_range(const std::string& text);

struct RunConfig {
  std::string subcommand;
  std::string class_tag;
  std::string n_range;
  std::string method = "dynamic-program";
  std::string form;
  std::string stage;
  std::string bijection;
  std::string identity;
  std::string partition;
  int bit = -1;
  std::uint32_t coefficient_c = 0;  // 0: all of 1..5
  std::size_t order = 200;
  std::uint32_t cutoff = 60;
  std::uint32_t max_weight = 40;
  bool constant_free = false;
  bool timing = false;
  bool parallel = false;
  OutputFormat format = OutputFormat::plain;
};

// Runs the command line; everything user-visible goes to out/err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace eulerlab::cli
