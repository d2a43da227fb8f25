#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace eulerlab {

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::chrono::milliseconds elapsed{0};
  std::chrono::milliseconds budget{0};  // runtime limit, zero when unlimited
};

// Runs every acceptance criterion in a fixed order. With parallel = true the
// criteria run on separate threads; results keep the fixed order.
std::vector<CriterionResult> run_acceptance(bool parallel = false);

// "PASS name (detail) [elapsed ms]" / "FAIL ...".
std::string format_criterion(const CriterionResult& r, bool with_timing = true);

}  // namespace eulerlab
