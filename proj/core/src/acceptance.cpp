#include "eulerlab/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>
#include <utility>

#include "eulerlab/bijections.hpp"
#include "eulerlab/counting.hpp"
#include "eulerlab/enumerate.hpp"
#include "eulerlab/generating_functions.hpp"
#include "eulerlab/verification.hpp"

namespace eulerlab {

namespace {

using namespace std::chrono_literals;

struct Outcome {
  bool passed = true;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

// The worked example for n = 6: A(6), B(6), C(7) and D(7) listed in full.
const std::vector<std::pair<PartitionClassId, std::vector<std::string>>>&
golden_table() {
  static const std::vector<std::pair<PartitionClassId, std::vector<std::string>>>
      table = {
          {PartitionClassId::A, {"6", "5+1", "4+2", "3+2+1"}},
          {PartitionClassId::B, {"5+1", "3+3", "3+1+1+1", "1+1+1+1+1+1"}},
          {PartitionClassId::C, {"6+1", "4+3", "4+2+1", "2+2+2+1"}},
          {PartitionClassId::D,
           {"0+0+7", "0+0+6+1", "0+0+5+2", "0+0+4+3", "0+0+4+2+1", "1+1+5",
            "1+1+2+3", "2+2+3"}},
      };
  return table;
}

Outcome golden_table_criterion() {
  for (const auto& [cls, expected] : golden_table()) {
    const std::uint32_t n = cls == PartitionClassId::A || cls == PartitionClassId::B ? 6 : 7;
    std::vector<std::string> rendered;
    for (const Partition& p : enumerate_class(n, cls))
      rendered.push_back(render_for_class(p, cls));
    std::vector<std::string> want = expected;
    std::sort(rendered.begin(), rendered.end());
    std::sort(want.begin(), want.end());
    if (rendered != want)
      return fail(std::string("list mismatch for class ") + class_label(cls));
    const BigInt dp = count_class(n, cls, CountMethod::dynamic_program);
    if (dp != static_cast<unsigned long>(expected.size()))
      return fail(std::string("dynamic-program count mismatch for class ") +
                  class_label(cls));
  }
  return {true, "A(6)=B(6)=C(7)=4, D(7)=8, lists reproduced"};
}

Outcome theorem_by_enumeration() {
  constexpr std::uint32_t kMaxN = 60;
  const std::uint32_t cutoff = kMaxN + 1;  // C and D are needed at n+1
  for (std::uint32_t n = 2; n <= kMaxN; ++n) {
    const auto a = count_by_enumeration(n, PartitionClassId::A, cutoff);
    const auto b = count_by_enumeration(n, PartitionClassId::B, cutoff);
    const auto c = count_by_enumeration(n + 1, PartitionClassId::C, cutoff);
    const auto d = count_by_enumeration(n + 1, PartitionClassId::D, cutoff);
    if (!(a == b && b == c && 2 * c == d)) {
      std::ostringstream out;
      out << "n=" << n << ": A=" << a << " B=" << b << " C(n+1)=" << c
          << " D(n+1)=" << d;
      return fail(out.str());
    }
  }
  return {true, "2 <= n <= 60"};
}

Outcome report_outcome(const VerificationReport& r) {
  return {r.passed(), summarize(r)};
}

Outcome theorem_by_series() {
  // order 200 covers C(n+1), D(n+1) for n <= 199
  return report_outcome(verify_identity(IdentityName::thm_all, 200));
}

Outcome shift_bc_all_forms() {
  constexpr std::size_t kOrder = 200;
  const TruncatedSeries b = gf_class(PartitionClassId::B, kOrder);
  for (CForm form : kAllCForms) {
    const TruncatedSeries c = gf_c_variant(form, kOrder);
    for (std::size_t n = 1; n <= 199; ++n) {
      if (c[n + 1] != b[n]) {
        std::ostringstream out;
        out << to_string(form) << " n=" << n << ": " << c[n + 1].get_str()
            << " != " << b[n].get_str();
        return fail(out.str());
      }
    }
  }
  return {true, "1 <= n <= 199, three forms"};
}

Outcome chain_and_half_d() {
  constexpr std::size_t kOrder = 200;
  const VerificationReport chain = verify_identity(IdentityName::chain_C, kOrder);
  if (!chain.passed()) return report_outcome(chain);
  const VerificationReport half = verify_identity(IdentityName::half_D, kOrder);
  if (!half.passed()) return report_outcome(half);
  return {true, "five stages and 2C = D + 1 - q through q^200"};
}

Outcome euler_expansions() {
  for (std::size_t c = 1; c <= 5; ++c) {
    const VerificationReport r = euler_expansion_check(c, 100);
    if (!r.passed()) return report_outcome(r);
  }
  return {true, "c = 1..5, both signs, order 100"};
}

Outcome bijection_suites() {
  for (BijectionSuite suite : kAllBijectionSuites) {
    const VerificationReport r = verify_bijection_suite(suite, 40);
    if (!r.passed()) return report_outcome(r);
  }
  return {true, "glaisher, c_b, d_a through weight 40"};
}

Outcome oracle_equivalence() {
  constexpr std::uint32_t kMaxN = 30;
  for (PartitionClassId cls : kAllClasses) {
    const CountTable by_enum = count_table(cls, kMaxN, CountMethod::enumeration);
    const CountTable by_dp = count_table(cls, kMaxN, CountMethod::dynamic_program);
    const CountTable by_series =
        count_table(cls, kMaxN, CountMethod::series_coefficient);
    for (std::uint32_t n = 0; n <= kMaxN; ++n) {
      if (by_enum.values[n] != by_dp.values[n] ||
          by_dp.values[n] != by_series.values[n]) {
        std::ostringstream out;
        out << "class " << class_label(cls) << " n=" << n
            << ": enumeration=" << by_enum.values[n].get_str()
            << " dp=" << by_dp.values[n].get_str()
            << " series=" << by_series.values[n].get_str();
        return fail(out.str());
      }
    }
  }
  return {true, "all classes, n <= 30"};
}

struct Criterion {
  std::string name;
  std::chrono::milliseconds budget;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"golden_table", 1000ms, golden_table_criterion},
      {"theorem_enumeration", 120000ms, theorem_by_enumeration},
      {"theorem_series", 30000ms, theorem_by_series},
      {"shift_BC_three_forms", 30000ms, shift_bc_all_forms},
      {"chain_C_and_half_D", 30000ms, chain_and_half_d},
      {"euler_expansion", 30000ms, euler_expansions},
      {"bijection_round_trips", 300000ms, bijection_suites},
      {"oracle_equivalence", 0ms, oracle_equivalence},
  };
  return list;
}

CriterionResult run_one(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = c.run();
  } catch (const std::exception& e) {
    outcome = fail(std::string("exception: ") + e.what());
  }
  CriterionResult r;
  r.name = c.name;
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  r.budget = c.budget;
  r.passed = outcome.passed;
  r.detail = outcome.detail;
  if (r.passed && c.budget.count() > 0 && r.elapsed > c.budget) {
    r.passed = false;
    r.detail += "; over runtime budget of " + std::to_string(c.budget.count()) + " ms";
  }
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(bool parallel) {
  std::vector<CriterionResult> results;
  if (!parallel) {
    for (const Criterion& c : criteria()) results.push_back(run_one(c));
    return results;
  }
  std::vector<std::future<CriterionResult>> pending;
  for (const Criterion& c : criteria())
    pending.push_back(std::async(std::launch::async, run_one, std::cref(c)));
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

std::string format_criterion(const CriterionResult& r, bool with_timing) {
  std::string line = (r.passed ? "PASS " : "FAIL ") + r.name + " (" + r.detail + ")";
  if (with_timing) line += " [" + std::to_string(r.elapsed.count()) + " ms]";
  return line;
}

}  // namespace eulerlab
