#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <future>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "eulerlab/acceptance.hpp"
#include "eulerlab/bijections.hpp"
#include "eulerlab/counting.hpp"
#include "eulerlab/enumerate.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/generating_functions.hpp"
#include "eulerlab/verification.hpp"

namespace eulerlab::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint32_t parse_u32(std::string_view text) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("not a non-negative integer: " + std::string(text));
  return value;
}

PartitionClassId require_class(const std::string& tag) {
  if (tag.empty()) throw UsageError("--class is required");
  auto c = parse_class_label(tag);
  if (!c) throw UsageError("unknown class: " + tag + " (expected A, B, C or D)");
  return *c;
}

NRange require_range(const std::string& text) {
  if (text.empty()) throw UsageError("--n is required");
  try {
    return parse_range(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.order < 1) throw UsageError("--order must be >= 1");
  if (cfg.cutoff > 100) throw UsageError("--cutoff must be <= 100");
}

std::string class_string(PartitionClassId c) { return std::string(1, class_label(c)); }

// ---- count ---------------------------------------------------------------

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const PartitionClassId cls = require_class(cfg.class_tag);
  const NRange range = require_range(cfg.n_range);
  const auto method = parse_count_method(cfg.method);
  if (!method) throw UsageError("unknown method: " + cfg.method);
  Counter counter(cfg.cutoff);
  for (std::uint32_t n = range.first; n <= range.last; ++n) {
    const BigInt value = counter.count(n, cls, *method);
    if (cfg.format == OutputFormat::json_lines)
      out << json{{"n", n}, {"class", class_string(cls)}, {"count", value.get_str()}}.dump()
          << '\n';
    else
      out << n << ' ' << class_label(cls) << ' ' << value.get_str() << '\n';
    if (n == range.last) break;
  }
  return kOk;
}

// ---- enumerate -----------------------------------------------------------

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const PartitionClassId cls = require_class(cfg.class_tag);
  const NRange range = require_range(cfg.n_range);
  const bool prefix = range.first != range.last;
  for (std::uint32_t n = range.first; n <= range.last; ++n) {
    for (const Partition& p : enumerate_class(n, cls, cfg.cutoff)) {
      const std::string text = render_for_class(p, cls);
      if (cfg.format == OutputFormat::json_lines) {
        out << json{{"n", n},
                    {"class", class_string(cls)},
                    {"partition", text},
                    {"parts", std::vector<Part>(p.parts().begin(), p.parts().end())}}
                   .dump()
            << '\n';
      } else {
        if (prefix) out << n << '\t';
        out << text << '\n';
      }
    }
    if (n == range.last) break;
  }
  return kOk;
}

// ---- map -----------------------------------------------------------------

struct MapSpec {
  PartitionClassId source;
  PartitionClassId target;
};

MapSpec map_spec(const std::string& name) {
  using C = PartitionClassId;
  if (name == "glaisher") return {C::A, C::B};
  if (name == "glaisher-inv") return {C::B, C::A};
  if (name == "c2b") return {C::C, C::B};
  if (name == "b2c") return {C::B, C::C};
  if (name == "d-reduce") return {C::D, C::A};
  if (name == "d-lift") return {C::A, C::D};
  throw UsageError("unknown bijection: " + name +
                   " (expected glaisher, glaisher-inv, c2b, b2c, d-reduce, d-lift)");
}

int cmd_map(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.bijection.empty()) throw UsageError("--bijection is required");
  const MapSpec spec = map_spec(cfg.bijection);
  if (cfg.bijection == "d-lift" && cfg.bit != 0 && cfg.bit != 1)
    throw UsageError("d-lift needs --bit 0 or --bit 1");

  const Partition input =
      parse_partition(cfg.partition, spec.source == PartitionClassId::D);
  if (!is_in_class(input, spec.source)) {
    err << "error: " << render(input) << " is not in class "
        << class_label(spec.source) << '\n';
    return kCheckFailed;
  }

  json record{{"bijection", cfg.bijection}, {"input", cfg.partition}};
  std::string plain;
  if (cfg.bijection == "d-reduce") {
    const Reduction r = d_reduce(input);
    plain = render(r.reduced) + " (case " + std::to_string(r.tag.case_number()) +
            ", bit " + std::to_string(r.tag.bit()) + ")";
    record["output"] = render(r.reduced);
    record["case"] = r.tag.case_number();
    record["bit"] = r.tag.bit();
  } else {
    Partition image;
    if (cfg.bijection == "glaisher") image = glaisher_to_odd(input);
    else if (cfg.bijection == "glaisher-inv") image = glaisher_to_distinct(input);
    else if (cfg.bijection == "c2b") image = c_to_b(input);
    else if (cfg.bijection == "b2c") image = b_to_c(input);
    else image = d_lift(input, cfg.bit);
    plain = render_for_class(image, spec.target);
    record["output"] = plain;
  }
  if (cfg.format == OutputFormat::json_lines)
    out << record.dump() << '\n';
  else
    out << plain << '\n';
  return kOk;
}

// ---- verify --------------------------------------------------------------

std::vector<VerificationReport> run_checks(const RunConfig& cfg) {
  const std::string& name = cfg.identity;
  std::vector<std::function<VerificationReport()>> jobs;
  if (auto id = parse_identity_name(name)) {
    jobs.push_back([id, &cfg] { return verify_identity(*id, cfg.order); });
  } else if (name == "euler_expansion") {
    const std::uint32_t lo = cfg.coefficient_c == 0 ? 1 : cfg.coefficient_c;
    const std::uint32_t hi = cfg.coefficient_c == 0 ? 5 : cfg.coefficient_c;
    for (std::uint32_t c = lo; c <= hi; ++c)
      jobs.push_back([c, &cfg] { return euler_expansion_check(c, cfg.order); });
  } else if (auto suite = parse_bijection_suite(name)) {
    jobs.push_back([suite, &cfg] { return verify_bijection_suite(*suite, cfg.max_weight); });
  } else if (name == "all") {
    for (IdentityName id : kAllIdentities)
      jobs.push_back([id, &cfg] { return verify_identity(id, cfg.order); });
    for (std::uint32_t c = 1; c <= 5; ++c)
      jobs.push_back([c, &cfg] { return euler_expansion_check(c, cfg.order); });
    for (BijectionSuite s : kAllBijectionSuites)
      jobs.push_back([s, &cfg] { return verify_bijection_suite(s, cfg.max_weight); });
  } else {
    throw UsageError("unknown identity: " + name);
  }

  std::vector<VerificationReport> reports;
  if (cfg.parallel) {
    std::vector<std::future<VerificationReport>> pending;
    for (auto& job : jobs) pending.push_back(std::async(std::launch::async, job));
    for (auto& f : pending) reports.push_back(f.get());
  } else {
    for (auto& job : jobs) reports.push_back(job());
  }
  return reports;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.identity.empty()) throw UsageError("--identity is required");
  bool all_passed = true;
  for (const VerificationReport& r : run_checks(cfg)) {
    all_passed = all_passed && r.passed();
    if (cfg.format == OutputFormat::json_lines) {
      json record{{"identity", r.name}, {"order", r.order}, {"pass", r.passed()}};
      if (!r.passed()) {
        record["exponent"] = r.mismatch->exponent;
        record["lhs"] = r.mismatch->lhs.get_str();
        record["rhs"] = r.mismatch->rhs.get_str();
        record["detail"] = r.mismatch->detail;
      }
      if (cfg.timing)
        record["elapsed_us"] =
            std::chrono::duration_cast<std::chrono::microseconds>(r.elapsed).count();
      out << record.dump() << '\n';
    } else {
      out << summarize(r, cfg.timing) << '\n';
    }
  }
  return all_passed ? kOk : kCheckFailed;
}

// ---- series --------------------------------------------------------------

int cmd_series(const RunConfig& cfg, std::ostream& out) {
  const int chosen = !cfg.class_tag.empty() + !cfg.form.empty() + !cfg.stage.empty();
  if (chosen != 1) throw UsageError("series needs exactly one of --class, --form, --stage");
  TruncatedSeries s(0);
  if (!cfg.class_tag.empty()) {
    s = gf_class(require_class(cfg.class_tag), cfg.order);
  } else if (!cfg.form.empty()) {
    auto form = parse_c_form(cfg.form);
    if (!form) throw UsageError("unknown form: " + cfg.form);
    s = gf_c_variant(*form, cfg.order, !cfg.constant_free);
  } else {
    auto stage = parse_chain_stage(cfg.stage);
    if (!stage) throw UsageError("unknown stage: " + cfg.stage);
    s = gf_c_chain_stage(*stage, cfg.order);
  }
  if (cfg.format == OutputFormat::json_lines) {
    for (std::size_t j = 0; j <= s.order(); ++j)
      out << json{{"n", j}, {"coefficient", s[j].get_str()}}.dump() << '\n';
  } else {
    write_series(out, s);
  }
  return kOk;
}

// ---- selftest ------------------------------------------------------------

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  bool all_passed = true;
  for (const CriterionResult& r : run_acceptance(cfg.parallel)) {
    all_passed = all_passed && r.passed;
    if (cfg.format == OutputFormat::json_lines) {
      json record{{"criterion", r.name}, {"pass", r.passed}, {"detail", r.detail}};
      if (cfg.timing) record["elapsed_ms"] = r.elapsed.count();
      out << record.dump() << '\n';
    } else {
      out << format_criterion(r, cfg.timing) << '\n';
    }
  }
  return all_passed ? kOk : kCheckFailed;
}

}  // namespace

NRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  NRange r;
  if (dots == std::string::npos) {
    r.first = r.last = parse_u32(text);
  } else {
    r.first = parse_u32(std::string_view(text).substr(0, dots));
    r.last = parse_u32(std::string_view(text).substr(dots + 2));
  }
  if (r.first > r.last) throw std::invalid_argument("empty range: " + text);
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  std::string format = "plain";

  CLI::App app{"Partition identity laboratory: classes A, B, C, D"};
  app.name("eulerlab");
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "plain or json-lines")
        ->check(CLI::IsMember({"plain", "json-lines"}));
  };

  auto* count = app.add_subcommand("count", "count class members of weight n");
  count->add_option("--class", cfg.class_tag, "A, B, C or D")->required();
  count->add_option("--n", cfg.n_range, "n or a..b")->required();
  count->add_option("--method", cfg.method,
                    "enumeration, dynamic-program or series-coefficient");
  count->add_option("--cutoff", cfg.cutoff, "enumeration cutoff");
  add_format(count);

  auto* enumerate = app.add_subcommand("enumerate", "list class members of weight n");
  enumerate->add_option("--class", cfg.class_tag, "A, B, C or D")->required();
  enumerate->add_option("--n", cfg.n_range, "n or a..b")->required();
  enumerate->add_option("--cutoff", cfg.cutoff, "enumeration cutoff");
  add_format(enumerate);

  auto* map = app.add_subcommand("map", "apply a bijection to one partition");
  map->add_option("--bijection", cfg.bijection,
                  "glaisher, glaisher-inv, c2b, b2c, d-reduce, d-lift")
      ->required();
  map->add_option("--bit", cfg.bit, "lift branch for d-lift");
  map->add_option("partition", cfg.partition, "parts joined by '+'")->required();
  add_format(map);

  auto* verify = app.add_subcommand("verify", "check an identity or bijection suite");
  verify->add_option("--identity", cfg.identity,
                     "euler_AB, shift_BC, chain_C, half_D, thm_all, "
                     "euler_expansion, glaisher, c_b, d_a, all")
      ->required();
  verify->add_option("--order", cfg.order, "truncation order");
  verify->add_option("--c", cfg.coefficient_c, "t = q^c for euler_expansion");
  verify->add_option("--max-weight", cfg.max_weight, "weight bound for bijection suites");
  verify->add_flag("--timing", cfg.timing, "append elapsed time");
  verify->add_flag("--parallel", cfg.parallel, "run checks on separate threads");
  add_format(verify);

  auto* series = app.add_subcommand("series", "dump a truncated series");
  series->add_option("--class", cfg.class_tag, "generating function of a class");
  series->add_option("--form", cfg.form,
                     "sum_over_largest, even_poch_ratio, odd_poch_ratio");
  series->add_option("--stage", cfg.stage,
                     "factored, double_sum, split_sum, bracket_reciprocals, final");
  series->add_option("--order", cfg.order, "truncation order");
  series->add_flag("--constant-free", cfg.constant_free, "start C forms at n = 1");
  add_format(series);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_flag("--timing", cfg.timing, "append elapsed time");
  selftest->add_flag("--parallel", cfg.parallel, "run criteria on separate threads");
  add_format(selftest);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  cfg.format = format == "json-lines" ? OutputFormat::json_lines : OutputFormat::plain;
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    validate(cfg);
    if (cfg.subcommand == "count") return cmd_count(cfg, out);
    if (cfg.subcommand == "enumerate") return cmd_enumerate(cfg, out);
    if (cfg.subcommand == "map") return cmd_map(cfg, out, err);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
    if (cfg.subcommand == "series") return cmd_series(cfg, out);
    if (cfg.subcommand == "selftest") return cmd_selftest(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const eulerlab::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kUsage;
  } catch (const ClassViolation& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace eulerlab::cli
