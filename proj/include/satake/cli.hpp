#ifndef SATAKE_CLI_HPP
#define SATAKE_CLI_HPP

// Subcommand dispatch for the `satake` binary. Argument parsing lives in
// tools/; everything here works on an already-populated RunConfig so that it
// can be driven directly from tests.
//
// Exit codes: 0 when every asserted inequality held, 1 when one failed (the
// counterexample is part of the document), 2 for invalid options.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "satake/bootstrap.hpp"
#include "satake/constants.hpp"
#include "satake/dirichlet.hpp"
#include "satake/majorization.hpp"
#include "satake/params.hpp"
#include "satake/serialize.hpp"
#include "satake/suite.hpp"
#include "satake/symfunc.hpp"

namespace satake::cli {

enum class Command { constants, verify_bound, cauchy, bootstrap, lrs, sample, report };
enum class Format { json, csv };

struct RunConfig {
  Command command = Command::report;
  std::uint64_t seed = 7;
  Format format = Format::json;

  int n = 4;
  std::int64_t trials = 10000;
  std::optional<std::int64_t> report_trials;
  int r = 6;
  double eps = 0.05;
  std::int64_t xmax = 100000;
  double max_modulus = 100.0;
  int start_j = 1;
  bool exact = false;
  std::optional<std::string> replay;

  std::string series;
  std::int64_t p_max = 10000;
  double default_value = 1.0;
  std::optional<double> tail_value = 1.0;
  std::string iters = "auto";
  double conductor = 100.0;
  std::optional<double> A;
  std::optional<double> abscissa;

  std::int64_t prime_norm = 4;
  std::optional<std::string> values;

  bool timing = false;
};

struct RunResult {
  int exit_code = 0;
  std::string document;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const char* command_name(Command c)
{
  switch (c) {
    case Command::constants: return "constants";
    case Command::verify_bound: return "verify-bound";
    case Command::cauchy: return "cauchy";
    case Command::bootstrap: return "bootstrap";
    case Command::lrs: return "lrs";
    case Command::sample: return "sample";
    case Command::report: return "report";
  }
  return "?";
}

namespace detail {

inline void require(bool ok, const std::string& message)
{
  if (!ok)
    throw UsageError(message);
}

/// "1.5,0.5" or "1:1,0:-1" (re:im) into complex values.
inline std::vector<Complex> parse_values(const std::string& text)
{
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos)
        out.emplace_back(std::stod(item), 0.0);
      else
        out.emplace_back(std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
    } catch (const std::logic_error&) {
      throw UsageError("--values: malformed entry '" + item + "'");
    }
  }
  return out;
}

inline std::string csv_cell(const nlohmann::json& v)
{
  std::string text = v.is_string() ? v.get<std::string>() : v.dump();
  if (text.find_first_of(",\"\n") == std::string::npos)
    return text;
  std::string quoted = "\"";
  for (char c : text)
    quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

/// Tables become header + rows; flat documents become key,value lines.
inline std::string to_csv(const nlohmann::json& doc, const std::string& table_key)
{
  std::ostringstream os;
  if (!table_key.empty() && doc.contains(table_key) && doc[table_key].is_array()) {
    const auto& rows = doc[table_key];
    if (rows.empty())
      return "";
    std::vector<std::string> header;
    for (const auto& [k, v] : rows.front().items())
      if (!v.is_object() && !v.is_array())
        header.push_back(k);
    std::stable_partition(header.begin(), header.end(), [](const std::string& h) { return h == "id"; });
    for (std::size_t i = 0; i < header.size(); ++i)
      os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << csv_cell(row.value(header[i], nlohmann::json()));
      os << "\n";
    }
    return os.str();
  }
  os << "key,value\n";
  for (const auto& [k, v] : doc.items())
    os << k << "," << csv_cell(v) << "\n";
  return os.str();
}

inline RunResult finish(const RunConfig& cfg, const nlohmann::json& doc, int exit_code, const std::string& table_key = "")
{
  RunResult out;
  out.exit_code = exit_code;
  out.document = cfg.format == Format::json ? doc.dump(2) + "\n" : to_csv(doc, table_key);
  return out;
}

}  // namespace detail

/// Checks option ranges against the preconditions of the operation each subcommand runs.
inline void validate(const RunConfig& cfg)
{
  using detail::require;
  switch (cfg.command) {
    case Command::constants:
      require(cfg.n >= 2 && cfg.n <= kMaxRank, "--n must lie in [2, " + std::to_string(kMaxRank) + "]");
      break;
    case Command::verify_bound:
      if (cfg.replay)
        break;
      require(cfg.n >= 2 && cfg.n <= kMaxRank, "--n must lie in [2, " + std::to_string(kMaxRank) + "]");
      require(cfg.trials >= 0, "--trials must be >= 0");
      require(cfg.max_modulus >= 1.0, "--max-modulus must be >= 1");
      require(cfg.start_j == 1 || cfg.start_j == 2, "--start-j must be 1 or 2");
      break;
    case Command::cauchy:
      require(cfg.n >= 1 && cfg.n <= 8, "--n must lie in [1, 8]");
      require(cfg.r >= 0 && cfg.r <= 24, "--r must lie in [0, 24]");
      require(cfg.max_modulus >= 1.0, "--max-modulus must be >= 1");
      break;
    case Command::bootstrap:
      require(cfg.eps > 0.0, "--eps must be positive");
      require(cfg.xmax >= 4, "--xmax must be >= 4");
      require(cfg.p_max >= 2, "--p-max must be >= 2");
      require(cfg.conductor > 1.0, "--conductor must exceed 1");
      require(!cfg.A || *cfg.A > 0.0, "--A must be positive");
      if (cfg.iters != "auto") {
        std::size_t used = 0;
        int k = -1;
        try {
          k = std::stoi(cfg.iters, &used);
        } catch (const std::logic_error&) {
        }
        require(used == cfg.iters.size() && k >= 0, "--iters must be 'auto' or a nonnegative integer");
      }
      break;
    case Command::lrs:
      require(cfg.prime_norm >= 2, "--np must be >= 2");
      require(cfg.values || (cfg.n >= 1 && cfg.n <= 64), "--n must lie in [1, 64]");
      require(cfg.max_modulus >= 1.0, "--max-modulus must be >= 1");
      break;
    case Command::sample:
      require(cfg.n >= 1 && cfg.n <= 64, "--n must lie in [1, 64]");
      require(cfg.max_modulus >= 1.0, "--max-modulus must be >= 1");
      break;
    case Command::report:
      require(!cfg.report_trials || *cfg.report_trials >= 0, "--trials must be >= 0");
      break;
  }
}

inline RunResult run_constants(const RunConfig& cfg)
{
  nlohmann::json doc = to_json(constant_table(cfg.n));
  doc["check"] = "Constants";
  return detail::finish(cfg, doc, 0);
}

inline nlohmann::json replay_document(const nlohmann::json& record, int start_j, bool& violated)
{
  const nlohmann::json& cls = record.contains("counterexample") ? record.at("counterexample").at("class")
                              : record.contains("class")        ? record.at("class")
                                                                  : record;
  const UnitaryClass u = sort_by_modulus(unitary_class_from_json(cls));
  const ConstantTable& table = constant_table(static_cast<int>(u.rank()));
  const double lhs = max_modulus_sq(u.params());
  const double rhs = trace_bound(u, table, start_j);
  violated = lhs > rhs + 1e-9;
  return {{"check", "TraceMajorization"}, {"replay", true},        {"start_j", start_j},
          {"max_modulus_sq", lhs},        {"bound", rhs},          {"violated", violated},
          {"class", to_json(u)}};
}

inline RunResult run_verify_bound(const RunConfig& cfg)
{
  if (cfg.replay) {
    std::ifstream in(*cfg.replay);
    if (!in)
      throw UsageError("--replay: cannot open " + *cfg.replay);
    nlohmann::json record;
    try {
      in >> record;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("--replay: malformed JSON: ") + e.what());
    }
    int start_j = cfg.start_j;
    if (record.contains("counterexample"))
      start_j = record.at("counterexample").value("start_j", start_j);
    else
      start_j = record.value("start_j", start_j);
    bool violated = false;
    const auto doc = replay_document(record, start_j, violated);
    return detail::finish(cfg, doc, violated ? 1 : 0);
  }

  const ConstantTable& table = constant_table(cfg.n);
  std::int64_t failures = 0;
  double worst_ratio = std::numeric_limits<double>::infinity();
  std::map<std::string, std::int64_t> histogram;
  nlohmann::json counterexample;
  for (std::int64_t t = 0; t < cfg.trials; ++t) {
    const UnitaryClass u = sort_by_modulus(
        sample_unitary_class(static_cast<std::size_t>(cfg.n), cfg.max_modulus, derive_seed(cfg.seed, static_cast<std::uint64_t>(t))));
    const double lhs = max_modulus_sq(u.params());
    const double rhs = trace_bound(u, table, cfg.start_j);
    worst_ratio = std::min(worst_ratio, rhs / lhs);
    const CaseReport report = classify_case(u, table);
    ++histogram[report.tag == ProofCase::case_i ? "case_i_j" + std::to_string(report.j) : "case_ii"];
    if (lhs > rhs + 1e-9) {
      if (failures == 0)
        counterexample = {{"trial", t},
                          {"start_j", cfg.start_j},
                          {"max_modulus_sq", lhs},
                          {"bound", rhs},
                          {"class", to_json(u)}};
      ++failures;
    }
  }
  nlohmann::json doc{{"check", "TraceMajorization"},
                     {"n", cfg.n},
                     {"start_j", cfg.start_j},
                     {"seed", cfg.seed},
                     {"max_modulus", cfg.max_modulus},
                     {"trials", cfg.trials},
                     {"failures", failures},
                     {"worst_ratio", std::isfinite(worst_ratio) ? nlohmann::json(worst_ratio) : nlohmann::json(nullptr)},
                     {"case_histogram", histogram}};
  if (failures > 0)
    doc["counterexample"] = counterexample;
  return detail::finish(cfg, doc, failures == 0 ? 0 : 1);
}

inline RunResult run_cauchy(const RunConfig& cfg)
{
  nlohmann::json doc{{"check", "Cauchy"}, {"n", cfg.n}, {"r", cfg.r}, {"seed", cfg.seed}, {"exact", cfg.exact}};
  bool equal = false;
  if (cfg.exact) {
    SplitMix64 rng(derive_seed(cfg.seed, 1));
    const auto a = suite::detail::random_rational_point(rng, static_cast<std::size_t>(cfg.n));
    const auto b = suite::detail::random_rational_point(rng, static_cast<std::size_t>(cfg.n));
    const GaussianRational lhs = rankin_coefficient<GaussianRational>(a, b, cfg.r);
    const GaussianRational rhs = euler_expand<GaussianRational>(a, b, cfg.r)[static_cast<std::size_t>(cfg.r)];
    const GaussianRational diff = lhs - rhs;
    auto exact_json = [](const GaussianRational& z) {
      return nlohmann::json{{"re", fraction_string(z.re)}, {"im", fraction_string(z.im)}};
    };
    nlohmann::json pa = nlohmann::json::array(), pb = nlohmann::json::array();
    for (const auto& z : a)
      pa.push_back(exact_json(z));
    for (const auto& z : b)
      pb.push_back(exact_json(z));
    doc["params1"] = pa;
    doc["params2"] = pb;
    doc["schur_sum"] = exact_json(lhs);
    doc["euler_coefficient"] = exact_json(rhs);
    doc["difference"] = exact_json(diff);
    equal = diff.is_zero();
  } else {
    const auto a = sample_unitary_class(static_cast<std::size_t>(cfg.n), cfg.max_modulus, derive_seed(cfg.seed, 1)).params();
    const auto b = sample_unitary_class(static_cast<std::size_t>(cfg.n), cfg.max_modulus, derive_seed(cfg.seed, 2)).params();
    const Complex lhs = rankin_coefficient(a, b, cfg.r);
    const Complex rhs = euler_expand(a, b, cfg.r)[static_cast<std::size_t>(cfg.r)];
    auto cjson = [](Complex z) { return nlohmann::json{z.real(), z.imag()}; };
    doc["params1"] = to_json(a);
    doc["params2"] = to_json(b);
    doc["schur_sum"] = cjson(lhs);
    doc["euler_coefficient"] = cjson(rhs);
    doc["difference"] = std::abs(lhs - rhs);
    const double rel = std::abs(lhs - rhs) / std::max(std::abs(rhs), std::numeric_limits<double>::min());
    doc["relative_difference"] = rel;
    if (cfg.n == 1)
      doc["closed_form"] = cjson(std::pow(a[0] * b[0], cfg.r));
    equal = rel <= 1e-8;
  }
  doc["equal"] = equal;
  return detail::finish(cfg, doc, equal ? 0 : 1);
}

inline RunResult run_bootstrap(const RunConfig& cfg)
{
  const CMSeries series = parse_series_literal(cfg.series, cfg.p_max, cfg.default_value, cfg.tail_value);
  BootstrapOptions opt;
  opt.x_max = cfg.xmax;
  opt.eps = cfg.eps;
  opt.conductor = cfg.conductor;
  opt.A = cfg.A;
  opt.abscissa = cfg.abscissa;
  if (cfg.iters != "auto")
    opt.iterations = std::stoi(cfg.iters);
  opt.regression_lo = std::min<std::int64_t>(100, cfg.xmax / 10);
  opt.regression_hi = cfg.xmax;

  nlohmann::json doc{{"check", "Bootstrap"}, {"series", cfg.series}, {"xmax", cfg.xmax}, {"eps", cfg.eps}};
  BootstrapRun run;
  try {
    run = bootstrap_run(series, opt);
  } catch (const PremiseViolation& e) {
    doc["premise_violation"] = {{"X", e.witness()}, {"partial_sum", e.partial_sum()}, {"bound", e.bound()}};
    return detail::finish(cfg, doc, 1);
  }
  doc["abscissa"] = run.abscissa;
  doc["regression_slope"] = run.regression_slope;
  doc["conductor"] = run.conductor;
  doc["A"] = run.A;
  doc["iterations"] = nlohmann::json::array();
  for (const BootstrapIteration& it : run.steps)
    doc["iterations"].push_back({{"iter", it.iter},
                                 {"sigma", it.sigma},
                                 {"exponent", it.exponent},
                                 {"constant", it.constant},
                                 {"kappa", it.kappa},
                                 {"measured_constant", it.measured_constant},
                                 {"measured_exponent", it.measured_exponent},
                                 {"certificate_holds", it.certificate_holds && it.chain_holds}});
  doc["final_exponent"] = run.final_exponent();
  const bool ok = run.all_certificates_hold();
  return detail::finish(cfg, doc, ok ? 0 : 1, "iterations");
}

inline RunResult run_lrs(const RunConfig& cfg)
{
  const SpectralParams params =
      cfg.values ? SpectralParams(detail::parse_values(*cfg.values), cfg.prime_norm)
                 : sample_unitary_class(static_cast<std::size_t>(cfg.n), cfg.max_modulus, cfg.seed).params().with_prime_norm(cfg.prime_norm);
  const int n = static_cast<int>(params.rank());
  const bool holds = lrs_check(params);
  nlohmann::json doc{{"check", "LRS"},
                     {"n", n},
                     {"prime_norm", cfg.prime_norm},
                     {"delta", lrs_delta(n)},
                     {"threshold", lrs_threshold(n, cfg.prime_norm)},
                     {"max_modulus", std::sqrt(max_modulus_sq(params))},
                     {"holds", holds},
                     {"params", to_json(params)}};
  return detail::finish(cfg, doc, holds ? 0 : 1);
}

inline RunResult run_sample(const RunConfig& cfg)
{
  const UnitaryClass u = sample_unitary_class(static_cast<std::size_t>(cfg.n), cfg.max_modulus, cfg.seed);
  nlohmann::json doc = to_json(u);
  doc["check"] = "Sample";
  doc["seed"] = cfg.seed;
  doc["pairing_verified"] = check_unitary_pairing(u.params(), 1e-9).has_value();
  return detail::finish(cfg, doc, 0);
}

inline RunResult run_report(const RunConfig& cfg)
{
  suite::Config sc;
  sc.seed = cfg.seed;
  sc.trials = cfg.report_trials;
  const auto rows = suite::run(sc);
  nlohmann::json out = nlohmann::json::array();
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& row : rows) {
    nlohmann::json j{{"id", row.id},
                     {"check", row.check},
                     {"title", row.title},
                     {"status", suite::to_string(row.status)},
                     {"worst_margin", row.worst_margin},
                     {"detail", row.detail}};
    if (cfg.timing)
      j["runtime_ms"] = row.runtime_ms;
    out.push_back(std::move(j));
    passed += row.status == suite::Status::pass;
    failed += row.status == suite::Status::fail;
    skipped += row.status == suite::Status::skipped;
  }
  nlohmann::json doc{{"check", "Report"}, {"seed", cfg.seed}, {"rows", out}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}};
  return detail::finish(cfg, doc, failed == 0 ? 0 : 1, "rows");
}

/// Validates, dispatches, and renders the report document.
inline RunResult run(const RunConfig& cfg)
{
  try {
    validate(cfg);
    switch (cfg.command) {
      case Command::constants: return run_constants(cfg);
      case Command::verify_bound: return run_verify_bound(cfg);
      case Command::cauchy: return run_cauchy(cfg);
      case Command::bootstrap: return run_bootstrap(cfg);
      case Command::lrs: return run_lrs(cfg);
      case Command::sample: return run_sample(cfg);
      case Command::report: return run_report(cfg);
    }
  } catch (const UsageError& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
  return {2, "error: unknown command\n"};
}

}  // namespace satake::cli

#endif  // SATAKE_CLI_HPP
