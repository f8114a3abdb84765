// orderk -- command-line front end for order-k distribution computations.
// Subcommands: pmf, mode, scan, verify {identities, positivity, family,
// limit}. Output formats: text (default), csv, json. Exit codes: 0 pass,
// 1 usage/internal error, 2 mathematical violation found.
//
// Output is deterministic: no timestamps, fixed key order, fixed row order
// independent of --jobs. Exact rationals are printed as "p/q" strings.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orderk/orderk.hpp"

using nlohmann::ordered_json;
using namespace orderk;

namespace {

constexpr const char* kFormatVersion = "1";
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

enum class Format { Text, Csv, Json };

struct OutputOptions {
  std::string format = "text";
  std::string out_path;
  bool quiet = false;

  Format fmt() const {
    if (format == "csv") return Format::Csv;
    if (format == "json") return Format::Json;
    return Format::Text;
  }
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format: text, csv, json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--out", opts.out_path,
                  "Write output to a file instead of stdout");
  cmd->add_flag("--quiet", opts.quiet, "Suppress the echo/header comment lines");
}

std::string fmt_double(double v, int significant = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  return buf;
}

// Scaled float as a decimal string, usable far outside the double range.
std::string sf_to_string(const ScaledFloat& v) {
  if (v.is_zero()) return "0";
  double d = v.to_double();
  if (std::isfinite(d) && std::fabs(d) >= 1e-280 && std::fabs(d) <= 1e280)
    return fmt_double(d, 12);
  double l10 = v.log() / std::log(10.0);
  double e = std::floor(l10);
  double mant = std::pow(10.0, l10 - e);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9fe%+lld", mant,
                static_cast<long long>(e));
  return buf;
}

const char* delta_sign_str(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

Rational parse_rational_flag(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError(what, e.what());
  }
}

std::pair<long long, long long> parse_range_flag(const std::string& text,
                                                 const char* what) {
  std::size_t sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      long long v = std::stoll(text);
      return {v, v};
    }
    long long lo = std::stoll(text.substr(0, sep));
    long long hi = std::stoll(text.substr(sep + 2));
    if (lo > hi) throw std::invalid_argument("empty range");
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError(what, "expected N or LO..HI with LO <= HI");
  }
}

struct Writer {
  const OutputOptions& opts;
  std::string echo;  // canonical command line
  std::ostringstream body;

  Writer(const OutputOptions& o, std::string echo_line)
      : opts(o), echo(std::move(echo_line)) {}

  void header_comments() {
    if (opts.quiet) return;
    body << "# format-version: " << kFormatVersion << "\n";
    body << "# command: " << echo << "\n";
  }

  int flush() {
    if (opts.out_path.empty()) {
      std::cout << body.str();
      return kExitOk;
    }
    std::ofstream f(opts.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "orderk: cannot open output file: " << opts.out_path
                << "\n";
      return kExitError;
    }
    f << body.str();
    return kExitOk;
  }

  void json_envelope(const std::string& command, ordered_json params,
                     ordered_json payload) {
    ordered_json doc;
    doc["format_version"] = kFormatVersion;
    doc["command"] = command;
    doc["command_line"] = echo;
    doc["params"] = std::move(params);
    doc["payload"] = std::move(payload);
    body << doc.dump(2) << "\n";
  }
};

ordered_json mode_report_json(const ModeReport& r) {
  ordered_json j;
  j["k"] = r.params.k();
  j["lambda"] = r.params.lambda_string();
  j["backend"] = to_cstring(r.backend);
  j["modes"] = r.modes;
  j["thm21_lower"] = r.thm21_lower;
  j["thm21_upper"] = r.thm21_upper;
  j["luo_lower"] = r.luo_lower;
  if (r.conjecture)
    j["conjecture"] = *r.conjecture;
  else
    j["conjecture"] = nullptr;
  j["verdict"] = to_cstring(r.verdict);
  if (r.witness)
    j["witness"] = ordered_json::array({r.witness->first, r.witness->second});
  else
    j["witness"] = nullptr;
  j["near_tie"] = r.near_tie;
  return j;
}

std::string modes_brackets(const std::vector<long long>& modes) {
  std::string s = "[";
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(modes[i]);
  }
  return s + "]";
}

void mode_report_text_line(std::ostream& os, const ModeReport& r) {
  os << "k=" << r.params.k() << " lambda=" << r.params.lambda_string()
     << " modes=" << modes_brackets(r.modes) << " thm21=[" << r.thm21_lower
     << "," << r.thm21_upper << "]"
     << " luo=" << fmt_double(r.luo_lower);
  if (r.conjecture) os << " conjecture=" << *r.conjecture;
  os << " verdict=" << to_cstring(r.verdict);
  if (r.witness)
    os << " witness=(" << r.witness->first << "," << r.witness->second << ")";
  if (r.near_tie) os << " near_tie=1";
  os << " backend=" << to_cstring(r.backend) << "\n";
}

const char* kModeCsvHeader =
    "k,lambda,backend,mode_count,mode_min,mode_max,thm21_lower,thm21_upper,"
    "luo_lower,conjecture,verdict,witness_x,witness_xprime,near_tie\n";

void mode_report_csv_line(std::ostream& os, const ModeReport& r) {
  os << r.params.k() << "," << r.params.lambda_string() << ","
     << to_cstring(r.backend) << "," << r.modes.size() << ","
     << r.modes.front() << "," << r.modes.back() << "," << r.thm21_lower
     << "," << r.thm21_upper << "," << fmt_double(r.luo_lower) << ",";
  if (r.conjecture) os << *r.conjecture;
  os << "," << to_cstring(r.verdict) << ",";
  if (r.witness) os << r.witness->first;
  os << ",";
  if (r.witness) os << r.witness->second;
  os << "," << (r.near_tie ? 1 : 0) << "\n";
}

ordered_json identity_report_json(const IdentityReport& r) {
  ordered_json j;
  j["id"] = r.id;
  j["x_lo"] = r.x_lo;
  j["x_hi"] = r.x_hi;
  j["relation"] = to_cstring(r.relation);
  j["lhs"] = r.lhs.to_string();
  j["rhs"] = r.rhs.to_string();
  j["pass"] = r.pass;
  return j;
}

void identity_report_text_line(std::ostream& os, const IdentityReport& r) {
  os << r.id << " x=" << r.x_lo;
  if (r.x_hi != r.x_lo) os << ".." << r.x_hi;
  os << " " << r.lhs.to_string() << " " << to_cstring(r.relation) << " "
     << r.rhs.to_string() << " -> " << (r.pass ? "pass" : "FAIL") << "\n";
}

void identity_report_csv_line(std::ostream& os, const IdentityReport& r) {
  os << r.id << "," << r.x_lo << "," << r.x_hi << ","
     << to_cstring(r.relation) << "," << r.lhs.to_string() << ","
     << r.rhs.to_string() << "," << (r.pass ? 1 : 0) << "\n";
}

// Sweeps one recurrence form over [x_lo, x_hi] and aggregates: the report
// keeps the first failing point's two sides (or the last point's when all
// pass), with the x range widened to the sweep.
IdentityReport sweep_recurrence(ExactPmfTable& t, long long x_lo,
                                long long x_hi, bool p_form) {
  std::optional<IdentityReport> agg;
  for (long long x = x_lo; x <= x_hi; ++x) {
    IdentityReport r = p_form ? check_delta_recurrence_p_form(t, x)
                              : check_delta_recurrence_d_form(t, x);
    bool failed = !r.pass;
    agg = std::move(r);
    if (failed) break;  // first failure wins
  }
  agg->x_lo = x_lo;
  agg->x_hi = x_hi;
  return *agg;
}

// ---------------------------------------------------------------- pmf ----

struct PmfArgs {
  int k = 1;
  std::string lambda;
  long long x_max = -1;
  std::string backend = "exact";
  OutputOptions out;
};

int run_pmf(const PmfArgs& args) {
  Rational lambda = parse_rational_flag(args.lambda, "--lambda");
  Params params = Params::exact(args.k, lambda);
  Backend backend = args.backend == "float" ? Backend::Float : Backend::Exact;
  long long x_max = args.x_max >= 0 ? args.x_max : thm21_bounds(params).second;
  long long cap = backend == Backend::Exact ? 20000 : 10000000;
  if (x_max > cap)
    throw CLI::ValidationError("--x-max", "table too large for this backend");

  std::ostringstream echo;
  echo << "orderk pmf -k " << args.k << " -l " << params.lambda_string()
       << " --x-max " << x_max << " --backend " << to_cstring(backend)
       << " --format " << args.out.format;
  Writer w(args.out, echo.str());

  ScaledPmfTable table = pmf_table(params, x_max, backend);
  bool warn =
      backend == Backend::Float && table.floating().precision_warning();

  auto q_string = [&](long long x) {
    if (backend == Backend::Exact)
      return table.exact().q_rational(x).to_string();
    return sf_to_string(table.floating().q(x));
  };

  switch (args.out.fmt()) {
    case Format::Text: {
      w.header_comments();
      if (warn)
        w.body << "# warning: precision loss in the float recurrence\n";
      w.body << "x  q  p  delta\n";
      for (long long x = 0; x <= x_max; ++x)
        w.body << x << "  " << q_string(x) << "  "
               << fmt_double(table.p_value(x)) << "  "
               << delta_sign_str(table.delta_sign(x)) << "\n";
      break;
    }
    case Format::Csv: {
      w.header_comments();
      w.body << "x,q,p,delta_sign\n";
      for (long long x = 0; x <= x_max; ++x)
        w.body << x << "," << q_string(x) << ","
               << fmt_double(table.p_value(x)) << ","
               << delta_sign_str(table.delta_sign(x)) << "\n";
      break;
    }
    case Format::Json: {
      ordered_json params_j{{"k", args.k},
                            {"lambda", params.lambda_string()},
                            {"backend", to_cstring(backend)},
                            {"x_max", x_max}};
      ordered_json rows = ordered_json::array();
      for (long long x = 0; x <= x_max; ++x)
        rows.push_back(
            ordered_json{{"x", x},
                         {"q", q_string(x)},
                         {"p", table.p_value(x)},
                         {"delta_sign", delta_sign_str(table.delta_sign(x))}});
      ordered_json payload{{"rows", std::move(rows)},
                           {"precision_warning", warn}};
      w.json_envelope("pmf", std::move(params_j), std::move(payload));
      break;
    }
  }
  return w.flush();
}

// --------------------------------------------------------------- mode ----

struct ModeArgs {
  int k = 1;
  std::string lambda;
  std::string backend = "exact";
  OutputOptions out;
};

int run_mode(const ModeArgs& args) {
  Rational lambda = parse_rational_flag(args.lambda, "--lambda");
  Params params = Params::exact(args.k, lambda);
  Backend backend = args.backend == "float" ? Backend::Float : Backend::Exact;

  std::ostringstream echo;
  echo << "orderk mode -k " << args.k << " -l " << params.lambda_string()
       << " --backend " << to_cstring(backend) << " --format "
       << args.out.format;
  Writer w(args.out, echo.str());

  ModeReport report = mode_set(params, backend);
  switch (args.out.fmt()) {
    case Format::Text:
      w.header_comments();
      mode_report_text_line(w.body, report);
      break;
    case Format::Csv:
      w.header_comments();
      w.body << kModeCsvHeader;
      mode_report_csv_line(w.body, report);
      break;
    case Format::Json: {
      ordered_json params_j{{"k", args.k},
                            {"lambda", params.lambda_string()},
                            {"backend", to_cstring(backend)}};
      w.json_envelope("mode", std::move(params_j),
                      ordered_json{{"report", mode_report_json(report)}});
      break;
    }
  }
  int rc = w.flush();
  if (rc != kExitOk) return rc;
  return report.verdict == ConjectureVerdict::Fails ? kExitViolation : kExitOk;
}

// --------------------------------------------------------------- scan ----

struct ScanArgs {
  std::string k_range;
  std::string l_range;
  int jobs = 1;
  OutputOptions out;
};

int run_scan(const ScanArgs& args) {
  auto [k_lo, k_hi] = parse_range_flag(args.k_range, "-k");
  auto [l_lo, l_hi] = parse_range_flag(args.l_range, "-l");
  if (k_lo < 1) throw CLI::ValidationError("-k", "k must be >= 1");
  if (l_lo < 1) throw CLI::ValidationError("-l", "lambda must be >= 1");
  if (args.jobs < 1) throw CLI::ValidationError("--jobs", "jobs must be >= 1");

  std::ostringstream echo;
  echo << "orderk scan -k " << k_lo << ".." << k_hi << " -l " << l_lo << ".."
       << l_hi << " --format " << args.out.format;
  Writer w(args.out, echo.str());

  auto reports = scan_modes(static_cast<int>(k_lo), static_cast<int>(k_hi),
                            l_lo, l_hi, args.jobs);
  long long violations = 0;
  for (const auto& r : reports)
    if (r.verdict == ConjectureVerdict::Fails) ++violations;

  switch (args.out.fmt()) {
    case Format::Text:
      w.header_comments();
      for (const auto& r : reports) mode_report_text_line(w.body, r);
      w.body << "violations: " << violations << "\n";
      break;
    case Format::Csv:
      w.header_comments();
      w.body << kModeCsvHeader;
      for (const auto& r : reports) mode_report_csv_line(w.body, r);
      break;
    case Format::Json: {
      ordered_json params_j{{"k_lo", k_lo},
                            {"k_hi", k_hi},
                            {"lambda_lo", l_lo},
                            {"lambda_hi", l_hi},
                            {"backend", "exact"}};
      ordered_json reports_j = ordered_json::array();
      for (const auto& r : reports) reports_j.push_back(mode_report_json(r));
      w.json_envelope("scan", std::move(params_j),
                      ordered_json{{"reports", std::move(reports_j)},
                                   {"violations", violations}});
      break;
    }
  }
  int rc = w.flush();
  if (rc != kExitOk) return rc;
  return violations > 0 ? kExitViolation : kExitOk;
}

// --------------------------------------------------- verify identities ----

struct IdentArgs {
  int k = 1;
  std::string lambda;
  long long x_max = -1;
  OutputOptions out;
};

int run_verify_identities(const IdentArgs& args) {
  Rational lambda = parse_rational_flag(args.lambda, "--lambda");
  Params params = Params::exact(args.k, lambda);
  long long x_max = args.x_max >= 0
                        ? args.x_max
                        : thm21_bounds(params).second + params.k() + 2;

  std::ostringstream echo;
  echo << "orderk verify identities -k " << args.k << " -l "
       << params.lambda_string() << " --x-max " << x_max << " --format "
       << args.out.format;
  Writer w(args.out, echo.str());

  ExactPmfTable table(params, x_max + 2);
  std::vector<IdentityReport> reports;
  std::vector<std::string> skipped;

  reports.push_back(sweep_recurrence(table, 0, x_max, true));
  reports.push_back(sweep_recurrence(table, 0, x_max, false));

  if ((args.k == 2 || args.k == 3) && params.lambda_is_integer()) {
    auto proof = check_mode_proof_identities(table);
    long long lam = lambda.numerator().to_long_long();
    if (args.k == 2 && lam < 3) {
      skipped.push_back("thm22-k2-e");
      skipped.push_back("thm22-k2-c");
    }
    if (args.k == 3 && lam < 2) {
      skipped.push_back("thm22-k3-f");
      skipped.push_back("thm22-k3-d");
      skipped.push_back("thm22-k3 sign route (dips at lambda = 1)");
    }
    for (auto& r : proof) reports.push_back(std::move(r));
  } else if (args.k == 2 || args.k == 3) {
    skipped.push_back("thm22-k" + std::to_string(args.k) +
                      " identities (integer lambda only)");
  }
  if ((args.k == 4 || args.k == 5) && params.lambda_is_integer()) {
    for (auto& r : check_mode_sign_patterns(table))
      reports.push_back(std::move(r));
  }
  if (lambda > Rational(1)) {
    reports.push_back(check_increase_range(table));
  } else {
    skipped.push_back("thm21-positivity (needs lambda > 1)");
  }

  long long failures = 0;
  for (const auto& r : reports) failures += !r.pass;

  switch (args.out.fmt()) {
    case Format::Text:
      w.header_comments();
      for (const auto& r : reports) identity_report_text_line(w.body, r);
      for (const auto& s : skipped) w.body << "skipped: " << s << "\n";
      w.body << "failures: " << failures << "\n";
      break;
    case Format::Csv:
      w.header_comments();
      w.body << "id,x_lo,x_hi,relation,lhs,rhs,pass\n";
      for (const auto& r : reports) identity_report_csv_line(w.body, r);
      break;
    case Format::Json: {
      ordered_json params_j{{"k", args.k},
                            {"lambda", params.lambda_string()},
                            {"backend", "exact"},
                            {"x_max", x_max}};
      ordered_json reports_j = ordered_json::array();
      for (const auto& r : reports) reports_j.push_back(identity_report_json(r));
      ordered_json payload{{"reports", std::move(reports_j)},
                           {"failures", failures},
                           {"skipped", skipped}};
      w.json_envelope("verify-identities", std::move(params_j),
                      std::move(payload));
      break;
    }
  }
  int rc = w.flush();
  if (rc != kExitOk) return rc;
  return failures > 0 ? kExitViolation : kExitOk;
}

// --------------------------------------------------- verify positivity ----

int run_verify_positivity(const IdentArgs& args) {
  Rational lambda = parse_rational_flag(args.lambda, "--lambda");
  Params params = Params::exact(args.k, lambda);

  std::ostringstream echo;
  echo << "orderk verify positivity -k " << args.k << " -l "
       << params.lambda_string() << " --format " << args.out.format;
  Writer w(args.out, echo.str());

  IdentityReport report = check_increase_range(params);
  switch (args.out.fmt()) {
    case Format::Text:
      w.header_comments();
      identity_report_text_line(w.body, report);
      break;
    case Format::Csv:
      w.header_comments();
      w.body << "id,x_lo,x_hi,relation,lhs,rhs,pass\n";
      identity_report_csv_line(w.body, report);
      break;
    case Format::Json: {
      ordered_json params_j{{"k", args.k},
                            {"lambda", params.lambda_string()},
                            {"backend", "exact"}};
      ordered_json payload{
          {"reports", ordered_json::array({identity_report_json(report)})},
          {"failures", report.pass ? 0 : 1},
          {"skipped", ordered_json::array()}};
      w.json_envelope("verify-positivity", std::move(params_j),
                      std::move(payload));
      break;
    }
  }
  int rc = w.flush();
  if (rc != kExitOk) return rc;
  return report.pass ? kExitOk : kExitViolation;
}

// ------------------------------------------------------- verify family ----

struct FamilyArgs {
  int k = 1;
  std::string p = "1/2";
  long long n_max = 40;
  int r = 3;
  long long y_max = -1;
  OutputOptions out;
};

struct FamilyRow {
  std::string id;
  long long n;
  Rational lhs, rhs;
  bool pass;
};

int run_verify_family(const FamilyArgs& args) {
  Rational p = parse_rational_flag(args.p, "-p");
  GeomOrderKParams geom(args.k, p);
  long long y_max = args.y_max >= 0
                        ? args.y_max
                        : static_cast<long long>(args.k) * args.r + 20;

  std::ostringstream echo;
  echo << "orderk verify family -k " << args.k << " -p " << p.to_string()
       << " --n-max " << args.n_max << " -r " << args.r << " --y-max "
       << y_max << " --format " << args.out.format;
  Writer w(args.out, echo.str());

  std::vector<FamilyRow> rows;
  bool half = p == Rational(BigInt(1), BigInt(2));
  auto pmf = geom_order_k_pmf_table(geom, args.n_max);
  if (half) {
    FibOrderK fib(args.k);
    for (long long n = args.k; n <= args.n_max; ++n) {
      Rational lhs = pmf[static_cast<std::size_t>(n)];
      Rational rhs(fib.at(n - args.k + 1),
                   BigInt::pow(BigInt(2), static_cast<unsigned long long>(n)));
      bool pass = lhs == rhs;
      rows.push_back({"fib-half-prob", n, std::move(lhs), std::move(rhs), pass});
    }
  }
  for (long long y = static_cast<long long>(args.k) * args.r; y <= y_max; ++y) {
    Rational conv = negbin_order_k_pmf_convolution(geom, args.r, y);
    Rational form = negbin_order_k_pmf_formula(geom, args.r, y);
    bool pass = conv == form;
    rows.push_back(
        {"negbin-conv-vs-formula", y, std::move(conv), std::move(form), pass});
  }

  long long failures = 0;
  for (const auto& r : rows) failures += !r.pass;

  switch (args.out.fmt()) {
    case Format::Text:
      w.header_comments();
      if (!half) w.body << "skipped: fib-half-prob (needs p = 1/2)\n";
      for (const auto& r : rows)
        w.body << r.id << " n=" << r.n << " " << r.lhs.to_string() << " eq "
               << r.rhs.to_string() << " -> " << (r.pass ? "pass" : "FAIL")
               << "\n";
      w.body << "failures: " << failures << "\n";
      break;
    case Format::Csv:
      w.header_comments();
      w.body << "id,n,lhs,rhs,pass\n";
      for (const auto& r : rows)
        w.body << r.id << "," << r.n << "," << r.lhs.to_string() << ","
               << r.rhs.to_string() << "," << (r.pass ? 1 : 0) << "\n";
      break;
    case Format::Json: {
      ordered_json params_j{{"k", args.k},
                            {"p", p.to_string()},
                            {"n_max", args.n_max},
                            {"r", args.r},
                            {"y_max", y_max}};
      ordered_json rows_j = ordered_json::array();
      for (const auto& r : rows)
        rows_j.push_back(ordered_json{{"id", r.id},
                                      {"n", r.n},
                                      {"lhs", r.lhs.to_string()},
                                      {"rhs", r.rhs.to_string()},
                                      {"pass", r.pass}});
      w.json_envelope("verify-family", std::move(params_j),
                      ordered_json{{"reports", std::move(rows_j)},
                                   {"failures", failures}});
      break;
    }
  }
  int rc = w.flush();
  if (rc != kExitOk) return rc;
  return failures > 0 ? kExitViolation : kExitOk;
}

// -------------------------------------------------------- verify limit ----

struct LimitArgs {
  int k = 1;
  std::string lambda;
  std::string r_list = "100,1000,10000";
  OutputOptions out;
};

int run_verify_limit(const LimitArgs& args) {
  Rational lambda = parse_rational_flag(args.lambda, "--lambda");
  std::vector<long long> r_list;
  {
    std::stringstream ss(args.r_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        r_list.push_back(std::stoll(item));
      } catch (const std::exception&) {
        throw CLI::ValidationError("--r-list",
                                   "expected comma-separated integers");
      }
    }
    if (r_list.empty())
      throw CLI::ValidationError("--r-list", "expected at least one r");
  }

  std::ostringstream echo;
  echo << "orderk verify limit -k " << args.k << " -l " << lambda.to_string()
       << " --r-list " << args.r_list << " --format " << args.out.format;
  Writer w(args.out, echo.str());

  long long horizon = default_horizon(Params::exact(args.k, lambda));
  auto rows = poisson_limit_distances(args.k, lambda, r_list);

  switch (args.out.fmt()) {
    case Format::Text:
      w.header_comments();
      w.body << "horizon: " << horizon << "\n";
      for (const auto& r : rows) {
        if (r.skipped)
          w.body << "r=" << r.r << " skipped (q = lambda/r not in (0,1))\n";
        else
          w.body << "r=" << r.r << " distance=" << fmt_double(r.distance)
                 << "\n";
      }
      break;
    case Format::Csv:
      w.header_comments();
      w.body << "r,distance,skipped\n";
      for (const auto& r : rows)
        w.body << r.r << "," << fmt_double(r.distance) << ","
               << (r.skipped ? 1 : 0) << "\n";
      break;
    case Format::Json: {
      ordered_json params_j{{"k", args.k},
                            {"lambda", lambda.to_string()},
                            {"r_list", r_list}};
      ordered_json rows_j = ordered_json::array();
      for (const auto& r : rows)
        rows_j.push_back(ordered_json{
            {"r", r.r}, {"distance", r.distance}, {"skipped", r.skipped}});
      w.json_envelope("verify-limit", std::move(params_j),
                      ordered_json{{"horizon", horizon},
                                   {"rows", std::move(rows_j)}});
      break;
    }
  }
  return w.flush();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orderk: exact and floating-point computation for the order-k "
               "Poisson-type distribution, its modes, and the order-k "
               "waiting-time family"};
  app.require_subcommand(1);

  PmfArgs pmf_args;
  CLI::App* pmf_cmd = app.add_subcommand(
      "pmf", "Tabulate the pmf: scaled values, probabilities, difference signs");
  pmf_cmd->add_option("-k", pmf_args.k, "Order k >= 1")->required();
  pmf_cmd->add_option("-l,--lambda", pmf_args.lambda,
                      "Rate: p/q or decimal (parsed exactly)")
      ->required();
  pmf_cmd->add_option("--x-max", pmf_args.x_max,
                      "Largest x (default: mode window upper bound)");
  pmf_cmd->add_option("--backend", pmf_args.backend, "exact or float")
      ->default_val("exact")
      ->check(CLI::IsMember({"exact", "float"}));
  add_output_options(pmf_cmd, pmf_args.out);

  ModeArgs mode_args;
  CLI::App* mode_cmd =
      app.add_subcommand("mode", "Locate the mode set and report the bounds");
  mode_cmd->add_option("-k", mode_args.k, "Order k >= 1")->required();
  mode_cmd->add_option("-l,--lambda", mode_args.lambda, "Rate")->required();
  mode_cmd->add_option("--backend", mode_args.backend, "exact or float")
      ->default_val("exact")
      ->check(CLI::IsMember({"exact", "float"}));
  add_output_options(mode_cmd, mode_args.out);

  ScanArgs scan_args;
  CLI::App* scan_cmd = app.add_subcommand(
      "scan", "Exact conjecture scan over an integer (k, lambda) grid");
  scan_cmd->add_option("-k", scan_args.k_range, "k range, e.g. 2..6")
      ->required();
  scan_cmd->add_option("-l,--lambda", scan_args.l_range,
                       "lambda range, e.g. 1..20")
      ->required();
  scan_cmd->add_option("--jobs", scan_args.jobs,
                       "Worker threads (output order is fixed)")
      ->default_val(1);
  add_output_options(scan_cmd, scan_args.out);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Machine-check identities and properties");
  verify_cmd->require_subcommand(1);

  IdentArgs ident_args;
  CLI::App* ident_cmd = verify_cmd->add_subcommand(
      "identities", "Difference recurrences, proof identities, sign patterns");
  ident_cmd->add_option("-k", ident_args.k, "Order k >= 1")->required();
  ident_cmd->add_option("-l,--lambda", ident_args.lambda, "Rate")->required();
  ident_cmd->add_option("--x-max", ident_args.x_max,
                        "Recurrence sweep bound (default: window + k + 2)");
  add_output_options(ident_cmd, ident_args.out);

  IdentArgs pos_args;
  CLI::App* pos_cmd = verify_cmd->add_subcommand(
      "positivity", "Increasing-range sign check (lambda > 1)");
  pos_cmd->add_option("-k", pos_args.k, "Order k >= 1")->required();
  pos_cmd->add_option("-l,--lambda", pos_args.lambda, "Rate > 1")->required();
  add_output_options(pos_cmd, pos_args.out);

  FamilyArgs family_args;
  CLI::App* family_cmd = verify_cmd->add_subcommand(
      "family", "Half-probability Fibonacci identity and negbin cross-check");
  family_cmd->add_option("-k", family_args.k, "Order k >= 1")->required();
  family_cmd->add_option("-p", family_args.p, "Success probability in (0,1)")
      ->default_val("1/2");
  family_cmd
      ->add_option("--n-max", family_args.n_max,
                   "Largest trial count for the Fibonacci identity")
      ->default_val(40);
  family_cmd->add_option("-r", family_args.r, "Number of summands")
      ->default_val(3);
  family_cmd->add_option(
      "--y-max", family_args.y_max,
      "Largest y for the negbin cross-check (default kr+20)");
  add_output_options(family_cmd, family_args.out);

  LimitArgs limit_args;
  CLI::App* limit_cmd = verify_cmd->add_subcommand(
      "limit", "Distance of the shifted negbin to the pmf along growing r");
  limit_cmd->add_option("-k", limit_args.k, "Order k >= 1")->required();
  limit_cmd->add_option("-l,--lambda", limit_args.lambda, "Rate")->required();
  limit_cmd->add_option("--r-list", limit_args.r_list,
                        "Comma-separated r values")
      ->default_val("100,1000,10000");
  add_output_options(limit_cmd, limit_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (pmf_cmd->parsed()) return run_pmf(pmf_args);
    if (mode_cmd->parsed()) return run_mode(mode_args);
    if (scan_cmd->parsed()) return run_scan(scan_args);
    if (verify_cmd->parsed()) {
      if (ident_cmd->parsed()) return run_verify_identities(ident_args);
      if (pos_cmd->parsed()) return run_verify_positivity(pos_args);
      if (family_cmd->parsed()) return run_verify_family(family_args);
      if (limit_cmd->parsed()) return run_verify_limit(limit_args);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "orderk: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "orderk: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
