#include "seqfam/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "seqfam/array_structure.hpp"
#include "seqfam/correlation.hpp"
#include "seqfam/counting.hpp"
#include "seqfam/family.hpp"
#include "seqfam/number_theory.hpp"
#include "seqfam/parallel.hpp"
#include "seqfam/serialize.hpp"
#include "seqfam/sidelnikov.hpp"
#include "seqfam/verify.hpp"

namespace seqfam {

namespace {

struct RunConfig {
  std::string command;
  std::uint32_t p = 0;
  unsigned n = 1;
  unsigned d = 0;
  unsigned M = 0;
  std::string policy = "strict";
  std::optional<std::uint64_t> column;
  unsigned c = 1;
  std::int64_t tau = 0;
  std::string format;
  std::string out;
  unsigned jobs = 0;
  std::optional<std::uint64_t> table_limit;
  std::uint64_t q_max = 0;
};

std::uint64_t resolve_table_limit(const RunConfig& cfg) {
  if (cfg.table_limit) return *cfg.table_limit;
  if (const char* env = std::getenv("SEQFAM_TABLE_LIMIT")) {
    try {
      std::size_t used = 0;
      const std::uint64_t value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::logic_error&) {
    }
    throw ParameterError(std::string("SEQFAM_TABLE_LIMIT is not an integer: ") + env);
  }
  return kDefaultTableLimit;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw ParameterError("cannot write " + cfg.out);
  file << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParameterError("cannot write " + path);
  file << text;
}

// Validates p prime and M | p^n - 1 before anything heavy runs.
FieldPtr base_field(const RunConfig& cfg) {
  if (!nt::is_prime(cfg.p)) throw ParameterError("p must be prime");
  if (cfg.n < 1) throw ParameterError("n must be >= 1");
  const std::uint64_t q = nt::checked_pow(cfg.p, cfg.n);
  require_alphabet(q, cfg.M);
  return build_field(cfg.p, cfg.n, resolve_table_limit(cfg));
}

ExtensionPtr extension(const RunConfig& cfg, FieldPtr field) {
  if (cfg.d < 2) throw ParameterError("--d must be >= 2");
  return build_extension(std::move(field), cfg.d, resolve_table_limit(cfg));
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const FieldPtr field = base_field(cfg);
  if (cfg.c < 1 || cfg.c >= cfg.M) throw ParameterError("--c must lie in [1, M-1]");
  if (cfg.c != 1 && !cfg.column) throw ParameterError("--c requires --column");
  std::optional<MSequence> seq;
  unsigned d = 1;
  if (cfg.column) {
    const ExtensionPtr ext = extension(cfg, field);
    if (*cfg.column >= ext->norm_exponent())
      throw ParameterError("--column must be below (q^d-1)/(q-1)");
    seq = constant_multiple(column_sequence(*ext, *cfg.column, cfg.M), cfg.c);
    d = cfg.d;
  } else if (cfg.d >= 2) {
    seq = sidelnikov_sequence_ext(*extension(cfg, field), cfg.M);
    d = cfg.d;
  } else {
    seq = sidelnikov_sequence(*field, cfg.M);
  }
  if (cfg.tau != 0) seq = cyclic_shift(*seq, cfg.tau);
  std::ostringstream text;
  write_sequence(text, *seq, field->q(), d);
  emit(cfg, out, text.str());
  return kExitPass;
}

int cmd_family(const RunConfig& cfg, std::ostream& out) {
  const ExtensionPtr ext = extension(cfg, base_field(cfg));
  const SequenceFamily family =
      build_family(*ext, cfg.M, parse_policy(cfg.policy), resolve_jobs(cfg.jobs));
  json manifest = family_manifest(family);
  manifest["field"] = to_json(*ext);
  std::ostringstream payload;
  write_family_payload(payload, family);
  if (!cfg.out.empty()) {
    write_file(cfg.out + ".json", manifest.dump(2) + "\n");
    write_file(cfg.out + ".seq", payload.str());
  } else if (cfg.format == "text") {
    out << payload.str();
  } else {
    out << manifest.dump(2) << '\n';
  }
  return kExitPass;
}

int cmd_correlate(const RunConfig& cfg, std::ostream& out) {
  const ExtensionPtr ext = extension(cfg, base_field(cfg));
  const SequenceFamily family =
      build_family(*ext, cfg.M, parse_policy(cfg.policy), resolve_jobs(cfg.jobs));
  ScanOptions scan;
  scan.jobs = resolve_jobs(cfg.jobs);
  const CorrelationReport report = max_correlation(family, scan);
  const InequivalenceResult ineq = cyclic_inequivalence(family);
  const bool passed = report.passed() && ineq.inequivalent;
  if (cfg.format == "csv") {
    std::ostringstream text;
    write_histogram_csv(text, report);
    emit(cfg, out, text.str());
  } else {
    const json j = {{"correlation", to_json(report)},
                    {"inequivalence", to_json(ineq, family)},
                    {"passed", passed}};
    emit(cfg, out, j.dump(2) + "\n");
  }
  return passed ? kExitPass : kExitVerificationFailure;
}

std::string count_csv_header() {
  return "q,d,M,lambda,family_size,asymptotic,ratio,estimate_ok,consistent\n";
}

std::string count_csv_row(const CountReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%llu,%u,%u,%llu,%llu,%.6f,%.6f,%d,%d\n",
                static_cast<unsigned long long>(r.q), r.d, r.M,
                static_cast<unsigned long long>(r.lambda_formula),
                static_cast<unsigned long long>(r.family_size), r.asymptotic, r.ratio,
                r.estimate_ok ? 1 : 0, r.consistent() ? 1 : 0);
  return buf;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  if (cfg.d < 2) throw ParameterError("--d must be >= 2");
  if (cfg.q_max > 0) {
    // Sweep over prime powers q <= q_max admitting the alphabet.
    if (cfg.M < 2) throw ParameterError("M must be >= 2");
    std::string text = count_csv_header();
    json rows = json::array();
    bool consistent = true;
    for (auto q : nt::prime_powers_in(2, cfg.q_max)) {
      if ((q - 1) % cfg.M != 0) continue;
      const CountReport r = count_report(q, cfg.d, cfg.M);
      consistent = consistent && r.consistent();
      text += count_csv_row(r);
      rows.push_back(to_json(r));
    }
    emit(cfg, out, cfg.format == "csv" ? text : rows.dump(2) + "\n");
    return consistent ? kExitPass : kExitVerificationFailure;
  }
  const FieldPtr field = base_field(cfg);
  const CountReport r = count_report(field->q(), cfg.d, cfg.M);
  emit(cfg, out, cfg.format == "csv" ? count_csv_header() + count_csv_row(r)
                                     : to_json(r).dump(2) + "\n");
  return r.consistent() ? kExitPass : kExitVerificationFailure;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  base_field(cfg);
  if (cfg.d < 2) throw ParameterError("--d must be >= 2");
  VerifyOptions options;
  options.policy = parse_policy(cfg.policy);
  options.jobs = resolve_jobs(cfg.jobs);
  options.table_limit = resolve_table_limit(cfg);
  const VerifySummary summary = verify_parameter_set(cfg.p, cfg.n, cfg.d, cfg.M, options);
  if (cfg.format == "text") {
    std::string text;
    for (const auto& c : summary.checks)
      text += std::string(c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
    text += summary.passed() ? "PASS overall\n" : "FAIL overall\n";
    emit(cfg, out, text);
  } else {
    emit(cfg, out, summary.to_json().dump(2) + "\n");
  }
  return summary.passed() ? kExitPass : kExitVerificationFailure;
}

void add_field_options(CLI::App* sub, RunConfig& cfg, bool need_d) {
  sub->add_option("--p", cfg.p, "field characteristic")->required();
  sub->add_option("--n", cfg.n, "base field degree, q = p^n")->capture_default_str();
  auto* d = sub->add_option("--d", cfg.d, "extension degree");
  if (need_d) d->required();
  sub->add_option("--M", cfg.M, "alphabet size, must divide q-1")->required();
}

void add_common_options(CLI::App* sub, RunConfig& cfg, std::vector<std::string> formats) {
  cfg.format = formats.front();
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  sub->add_option("--out", cfg.out, "output path");
  sub->add_option("--jobs", cfg.jobs, "worker threads, 0 = all cores")->capture_default_str();
  sub->add_option("--table-limit", cfg.table_limit,
                  "largest field order with log tables (env SEQFAM_TABLE_LIMIT)");
}

void add_policy(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--policy", cfg.policy, "parameter policy")
      ->check(CLI::IsMember({"strict", "relaxed-d2"}))
      ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Sidelnikov-based sequence families: generation, correlation and counting"};
  app.name("seqfam");
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "write a Sidelnikov or column sequence");
  add_field_options(gen, cfg, false);
  gen->add_option("--column", cfg.column, "array column index l (requires --d)");
  gen->add_option("--c", cfg.c, "constant multiplier for a column")->capture_default_str();
  gen->add_option("--tau", cfg.tau, "cyclic shift of the output")->capture_default_str();
  add_common_options(gen, cfg, {"text"});

  auto* fam = app.add_subcommand("family", "build the family; --out PREFIX writes .json and .seq");
  add_field_options(fam, cfg, true);
  add_policy(fam, cfg);
  add_common_options(fam, cfg, {"json", "text"});

  auto* cor = app.add_subcommand("correlate", "exhaustive correlation and inequivalence check");
  add_field_options(cor, cfg, true);
  add_policy(cor, cfg);
  add_common_options(cor, cfg, {"json", "csv"});

  auto* cnt = app.add_subcommand("count", "family size by exact counting");
  cnt->add_option("--p", cfg.p, "field characteristic");
  cnt->add_option("--n", cfg.n, "base field degree")->capture_default_str();
  cnt->add_option("--d", cfg.d, "extension degree")->required();
  cnt->add_option("--M", cfg.M, "alphabet size")->required();
  cnt->add_option("--q-max", cfg.q_max, "sweep all prime powers q <= q-max with M | q-1");
  add_common_options(cnt, cfg, {"json", "csv"});

  auto* ver = app.add_subcommand("verify", "run every check for one parameter set");
  add_field_options(ver, cfg, true);
  add_policy(ver, cfg);
  add_common_options(ver, cfg, {"json", "text"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(cfg, out);
    if (*fam) return cmd_family(cfg, out);
    if (*cor) return cmd_correlate(cfg, out);
    if (*cnt) {
      if (cfg.q_max == 0 && cfg.p == 0) throw ParameterError("count needs --p or --q-max");
      return cmd_count(cfg, out);
    }
    if (*ver) return cmd_verify(cfg, out);
  } catch (const RestrictionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TableLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
  return kExitUsage;
}

}  // namespace seqfam
