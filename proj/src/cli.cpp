#include "qtrunc/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtrunc/parallel.hpp"
#include "qtrunc/suite.hpp"

namespace qtrunc {
namespace {

constexpr const char* kVersion = "1.0.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string format;
  std::string path;
  bool metadata = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts, const std::string& default_format) {
  opts.format = default_format;
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", opts.path, "Write the report to this file instead of standard output");
  cmd->add_flag("--metadata", opts.metadata, "Prepend a run-information header (not part of the data)");
}

std::string join(const std::vector<std::string_view>& items) {
  std::string out;
  for (auto item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

Json metadata_json(const std::string& command) {
  return {{"tool", "qtrunc"}, {"version", kVersion}, {"command", command}, {"threads", worker_count()}};
}

// Renders `body` (the data section) with the optional metadata header.
std::string render_json(Json body, const OutputOptions& opts, const std::string& command) {
  if (!opts.metadata) return body.dump(2) + "\n";
  Json wrapped;
  wrapped["meta"] = metadata_json(command);
  for (auto it = body.begin(); it != body.end(); ++it) wrapped[it.key()] = it.value();
  return wrapped.dump(2) + "\n";
}

std::string render_csv(const std::string& body, const OutputOptions& opts, const std::string& command) {
  if (!opts.metadata) return body;
  return "# qtrunc " + std::string(kVersion) + " command=" + command + " threads=" + std::to_string(worker_count()) +
         "\n" + body;
}

void emit(const std::string& text, const OutputOptions& opts, std::ostream& out) {
  if (opts.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + opts.path);
  file << text;
}

PartitionFunctionId parse_function(const std::string& token, std::size_t m, std::size_t r) {
  if (token == "p") return PartitionFunctionId::p();
  if (token == "overp") return PartitionFunctionId::overp();
  if (token == "pod") return PartitionFunctionId::pod();
  if (token == "t3") return PartitionFunctionId::t3();
  if (token == "jmr") {
    if (r < 1 || 2 * r > m) throw UsageError("--function jmr requires --m and --r with 1 <= r <= m/2");
    return PartitionFunctionId::jmr(m, r);
  }
  throw UsageError("unknown function '" + token + "' (expected p, overp, pod, t3, jmr)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact truncated q-series tables, identity checks and inequality scans", "qtrunc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  OutputOptions table_out, verify_out, scan_out, suite_out;

  auto* table = app.add_subcommand("table", "Emit a cross-checked value table");
  std::string function;
  long table_n_max = 50;
  int table_m = 0, table_r = 0;
  table->add_option("--function", function, "p, overp, pod, t3 or jmr")->required();
  table->add_option("--n-max", table_n_max, "Largest n")->check(CLI::NonNegativeNumber);
  table->add_option("--m", table_m, "Modulus for jmr")->check(CLI::PositiveNumber);
  table->add_option("--r", table_r, "Residue for jmr")->check(CLI::PositiveNumber);
  add_output_options(table, table_out, "csv");

  auto* verify_cmd = app.add_subcommand("verify", "Check an identity coefficientwise");
  std::string identity;
  long order = 200;
  int id_k = 0, id_n = 0, id_m = 0, id_r = 0;
  verify_cmd->add_option("--identity", identity, "One of: " + join(identity_tokens()))->required();
  verify_cmd->add_option("--order", order, "Truncation order")->check(CLI::PositiveNumber);
  auto* opt_k = verify_cmd->add_option("--k", id_k, "Parameter k");
  auto* opt_n = verify_cmd->add_option("--n", id_n, "Parameter n");
  auto* opt_m = verify_cmd->add_option("--m", id_m, "Parameter m");
  auto* opt_r = verify_cmd->add_option("--r", id_r, "Parameter r");
  add_output_options(verify_cmd, verify_out, "json");

  auto* scan_cmd = app.add_subcommand("scan", "Scan an inequality family over a (k, n) grid");
  std::string family;
  int k_max = 10;
  long scan_n_max = 1000;
  int fam_m = 0, fam_r = 0;
  scan_cmd->add_option("--family", family, "One of: " + join(family_tokens()))->required();
  scan_cmd->add_option("--k-max", k_max, "Largest k")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--n-max", scan_n_max, "Largest n")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--m", fam_m, "Modulus for conj1")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--r", fam_r, "Residue for conj1")->check(CLI::PositiveNumber);
  add_output_options(scan_cmd, scan_out, "json");

  auto* suite_cmd = app.add_subcommand("suite", "Run the full verification battery");
  SuiteConfig suite_cfg;
  suite_cmd->add_option("--order", suite_cfg.order, "Identity truncation order")->check(CLI::PositiveNumber);
  suite_cmd->add_option("--n-max", suite_cfg.n_max, "Scan range")->check(CLI::PositiveNumber);
  add_output_options(suite_cmd, suite_out, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  std::string command_line;
  for (int i = 1; i < argc; ++i) command_line += (i > 1 ? " " : "") + std::string(argv[i]);

  try {
    if (*table) {
      const PartitionFunctionId id =
          parse_function(function, static_cast<std::size_t>(table_m), static_cast<std::size_t>(table_r));
      const CrossCheck cc = pf_crosscheck(id, static_cast<std::size_t>(table_n_max));
      if (!cc.agree()) {
        err << "cross-check failed for " << id.name() << " at n=" << *cc.first_mismatch << "; no values emitted\n";
        return kExitFailure;
      }
      const ValueTable values = pf_by_recurrence(id, static_cast<std::size_t>(table_n_max));
      emit(table_out.format == "csv" ? render_csv(to_csv(values), table_out, command_line)
                                     : render_json(to_json(values), table_out, command_line),
           table_out, out);
      return kExitPass;
    }

    if (*verify_cmd) {
      const auto kind = identity_kind_from_token(identity);
      if (!kind) throw UsageError("unknown identity '" + identity + "' (expected one of: " + join(identity_tokens()) + ")");
      IdentityId id{*kind, id_k, id_n, id_m, id_r};
      for (const auto& [name, value] : id.params()) {
        const CLI::Option* given = name == "k" ? opt_k : name == "n" ? opt_n : name == "m" ? opt_m : opt_r;
        if (given->count() == 0) throw UsageError(id.token() + " requires --" + name);
      }
      try {
        id.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const IdentityReport report = verify(id, static_cast<std::size_t>(order));
      emit(verify_out.format == "csv" ? render_csv(to_csv(report), verify_out, command_line)
                                      : render_json(to_json(report), verify_out, command_line),
           verify_out, out);
      return report.passed() ? kExitPass : kExitFailure;
    }

    if (*scan_cmd) {
      const auto kind = family_kind_from_token(family);
      if (!kind) throw UsageError("unknown family '" + family + "' (expected one of: " + join(family_tokens()) + ")");
      FamilyId fam{*kind};
      if (*kind == FamilyKind::Conj1) {
        if (fam_r < 1 || 2 * fam_r > fam_m) throw UsageError("conj1 requires --m and --r with 1 <= r <= m/2");
        fam = FamilyId::conj1(fam_m, fam_r);
      }
      const InequalityReport report = scan(fam, k_max, scan_n_max);
      emit(scan_out.format == "csv" ? render_csv(to_csv(report), scan_out, command_line)
                                    : render_json(to_json(report), scan_out, command_line),
           scan_out, out);
      if (!report.passed() && fam.is_conjecture()) {
        err << "conjecture finding: " << fam.name() << " has a counterexample within the scanned range\n";
      }
      return report.passed() ? kExitPass : kExitFailure;
    }

    if (*suite_cmd) {
      const auto entries = run_suite(suite_cfg);
      bool all = true;
      std::ostringstream csv;
      csv << "name,category,conjecture,status,detail\n";
      for (const auto& e : entries) {
        all = all && e.passed;
        csv << csv_field(e.name) << ',' << e.category << ',' << (e.conjecture ? "true" : "false") << ','
            << (e.passed ? "pass" : "fail") << ',' << csv_field(e.detail) << '\n';
      }
      emit(suite_out.format == "csv" ? render_csv(csv.str(), suite_out, command_line)
                                     : render_json(to_json(suite_cfg, entries), suite_out, command_line),
           suite_out, out);
      return all ? kExitPass : kExitFailure;
    }
  } catch (const UsageError& e) {
    err << "qtrunc: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "qtrunc: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qtrunc
