#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "icx/analysis/fit.hpp"
#include "icx/analysis/hypotheses.hpp"
#include "icx/analysis/reconstruct.hpp"
#include "icx/analysis/reporting.hpp"
#include "icx/analysis/scans.hpp"
#include "icx/analysis/sequences.hpp"
#include "icx/dp.hpp"
#include "icx/enumerator.hpp"
#include "icx/errors.hpp"
#include "icx/io/icx_file.hpp"
#include "icx/sieve.hpp"

namespace icx::cli {
namespace {

namespace fs = std::filesystem;

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

struct Common {
  std::string table;
  std::string format = "text";
};

void add_table(CLI::App* sub, Common& common) {
  sub->add_option("--table", common.table, "ICX1 table file")->required();
}

void add_format(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "text"}));
}

int emit(const std::vector<Report>& reports, const Common& common, std::ostream& out) {
  out << render(reports, parse_format(common.format));
  const bool holds = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.holds; });
  return holds ? ok : counterexamples;
}

struct BuildArgs {
  std::string algo = "sieve";
  std::uint64_t limit = 0;
  bool ranks = false;
  std::string out;
  std::uint64_t checkpoint_every = 0;
  std::string resume;
  bool no_bootstrap = false;
};

int do_build(const BuildArgs& a, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<ComplexityTable> table;
  if (a.algo == "sieve") {
    if (a.checkpoint_every != 0 || !a.resume.empty()) {
      throw ConfigError("--checkpoint-every and --resume apply to --algo dp only");
    }
    SieveOptions options;
    options.with_ranks = a.ranks;
    options.bootstrap = !a.no_bootstrap;
    table = build_sieve(a.limit, options);
  } else {
    if (a.ranks) throw ConfigError("the dp builder does not compute ranks; use --algo sieve");
    DpOptions options;
    options.checkpoint_every = a.checkpoint_every;
    options.checkpoint_path = a.resume.empty() ? fs::path(a.out + ".ckpt") : fs::path(a.resume);
    table = a.resume.empty() ? build_dp(a.limit, options) : resume_dp(a.resume, a.limit, options);
    if (a.checkpoint_every != 0 || !a.resume.empty()) {
      std::error_code ec;
      fs::remove(options.checkpoint_path, ec);
    }
  }
  save_table(*table, a.out);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << "wrote " << a.out << ": limit " << table->limit() << ", algorithm " << to_string(table->tag())
      << ", ranks " << (table->has_ranks() ? "yes" : "no") << ", " << format_real(seconds) << " s\n";
  return ok;
}

int do_query(const Common& common, std::uint64_t n, std::ostream& out) {
  if (n == 0) throw DomainError("n must be positive");
  const auto table = load_table(common.table);
  out << "complexity " << table.complexity(n);
  if (table.has_ranks()) out << ", rank " << table.rank(n);
  out << "\n";
  return ok;
}

int do_oracle(const Common& common, std::uint64_t n, std::optional<unsigned> max_ones, bool all,
              std::ostream& out) {
  OracleOptions options;
  options.ones_cap = max_ones;
  options.collect_all = all;
  const auto result = oracle_complexity(n, options);
  Report report;
  report.name = "oracle";
  report.add_meta("algorithm", std::string("oracle"));
  report.add_meta("n", as_int(n));
  report.add_meta("complexity", std::int64_t{result.complexity});
  report.add_meta("rank", std::int64_t{result.min_height});
  report.add_stat("expressions", as_int(result.shortest.size()));
  report.columns = {"infix", "postfix", "height"};
  for (const auto& tree : result.shortest) {
    report.add_row({to_infix(tree), postfix_emit(tree), std::int64_t{tree.height()}});
  }
  return emit({report}, common, out);
}

std::vector<Report> verify_reports(const std::string& check, const ComplexityTable& t) {
  std::vector<Report> reports;
  const bool all = check == "all";
  auto want = [&](const char* name) { return all || check == name; };
  if (want("bounds")) reports.push_back(check_bounds(t));
  if (want("pow2")) reports.push_back(check_products(t, ProductKind::pow2));
  if (want("pow3")) reports.push_back(check_products(t, ProductKind::pow3));
  if (want("pow235")) reports.push_back(check_products(t, ProductKind::pow235));
  if (want("pow2plus1")) reports.push_back(check_pow2_plus1(t));
  if (want("mersenne")) reports.push_back(check_mersenne(t));
  if (check == "defect-rank" || (all && t.has_ranks())) reports.push_back(check_defect_rank(t));
  if (want("e-closed") || want("e-prime")) {
    const auto seq = derive_sequences(t, false);
    if (want("e-closed")) reports.push_back(check_e_closed(seq));
    if (want("e-prime")) reports.push_back(check_e_primality(seq));
  }
  if (want("primes")) reports.push_back(check_prime_successor(t));
  if (want("log-ceiling")) reports.push_back(check_log_ceiling(t));
  return reports;
}

const std::vector<std::string> kChecks = {"bounds",   "pow2",        "pow3",     "pow235",
                                          "pow2plus1", "mersenne",   "defect-rank", "e-closed",
                                          "e-prime",  "primes",      "log-ceiling", "all"};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer complexity tables: build, query and verify"};
  app.name("icx");
  app.require_subcommand(1);
  Common common;

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Compute a table and save it");
  build_cmd->add_option("--algo", build.algo, "Builder")->check(CLI::IsMember({"sieve", "dp"}));
  build_cmd->add_option("--limit", build.limit, "Largest n")->required()->check(CLI::PositiveNumber);
  build_cmd->add_flag("--ranks", build.ranks, "Also record rank(n) (sieve only)");
  build_cmd->add_option("--out", build.out, "Output file")->required();
  build_cmd->add_option("--checkpoint-every", build.checkpoint_every, "Checkpoint interval (dp)");
  build_cmd->add_option("--resume", build.resume, "Continue from a dp checkpoint");
  build_cmd->add_flag("--no-bootstrap", build.no_bootstrap, "Scan every addend in addition passes (sieve)");

  std::uint64_t n = 0;
  auto* query_cmd = app.add_subcommand("query", "Print the complexity (and rank) of n");
  query_cmd->add_option("n", n)->required();
  add_table(query_cmd, common);

  std::optional<unsigned> max_ones;
  bool all_expressions = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search for the shortest expressions of n");
  oracle_cmd->add_option("n", n)->required();
  oracle_cmd->add_option("--max-ones", max_ones, "Largest ones-count to try");
  oracle_cmd->add_flag("--all", all_expressions, "List every canonical shortest expression");
  add_format(oracle_cmd, common);

  auto* seq_cmd = app.add_subcommand("seq", "Derived sequences e, E, E2 and r");
  add_table(seq_cmd, common);
  add_format(seq_cmd, common);

  std::string check;
  auto* verify_cmd = app.add_subcommand("verify", "Check identities over the table range");
  verify_cmd->add_option("check", check)->required()->check(CLI::IsMember(kChecks));
  add_table(verify_cmd, common);
  add_format(verify_cmd, common);

  std::uint64_t primes_below = 1000;
  auto* collapse_cmd = app.add_subcommand("collapse", "Smallest collapsing power of each prime");
  collapse_cmd->add_option("--primes-below", primes_below, "Scan primes below this bound");
  add_table(collapse_cmd, common);
  add_format(collapse_cmd, common);

  auto* chains_cmd = app.add_subcommand("chains", "Primality and doubling chains ending at e(n)");
  add_table(chains_cmd, common);
  add_format(chains_cmd, common);

  auto* firstop_cmd = app.add_subcommand("firstop", "Numbers whose first operation must subtract more than 1");
  add_table(firstop_cmd, common);
  add_format(firstop_cmd, common);

  unsigned fit_from = 10;
  auto* fit_cmd = app.add_subcommand("fit-e", "Least squares fit of log3 e(n) against n");
  fit_cmd->add_option("--from", fit_from, "Smallest n in the fit");
  add_table(fit_cmd, common);
  add_format(fit_cmd, common);

  std::size_t count = 16;
  auto* top_cmd = app.add_subcommand("top-log", "Largest values of complexity / log3(n)");
  top_cmd->add_option("--count", count, "Number of rows");
  add_table(top_cmd, common);
  add_format(top_cmd, common);

  bool min_height = false;
  auto* expr_cmd = app.add_subcommand("expr", "Rebuild a shortest expression for n");
  expr_cmd->add_option("n", n)->required();
  expr_cmd->add_flag("--min-height", min_height, "Prefer an expression of least height");
  add_table(expr_cmd, common);
  add_format(expr_cmd, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*build_cmd) return do_build(build, out);
    if (*query_cmd) return do_query(common, n, out);
    if (*oracle_cmd) return do_oracle(common, n, max_ones, all_expressions, out);

    const auto table = load_table(common.table);
    if (*seq_cmd) return emit({sequence_report(derive_sequences(table))}, common, out);
    if (*verify_cmd) return emit(verify_reports(check, table), common, out);
    if (*collapse_cmd) return emit({collapse_report(table, collapse_scan(table, primes_below))}, common, out);
    if (*chains_cmd) {
      const auto seq = derive_sequences(table, false);
      return emit({chain_report(seq, chain_scan(seq))}, common, out);
    }
    if (*firstop_cmd) {
      emit({first_op_report(table, first_operation_scan(table))}, common, out);
      return ok;
    }
    if (*fit_cmd) {
      const auto seq = derive_sequences(table, false);
      return emit({fit_report(seq, fit_e_asymptote(seq, fit_from))}, common, out);
    }
    if (*top_cmd) return emit({top_log_report(table, top_log_complexity(table, count))}, common, out);
    if (*expr_cmd) {
      const auto tree = reconstruct(table, n, min_height ? ReconstructPolicy::min_height
                                                         : ReconstructPolicy::any_shortest);
      Report report = table_report("expr", table);
      report.columns = {"n", "ones", "height", "infix", "postfix"};
      report.add_row({as_int(n), std::int64_t{tree.ones()}, std::int64_t{tree.height()}, to_infix(tree),
                      postfix_emit(tree)});
      return emit({report}, common, out);
    }
  } catch (const std::exception& e) {
    err << "icx: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace icx::cli
