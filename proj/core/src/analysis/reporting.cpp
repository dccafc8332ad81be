#include "icx/analysis/reporting.hpp"

#include <algorithm>
#include <cmath>

#include "icx/bounds.hpp"

namespace icx {
namespace {

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

Cell entry_cell(const std::map<unsigned, SequenceEntry>& seq, unsigned k) {
  auto it = seq.find(k);
  return it == seq.end() ? Cell{} : Cell{as_int(it->second.value)};
}

Cell reliable_cell(const std::map<unsigned, SequenceEntry>& seq, unsigned k) {
  auto it = seq.find(k);
  return it == seq.end() ? Cell{} : Cell{it->second.reliable};
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (const auto v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

Report table_report(std::string name, const ComplexityTable& t) {
  Report report;
  report.name = std::move(name);
  report.add_meta("limit", as_int(t.limit()));
  report.add_meta("algorithm", std::string(to_string(t.tag())));
  report.add_meta("ranks", t.has_ranks());
  return report;
}

Report sequence_base_report(std::string name, const SequenceSet& seq) {
  Report report;
  report.name = std::move(name);
  report.add_meta("limit", as_int(seq.limit));
  report.add_meta("algorithm", std::string(to_string(seq.source)));
  report.add_meta("e_reliable_max", std::int64_t{seq.e_reliable_max()});
  report.add_meta("E_reliable_max", std::int64_t{seq.E_reliable_max()});
  if (seq.has_rank) report.add_meta("r_reliable_max", std::int64_t{seq.r_reliable_max()});
  return report;
}

Report sequence_report(const SequenceSet& seq) {
  Report report = sequence_base_report("sequences", seq);
  report.columns = {"k", "e", "e_reliable", "E", "E2", "E_reliable", "r", "r_reliable"};
  unsigned max_k = 0;
  for (const auto* s : {&seq.e, &seq.E_emp, &seq.r}) {
    if (!s->empty()) max_k = std::max(max_k, s->rbegin()->first);
  }
  for (unsigned k = 0; k <= max_k; ++k) {
    if (!seq.e.count(k) && !seq.E_emp.count(k) && !seq.r.count(k)) continue;
    report.add_row({std::int64_t{k}, entry_cell(seq.e, k), reliable_cell(seq.e, k), entry_cell(seq.E_emp, k),
                    entry_cell(seq.E2_emp, k), reliable_cell(seq.E_emp, k), entry_cell(seq.r, k),
                    reliable_cell(seq.r, k)});
  }
  return report;
}

Report collapse_report(const ComplexityTable& t, const std::vector<CollapseRecord>& records) {
  Report report = table_report("collapse", t);
  report.columns = {"p", "status", "k", "complexity", "rank", "logc"};
  std::uint64_t at2 = 0;
  std::uint64_t collapsed = 0;
  for (const auto& rec : records) {
    if (rec.collapses) {
      ++collapsed;
      if (rec.k == 2) ++at2;
    }
    Cell rank = rec.rank ? Cell{std::int64_t{*rec.rank}} : Cell{};
    report.add_row({as_int(rec.p), std::string(rec.collapses ? "collapses" : "open"), std::int64_t{rec.k},
                    std::int64_t{rec.complexity}, rank, rec.logc});
  }
  report.add_stat("primes", as_int(records.size()));
  report.add_stat("collapsed", as_int(collapsed));
  report.add_stat("collapsed_at_2", as_int(at2));
  // ‖82‖ and ‖244‖ are the composite cases reported alongside prime collapses.
  for (const std::uint64_t n : {82u, 244u}) {
    if (n <= t.limit()) report.add_stat("complexity_" + std::to_string(n), std::int64_t{t[n]});
  }
  return report;
}

Report first_op_report(const ComplexityTable& t, const FirstOpScan& scan) {
  Report report = table_report("firstop", t);
  report.columns = {"n", "classification", "minimal_addend"};
  report.add_stat("product", as_int(scan.products));
  report.add_stat("sub1", as_int(scan.sub1));
  report.add_stat("other", as_int(scan.records.size()));
  for (const auto& rec : scan.records) {
    Cell addend = rec.minimal_addend ? Cell{as_int(*rec.minimal_addend)} : Cell{};
    report.add_row({as_int(rec.n), std::string(to_string(rec.classification)), addend});
  }
  return report;
}

Report chain_report(const SequenceSet& seq, const std::vector<ChainRecord>& records) {
  Report report = sequence_base_report("chains", seq);
  report.columns = {"n", "e", "prime", "q1_prime", "q2_prime", "q3_prime", "length", "chain"};
  std::int64_t longest = 0;
  std::int64_t at_least_4 = 0;
  std::int64_t composite = 0;
  for (const auto& rec : records) {
    const auto length = static_cast<std::int64_t>(rec.chain.size());
    longest = std::max(longest, length);
    if (length >= 4) ++at_least_4;
    if (!rec.end_prime) ++composite;
    report.add_row({std::int64_t{rec.n}, as_int(rec.end), rec.end_prime, rec.quotient_prime[0],
                    rec.quotient_prime[1], rec.quotient_prime[2], length, join(rec.chain)});
  }
  report.add_stat("longest", longest);
  report.add_stat("length_at_least_4", at_least_4);
  report.add_stat("composite_e", composite);
  return report;
}

Report fit_report(const SequenceSet& seq, const FitResult& fit) {
  Report report = sequence_base_report("fit-e", seq);
  report.add_stat("slope", fit.slope);
  report.add_stat("intercept", fit.intercept);
  report.add_stat("n_min", static_cast<std::int64_t>(fit.x_min));
  report.add_stat("n_max", static_cast<std::int64_t>(fit.x_max));
  report.columns = {"n", "log3_e", "fitted", "residual"};
  for (std::size_t i = 0; i < fit.x.size(); ++i) {
    const double fitted = fit.slope * fit.x[i] + fit.intercept;
    report.add_row({static_cast<std::int64_t>(fit.x[i]), fitted + fit.residuals[i], fitted, fit.residuals[i]});
  }
  return report;
}

Report top_log_report(const ComplexityTable& t, const std::vector<LogRecord>& records) {
  Report report = table_report("top-log", t);
  report.columns = {"n", "complexity", "logc", "rank"};
  std::int64_t ties = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (i > 0 && records[i - 1].logc == rec.logc) ++ties;
    Cell rank = rec.rank ? Cell{std::int64_t{*rec.rank}} : Cell{};
    report.add_row({as_int(rec.n), std::int64_t{rec.complexity}, rec.logc, rank});
  }
  report.add_stat("tied_values", ties);
  return report;
}

}  // namespace icx
