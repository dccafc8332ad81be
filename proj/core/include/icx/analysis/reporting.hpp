#pragma once

// Report builders for the analysis results. Every report echoes the limit
// and algorithm of the table it was computed from.

#include <string>
#include <vector>

#include "icx/analysis/fit.hpp"
#include "icx/analysis/scans.hpp"
#include "icx/analysis/sequences.hpp"
#include "icx/report.hpp"
#include "icx/table.hpp"

namespace icx {

/// Empty report carrying the table's provenance (limit, algorithm, ranks).
Report table_report(std::string name, const ComplexityTable& t);

/// Empty report carrying the sequence provenance and reliable ranges.
Report sequence_base_report(std::string name, const SequenceSet& seq);

/// One row per index k with e, E_emp, E2_emp, r and their reliability flags.
Report sequence_report(const SequenceSet& seq);

Report collapse_report(const ComplexityTable& t, const std::vector<CollapseRecord>& records);
Report first_op_report(const ComplexityTable& t, const FirstOpScan& scan);
/// Includes length-≥4 chain statistics.
Report chain_report(const SequenceSet& seq, const std::vector<ChainRecord>& records);
Report fit_report(const SequenceSet& seq, const FitResult& fit);
Report top_log_report(const ComplexityTable& t, const std::vector<LogRecord>& records);

}  // namespace icx
