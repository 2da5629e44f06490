#pragma once

#include <map>
#include <string>
#include <vector>

#include "multiform/orchestrator.hpp"
#include "multiform/stats.hpp"

namespace multiform {

struct ExperimentSpec {
  RunConfig base;
  std::vector<Variant> variants;
  std::vector<std::uint64_t> seeds;
  std::string out_dir = ".";
  bool emit_curves = true;
};

struct SummaryRow {
  BaseFunction function;
  Variant variant;
  double mean = 0.0;
  double stddev = 0.0;
  enum class Mark { Better, Similar, Worse } mark = Mark::Similar;
};

// Identifier used for per-run CSV filenames and the run_id column.
std::string run_id(const RunLog& log);

// Per-(function, variant) mean/std of final fitness with a Wilcoxon mark
// against the reference variant, paired by seed.
std::vector<SummaryRow> summarize(const std::vector<RunLog>& logs, Variant reference);

// Emits per-run convergence CSVs (when enabled), summary.csv, and
// manifest.txt in spec.out_dir. The manifest is key=value in the same
// grammar --config accepts, so a run batch can be reproduced exactly.
void write_outputs(const std::vector<RunLog>& logs, const ExperimentSpec& spec);

std::string convergence_csv(const RunLog& log);
std::string summary_csv(const std::vector<SummaryRow>& rows);
std::string manifest_text(const ExperimentSpec& spec);

// key=value parsing shared by manifest.txt and --config files.
std::map<std::string, std::string> parse_key_values(const std::string& text);
void apply_key_values(const std::map<std::string, std::string>& kv, ExperimentSpec& spec);

// "0..9" (inclusive range) or "0,3,5".
std::vector<std::uint64_t> parse_seed_list(const std::string& text);
std::vector<Index> parse_dim_list(const std::string& text);

}  // namespace multiform
