#include "multiform/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace multiform {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string join_dims(const std::vector<Index>& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(dims[i]);
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

std::string run_id(const RunLog& log) {
  return base_function_name(log.config.function) + "_" +
         variant_name(log.config.variant) + "_seed" + std::to_string(log.config.seed);
}

std::vector<SummaryRow> summarize(const std::vector<RunLog>& logs, Variant reference) {
  if (logs.empty()) throw std::invalid_argument("summarize: no logs");
  // Cell key -> seed -> final fitness.
  std::map<std::pair<BaseFunction, Variant>, std::map<std::uint64_t, double>> cells;
  for (const RunLog& log : logs) {
    auto& cell = cells[{log.config.function, log.config.variant}];
    if (!cell.emplace(log.config.seed, log.final_fitness).second) {
      throw std::invalid_argument("summarize: duplicate (function, variant, seed)");
    }
  }
  std::vector<SummaryRow> rows;
  for (const auto& [key, cell] : cells) {
    SummaryRow row;
    row.function = key.first;
    row.variant = key.second;
    double sum = 0.0;
    for (const auto& [seed, fit] : cell) sum += fit;
    const double n = static_cast<double>(cell.size());
    row.mean = sum / n;
    double sq = 0.0;
    for (const auto& [seed, fit] : cell) sq += (fit - row.mean) * (fit - row.mean);
    row.stddev = cell.size() > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;

    const auto ref_it = cells.find({key.first, reference});
    if (ref_it != cells.end() && key.second != reference) {
      const auto& ref = ref_it->second;
      std::vector<double> a, b;
      for (const auto& [seed, fit] : cell) {
        const auto match = ref.find(seed);
        if (match == ref.end()) {
          throw std::invalid_argument("summarize: mismatched seed pairing");
        }
        a.push_back(fit);
        b.push_back(match->second);
      }
      const WilcoxonResult w = wilcoxon_signed_rank(a, b);
      if (w.significant) {
        row.mark = w.direction == WilcoxonResult::Direction::ALower
                       ? SummaryRow::Mark::Better
                       : SummaryRow::Mark::Worse;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::string convergence_csv(const RunLog& log) {
  const Index n = log.final_best_fitness.size();
  std::ostringstream out;
  out << "run_id,generation,fes,best_fitness";
  for (Index i = 0; i < n; ++i) out << ",form_best_" << i;
  for (Index i = 0; i < n; ++i) out << ",alloc_p_" << i;
  out << '\n';
  const std::string id = run_id(log);
  for (const GenerationRecord& rec : log.records) {
    out << id << ',' << rec.generation << ',' << rec.fes << ','
        << fmt(rec.global_best);
    for (Index i = 0; i < n; ++i) out << ',' << fmt(rec.formulation_best[i]);
    for (Index i = 0; i < n; ++i) out << ',' << fmt(rec.allocation[i]);
    out << '\n';
  }
  return out.str();
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << "function,variant,mean,std,mark\n";
  for (const SummaryRow& row : rows) {
    const char* mark = row.mark == SummaryRow::Mark::Better   ? "better"
                       : row.mark == SummaryRow::Mark::Worse  ? "worse"
                                                              : "similar";
    out << base_function_name(row.function) << ',' << variant_name(row.variant)
        << ',' << fmt(row.mean) << ',' << fmt(row.stddev) << ',' << mark << '\n';
  }
  return out.str();
}

std::string manifest_text(const ExperimentSpec& spec) {
  std::ostringstream out;
  out << "function=" << base_function_name(spec.base.function) << '\n'
      << "D=" << spec.base.ambient_dim << '\n'
      << "de=" << spec.base.effective_dim << '\n'
      << "dims=" << join_dims(spec.base.dims) << '\n';
  out << "variant=";
  for (std::size_t i = 0; i < spec.variants.size(); ++i) {
    if (i) out << ',';
    out << variant_name(spec.variants[i]);
  }
  out << '\n';
  out << "pop=" << spec.base.population << '\n'
      << "fes=" << spec.base.max_fes << '\n';
  out << "seeds=";
  for (std::size_t i = 0; i < spec.seeds.size(); ++i) {
    if (i) out << ',';
    out << spec.seeds[i];
  }
  out << '\n';
  out << "cr=" << fmt(spec.base.cr) << '\n'
      << "f=" << fmt(spec.base.de_weight) << '\n'
      << "alpha=" << fmt(spec.base.alpha) << '\n'
      << "epsilon=" << fmt(spec.base.epsilon) << '\n'
      << "cmax=" << fmt(spec.base.trend_clamp) << '\n'
      << "ridge=" << fmt(spec.base.ridge) << '\n'
      << "floor=" << spec.base.offspring_floor << '\n'
      << "curves=" << (spec.emit_curves ? 1 : 0) << '\n';
  return out.str();
}

void write_outputs(const std::vector<RunLog>& logs, const ExperimentSpec& spec) {
  const std::filesystem::path dir(spec.out_dir);
  std::filesystem::create_directories(dir);
  if (spec.emit_curves) {
    for (const RunLog& log : logs) {
      write_file(dir / (run_id(log) + ".csv"), convergence_csv(log));
    }
  }
  Variant reference = spec.base.variant;
  if (std::find(spec.variants.begin(), spec.variants.end(), Variant::DeMF) !=
      spec.variants.end()) {
    reference = Variant::DeMF;
  } else if (!spec.variants.empty()) {
    reference = spec.variants.front();
  }
  write_file(dir / "summary.csv", summary_csv(summarize(logs, reference)));
  write_file(dir / "manifest.txt", manifest_text(spec));
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line without '=': " + line);
    }
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  const auto range = text.find("..");
  if (range != std::string::npos) {
    const std::uint64_t lo = std::stoull(text.substr(0, range));
    const std::uint64_t hi = std::stoull(text.substr(range + 2));
    if (hi < lo) throw std::invalid_argument("bad seed range: " + text);
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) seeds.push_back(std::stoull(item));
  }
  if (seeds.empty()) throw std::invalid_argument("empty seed list");
  return seeds;
}

std::vector<Index> parse_dim_list(const std::string& text) {
  std::vector<Index> dims;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) dims.push_back(static_cast<Index>(std::stoll(item)));
  }
  return dims;
}

void apply_key_values(const std::map<std::string, std::string>& kv,
                      ExperimentSpec& spec) {
  for (const auto& [key, value] : kv) {
    if (key == "function") {
      spec.base.function = base_function_from_name(value);
    } else if (key == "D") {
      spec.base.ambient_dim = static_cast<Index>(std::stoll(value));
    } else if (key == "de") {
      spec.base.effective_dim = static_cast<Index>(std::stoll(value));
    } else if (key == "dims") {
      spec.base.dims = parse_dim_list(value);
    } else if (key == "variant") {
      spec.variants.clear();
      std::istringstream in(value);
      std::string item;
      while (std::getline(in, item, ',')) {
        if (!item.empty()) spec.variants.push_back(variant_from_name(item));
      }
    } else if (key == "pop") {
      spec.base.population = std::stoull(value);
    } else if (key == "fes") {
      spec.base.max_fes = std::stoull(value);
    } else if (key == "seeds") {
      spec.seeds = parse_seed_list(value);
    } else if (key == "cr") {
      spec.base.cr = std::stod(value);
    } else if (key == "f") {
      spec.base.de_weight = std::stod(value);
    } else if (key == "alpha") {
      spec.base.alpha = std::stod(value);
    } else if (key == "epsilon") {
      spec.base.epsilon = std::stod(value);
    } else if (key == "cmax") {
      spec.base.trend_clamp = std::stod(value);
    } else if (key == "ridge") {
      spec.base.ridge = std::stod(value);
    } else if (key == "floor") {
      spec.base.offspring_floor = std::stoull(value);
    } else if (key == "curves") {
      spec.emit_curves = value != "0";
    } else if (key == "out") {
      spec.out_dir = value;
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
}

}  // namespace multiform
