#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "multiform/harness.hpp"

namespace {

int run_main(int argc, char** argv) {
  CLI::App app{"multiform: differential evolution over random embeddings"};

  std::string function = "ackley";
  long long ambient_dim = 200;
  long long effective_dim = 10;
  std::string dims = "20,20,20,20";
  std::string variant = "de+mf";
  std::size_t pop = 100;
  std::size_t fes = 50000;
  std::string seeds = "0";
  double cr = 0.9;
  double f_weight = 0.35;
  double alpha = 2.0;
  std::string out_dir = ".";
  std::string config_path;
  bool list_functions = false;
  bool no_curves = false;

  app.add_option("--function", function,
                 "ackley|rastrigin|weierstrass|rosenbrock|griewank|elliptic");
  app.add_option("--D", ambient_dim, "ambient dimensionality");
  app.add_option("--de", effective_dim, "effective dimensionality");
  app.add_option("--dims", dims, "comma list of embedding dimensions");
  app.add_option("--variant", variant, "de|de+m|de+mt|de+mf (comma list allowed)");
  app.add_option("--pop", pop, "population size K");
  app.add_option("--fes", fes, "function-evaluation budget");
  app.add_option("--seeds", seeds, "seed range a..b or comma list");
  app.add_option("--cr", cr, "DE crossover rate");
  app.add_option("--f", f_weight, "DE differential weight");
  app.add_option("--alpha", alpha, "preference step size");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--config", config_path, "key=value file overriding flags");
  app.add_flag("--list-functions", list_functions, "print the benchmark names");
  app.add_flag("--no-curves", no_curves, "skip per-run convergence CSVs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  if (list_functions) {
    for (const char* name :
         {"ackley", "rastrigin", "weierstrass", "rosenbrock", "griewank", "elliptic"}) {
      std::cout << name << '\n';
    }
    return 0;
  }

  if (config_path.empty() &&
      (app.count("--function") == 0 || app.count("--variant") == 0 ||
       app.count("--seeds") == 0)) {
    std::cerr << "--function, --variant and --seeds are required unless "
                 "--config is given\n\n"
              << app.help() << std::flush;
    return 2;
  }

  try {
    multiform::ExperimentSpec spec;
    std::ostringstream flags;
    flags << "function=" << function << "\nD=" << ambient_dim
          << "\nde=" << effective_dim << "\ndims=" << dims
          << "\nvariant=" << variant << "\npop=" << pop << "\nfes=" << fes
          << "\nseeds=" << seeds << "\ncr=" << cr << "\nf=" << f_weight
          << "\nalpha=" << alpha << "\nout=" << out_dir
          << "\ncurves=" << (no_curves ? 0 : 1) << "\n";
    multiform::apply_key_values(multiform::parse_key_values(flags.str()), spec);
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "cannot read config file: " << config_path << '\n';
        return 2;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      multiform::apply_key_values(multiform::parse_key_values(buf.str()), spec);
    }

    const std::vector<multiform::RunLog> logs =
        multiform::run_variant_suite(spec.base, spec.variants, spec.seeds);
    multiform::write_outputs(logs, spec);
    std::cout << logs.size() << " runs written to " << spec.out_dir << '\n';
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) { return run_main(argc, argv); }
