// Command-line front end: simulate, reconstruct, sweep, rates, reproduce-paper.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holo/csv.hpp"
#include "holo/error.hpp"
#include "holo/experiment.hpp"
#include "holo/parallel.hpp"

namespace {

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw holo::Error(holo::ErrorKind::Parse, "bad value '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) throw holo::Error(holo::ErrorKind::Parse, "empty --values list");
  return values;
}

void print_metrics(const holo::ReconstructionReport& report) {
  holo::write_metrics_csv(std::cout, report.metrics);
  for (const holo::MetricValue& m : report.metrics)
    if (!m.value) std::cerr << m.metric << " on " << m.region << ": " << m.error << '\n';
  if (report.grid.failures > 0) std::cerr << report.grid.failures << " grid point(s) without an estimate\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-point phase recovery from inline holograms"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  unsigned threads = holo::default_threads();
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--out", out_dir, "output directory (overrides the config)");
  app.add_option("--threads", threads, "worker threads; results do not depend on it")->check(CLI::PositiveNumber);

  auto* simulate = app.add_subcommand("simulate", "write hologram.csv and hologram.pgm");
  auto* reconstruct = app.add_subcommand("reconstruct", "write recon.csv, profile.csv and metrics.csv");
  auto* sweep = app.add_subcommand("sweep", "one reconstruction per parameter value, write sweep.csv");
  std::string param;
  std::string values;
  sweep->add_option("--param", param, "s, c, kappa or x0_2")->required()->check(CLI::IsMember({"s", "c", "kappa", "x0_2"}));
  sweep->add_option("--values", values, "comma-separated values")->required();
  auto* rates = app.add_subcommand("rates", "error ladder over s and fitted log-log slopes");
  auto* reproduce = app.add_subcommand("reproduce-paper", "full published experiment with tolerance summary");

  for (auto* sub : {simulate, reconstruct, sweep, rates, reproduce}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    holo::ExperimentConfig config = config_path.empty() ? holo::ExperimentConfig{} : holo::load_config(config_path);
    if (!out_dir.empty()) config.out_dir = out_dir;

    if (*simulate) {
      const holo::Hologram h = holo::run_simulate(config, threads);
      std::cout << "wrote " << h.values.size() << " samples to " << config.out_dir.string() << '\n';
    } else if (*reconstruct) {
      print_metrics(holo::run_reconstruct(config, threads));
    } else if (*sweep) {
      std::cout << "param,value,E_G\n";
      for (const holo::SweepRow& r : holo::run_sweep(config, param, parse_values(values), threads)) {
        std::cout << r.param << ',' << holo::num(r.value) << ',' << (r.error_g ? holo::num(*r.error_g) : "undefined")
                  << '\n';
        if (!r.error.empty()) std::cerr << r.error << '\n';
      }
    } else if (*rates) {
      for (const holo::RateSeries& s : holo::run_rates(config, threads)) {
        for (const auto& [scale, err] : s.samples)
          std::cout << s.name << ',' << holo::num(scale) << ',' << holo::num(err) << '\n';
        std::cout << s.name << " slope " << holo::num(s.slope) << '\n';
      }
    } else if (*reproduce) {
      return holo::reproduce_paper(config, threads, std::cout) ? 0 : 1;
    }
  } catch (const holo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
