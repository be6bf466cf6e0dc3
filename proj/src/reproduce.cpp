#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "holo/csv.hpp"
#include "holo/experiment.hpp"

namespace holo {

namespace {

struct Check {
  std::string name;
  std::optional<double> measured;
  std::string reference;
  bool pass = false;
};

std::string percent(std::optional<double> v) {
  if (!v) return "undefined";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * *v);
  return buf;
}

std::string scientific(std::optional<double> v) {
  if (!v) return "undefined";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", *v);
  return buf;
}

// |measured - target| <= tol, all in percentage points.
Check within_points(std::string name, std::optional<double> v, double target_pct, double tol_pct) {
  Check c{std::move(name), v, {}, false};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f%% +- %.1f", target_pct, tol_pct);
  c.reference = buf;
  c.pass = v && std::abs(100.0 * *v - target_pct) <= tol_pct;
  return c;
}

void write_sweep(const std::filesystem::path& dir, const std::string& param, const std::vector<SweepRow>& rows) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / ("sweep_" + param + ".csv"), std::ios::binary);
  out << "param,value,E_G\n";
  for (const SweepRow& r : rows) out << r.param << ',' << num(r.value) << ',' << (r.error_g ? num(*r.error_g) : "undefined") << '\n';
}

}  // namespace

bool reproduce_paper(const ExperimentConfig& config, unsigned threads, std::ostream& summary) {
  run_simulate(config, threads);
  const ReconstructionReport report = run_reconstruct(config, threads);

  std::vector<Check> checks;
  checks.push_back(within_points("E(G)", report.metric("E", "G"), 11.7, 1.5));
  checks.push_back(within_points("E(D)", report.metric("E", "D"), 29.7, 4.0));
  checks.push_back(within_points("E(G\\D)", report.metric("E", "G_minus_D"), 10.2, 1.5));

  const char* regions[] = {"G", "D", "G_minus_D"};
  const double dis_targets[] = {7.2e-3, 6.7e-3, 7.2e-3};
  for (int r = 0; r < 3; ++r) {
    const auto v = report.metric("E_dis", regions[r]);
    Check c{std::string("E_dis(") + regions[r] + ")", v, scientific(dis_targets[r]) + " x/ 2", false};
    c.pass = v && *v >= dis_targets[r] / 2.0 && *v <= dis_targets[r] * 2.0;
    checks.push_back(c);
  }
  {
    const auto dis = report.metric("E_dis", "G");
    const auto e = report.metric("E", "G");
    checks.push_back({"E_dis(G) < 0.02 while E(G) > 0.09", dis, "small discrepancy, large error",
                      dis && e && *dis < 0.02 && *e > 0.09});
  }
  checks.push_back({"max|zeta| on G", report.metric("max_zeta", "G"), "< 15",
                    report.grid.max_zeta < 15.0});

  const auto run = [&](const std::string& param, const std::vector<double>& values) {
    std::vector<SweepRow> rows = sweep(config, param, values, threads);
    write_sweep(config.out_dir, param, rows);
    return rows;
  };

  const std::vector<SweepRow> s_rows = run("s", {5, 10, 100, 200});
  const double s_targets[] = {25.0, 16.0, 11.7, 10.8};
  bool decreasing = true;
  for (std::size_t i = 0; i < s_rows.size(); ++i) {
    checks.push_back(within_points("sweep s=" + num(s_rows[i].value), s_rows[i].error_g, s_targets[i], 2.5));
    if (i > 0 && !(s_rows[i].error_g && s_rows[i - 1].error_g && *s_rows[i].error_g < *s_rows[i - 1].error_g))
      decreasing = false;
  }
  checks.push_back({"sweep s strictly decreasing", std::nullopt, "monotone", decreasing});

  const std::vector<SweepRow> k_rows = run("kappa", {1, 4, 16});
  const double k_targets[] = {9.8, 11.7, 13.0};
  for (std::size_t i = 0; i < k_rows.size(); ++i)
    checks.push_back(within_points("sweep kappa=" + num(k_rows[i].value), k_rows[i].error_g, k_targets[i], 2.0));

  const std::vector<SweepRow> c_rows = run("c", {0.1, 1, 10, 20});
  double lo = 1e300;
  double hi = -1e300;
  for (const SweepRow& row : c_rows) {
    Check c{"sweep c=" + num(row.value), row.error_g, "in [9.7%, 13.8%]", false};
    c.pass = row.error_g && *row.error_g >= 0.097 && *row.error_g <= 0.138;
    checks.push_back(c);
    if (row.error_g) {
      lo = std::min(lo, *row.error_g);
      hi = std::max(hi, *row.error_g);
    }
  }
  checks.push_back({"sweep c spread", hi - lo, "<= 1 point", hi - lo <= 0.01});

  const std::vector<SweepRow> x_rows = run("x0_2", {0, 2.5, 5});
  {
    Check c{"sweep x0_2=0", x_rows[0].error_g, "<= 0.5%", false};
    c.pass = x_rows[0].error_g && *x_rows[0].error_g <= 0.005;
    checks.push_back(c);
  }
  checks.push_back(within_points("sweep x0_2=2.5", x_rows[1].error_g, 11.7, 1.5));
  checks.push_back(within_points("sweep x0_2=5", x_rows[2].error_g, 22.2, 3.0));

  bool all = true;
  char head[256];
  std::snprintf(head, sizeof head, "%-38s %-13s %-32s %s\n", "check", "measured", "reference", "result");
  summary << head;
  for (const Check& c : checks) {
    char line[256];
    const bool is_ratio = c.name.rfind("E_dis", 0) != 0 && c.name.rfind("max", 0) != 0 && c.name.find("decreasing") == std::string::npos;
    const std::string measured = !c.measured ? "-" : is_ratio ? percent(c.measured) : scientific(c.measured);
    std::snprintf(line, sizeof line, "%-38s %-13s %-32s %s\n", c.name.c_str(), measured.c_str(), c.reference.c_str(),
                  c.pass ? "PASS" : "FAIL");
    summary << line;
    all = all && c.pass;
  }
  summary << (all ? "all values within tolerance\n" : "some values outside tolerance\n");
  return all;
}

}  // namespace holo
