// jacspec — command-line front end. Thin composition of the library
// pipelines; all numerical logic lives in the library. Exit codes: 0 on
// success, 1 when a paper inequality is violated (oval membership, bound
// margin, route mismatch), 2 on input errors.

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jacspec/io.hpp"

namespace {

using namespace jacspec;

constexpr double kMarginFloor = -1e-12;
constexpr double kRouteTol = 1e-8;

struct GridSpec {
  int n_r = 32, n_theta = 32;
  double r_min = 0.05, r_max = 0.95;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char comma;
  std::istringstream ss(text);
  if (!(ss >> g.n_r >> comma >> g.n_theta >> comma >> g.r_min >> comma >> g.r_max) ||
      !ss.eof())
    throw ConfigError("--grid expects NR,NT,RMIN,RMAX");
  return g;
}

Complex parse_complex(const std::string& text) {
  double re = 0.0, im = 0.0;
  char comma;
  std::istringstream ss(text);
  if (!(ss >> re)) throw ConfigError("--z expects RE or RE,IM");
  if (ss >> comma && !(ss >> im)) throw ConfigError("--z expects RE or RE,IM");
  return {re, im};
}

std::vector<double> parse_epsilons(const std::string& text) {
  std::vector<double> eps;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) eps.push_back(std::stod(item));
  for (double e : eps)
    if (!(e > 0.0) || !(e < 1.0)) throw ConfigError("--epsilon values must lie in (0,1)");
  if (eps.empty()) throw ConfigError("--epsilon expects E[,E...]");
  return eps;
}

int verdict_from_margin(double min_margin) { return min_margin < kMarginFloor ? 1 : 0; }

int verdict_from_reports(const std::vector<InequalityReport>& reports) {
  for (const auto& r : reports)
    if (r.violation) return 1;
  return 0;
}

struct Options {
  std::string config, out = "-", format = "json", grid, epsilons, z = "0.5,0.2";
  std::uint64_t seed = 1;
  long section_n = 200;
};

int run_command(const std::string& command, const Options& opt) {
  ReportFormat fmt = parse_format(opt.format);
  GridSpec grid = opt.grid.empty() ? GridSpec{} : parse_grid(opt.grid);

  if (command == "sweep") {
    std::vector<double> epsilons =
        opt.epsilons.empty() ? default_epsilons() : parse_epsilons(opt.epsilons);
    std::vector<double> file_epsilons;
    auto family = load_family(opt.config, opt.seed, &file_epsilons);
    if (!file_epsilons.empty() && opt.epsilons.empty()) epsilons = file_epsilons;
    auto reports = family_sweep(family, epsilons);
    write_output(opt.out, render_reports(reports, fmt));
    return verdict_from_reports(reports);
  }

  JacobiOperator op = load_operator(opt.config);

  if (command == "jost") {
    SpectralParameter sp(parse_complex(opt.z));
    JostReport report{sp.z(), solve_volterra_right(op, sp), solve_volterra_left(op, sp),
                      {}, {}};
    report.right_residual = recurrence_residual(
        op, report.right.n_min, report.right.values, sp.z(), Recurrence::der);
    report.left_residual = recurrence_residual(op, report.left.n_min, report.left.values,
                                               sp.z(), Recurrence::del);
    write_output(opt.out, render_jost(report, fmt));
    return 0;
  }
  if (command == "det-scan") {
    auto rows =
        audit_bounds(op, polar_grid(grid.n_r, grid.n_theta, grid.r_min, grid.r_max));
    write_output(opt.out, render_det_scan(rows, fmt));
    double min_margin = std::numeric_limits<double>::infinity();
    for (const auto& ev : rows) min_margin = std::min(min_margin, ev.margins.worst());
    return verdict_from_margin(min_margin);
  }
  if (command == "spectrum") {
    write_output(opt.out, render_spectrum(find_zeros(op), fmt));
    return 0;
  }
  if (command == "lt-check") {
    std::vector<double> epsilons =
        opt.epsilons.empty() ? default_epsilons() : parse_epsilons(opt.epsilons);
    std::vector<FamilyMember> self{{opt.config, op}};
    auto reports = family_sweep(self, epsilons);
    write_output(opt.out, render_reports(reports, fmt));
    return verdict_from_reports(reports);
  }
  if (command == "enclosure") {
    auto report = analyze_operator(opt.config, op, 0.5);
    write_output(opt.out, render_enclosure(report, fmt));
    return report.violation ? 1 : 0;
  }
  if (command == "oracle-compare") {
    auto rows = audit_bounds(
        op, polar_grid(grid.n_r, grid.n_theta, grid.r_min, grid.r_max), true);
    write_output(opt.out, render_oracle_compare(rows, fmt));
    for (const auto& ev : rows)
      if (ev.oracle_value &&
          std::abs(ev.u_value - *ev.oracle_value) >
              kRouteTol * (1.0 + std::abs(*ev.oracle_value)))
        return 1;
    return 0;
  }
  if (command == "section") {
    auto zeros = find_zeros(op).zeros;
    auto result = finite_section_eigenvalues(op, opt.section_n, zeros);
    write_output(opt.out, render_finite_section(result, fmt));
    return 0;
  }
  throw ConfigError("unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jost solutions, perturbation determinants, and discrete spectra of"
               " non-self-adjoint whole-line Jacobi operators"};
  app.require_subcommand(1);

  Options opt;
  std::vector<CLI::App*> subs;
  for (const char* name : {"jost", "det-scan", "spectrum", "lt-check", "enclosure",
                           "oracle-compare", "sweep", "section"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", opt.config, "operator (or family) JSON path")->required();
    sub->add_option("--out", opt.out, "output path, '-' for stdout");
    sub->add_option("--format", opt.format, "json|csv");
    sub->add_option("--grid", opt.grid, "polar grid NR,NT,RMIN,RMAX");
    sub->add_option("--epsilon", opt.epsilons, "epsilon list E[,E...]");
    sub->add_option("--section-n", opt.section_n, "finite-section half width");
    sub->add_option("--seed", opt.seed, "seed for random families");
    sub->add_option("--z", opt.z, "spectral parameter RE,IM (jost)");
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return run_command(app.get_subcommands().front()->get_name(), opt);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EdgeProximityError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
