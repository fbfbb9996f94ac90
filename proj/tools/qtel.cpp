// Command-line front end: verification runs and figure-data sweeps.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "qtel/sweeps.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

int emit(const qtel::Table& table, const std::string& format,
         const std::string& out_path) {
  const std::string text =
      (format == "json") ? qtel::to_json(table) : qtel::to_csv(table);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum teleportation of two-qubit entangled states "
               "through Werner channels: verification and sweep data"};
  app.require_subcommand(1);
  app.fallthrough();  // common flags may follow the subcommand name

  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "output path (default stdout)");
  app.add_option("--seed", seed, "seed for random pure-state draws");
  app.add_option("--tol", tol, "verification tolerance");

  auto* verify = app.add_subcommand("verify", "oracle vs closed-form laws");
  double grid_step = 0.1;
  int seeds = 50;
  verify->add_option("--grid-step", grid_step, "entanglement grid step");
  verify->add_option("--seeds", seeds, "number of random pure inputs");

  auto* fig2 = app.add_subcommand("fig2", "replica entanglement surface");
  int e12_steps = 101, ew_steps = 101;
  fig2->add_option("--e12-steps", e12_steps, "grid points in e12");
  fig2->add_option("--ew-steps", ew_steps, "grid points in ew");

  auto* fig3 = app.add_subcommand(
      "fig3", "replica entanglement vs intermediate-state purity");
  double e46 = 0.6;
  std::vector<double> targets = {0.16, 0.18, 0.20, 0.21};
  double target_tol = 1e-3;
  int density = 200;
  fig3->add_option("--e46", e46, "second-channel entanglement");
  fig3->add_option("--targets", targets, "intermediate entanglement targets");
  fig3->add_option("--target-tol", target_tol, "binning tolerance on e72");
  fig3->add_option("--density", density, "sweep density per axis");

  auto* fid = app.add_subcommand("fidelity", "fidelity surface");
  fid->add_option("--e12-steps", e12_steps, "grid points in e12");
  fid->add_option("--ew-steps", ew_steps, "grid points in ew");

  auto* info = app.add_subcommand("info", "correlation information surface");
  info->add_option("--e12-steps", e12_steps, "grid points in e12");
  info->add_option("--ew-steps", ew_steps, "grid points in ew");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      const qtel::VerifyReport report = qtel::run_verify(grid_step, seeds, seed);
      std::cout << report.render(tol);
      return report.passed(tol) ? 0 : 1;
    }
    qtel::Table table;
    if (fig2->parsed()) {
      table = qtel::fig2_table(e12_steps, ew_steps, seed);
    } else if (fig3->parsed()) {
      table = qtel::fig3_table(e46, targets, target_tol, density, seed);
    } else if (fid->parsed()) {
      table = qtel::fidelity_table(e12_steps, ew_steps, seed);
    } else {
      table = qtel::info_table(e12_steps, ew_steps, seed);
    }
    return emit(table, format, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
