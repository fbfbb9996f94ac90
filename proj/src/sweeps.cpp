#include "qtel/sweeps.hpp"

#include "qtel/formulas.hpp"
#include "qtel/measures.hpp"
#include "qtel/states.hpp"
#include "qtel/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qtel {

namespace {

double theta_for(double e12) { return std::asin(std::clamp(e12, 0.0, 1.0)) / 2.0; }

std::vector<double> unit_grid(int steps) {
  if (steps < 2) throw std::invalid_argument("grid needs at least 2 steps");
  std::vector<double> g(steps);
  for (int i = 0; i < steps; ++i) g[i] = static_cast<double>(i) / (steps - 1);
  return g;
}

std::vector<double> step_grid(double step) {
  std::vector<double> g;
  for (double x = 0.0; x < 1.0 + step / 2.0; x += step) g.push_back(std::min(x, 1.0));
  return g;
}

void add_common_meta(Table& t, const std::string& command, std::uint64_t seed) {
  t.meta.emplace_back("tool", kToolVersion);
  t.meta.emplace_back("command", command);
  t.meta.emplace_back("seed", std::to_string(seed));
}

}  // namespace

std::string format_value(double x) {
  char buf[40];
  if (x == 0.0) return "0";
  if (std::abs(x) < 1e-4) {
    std::snprintf(buf, sizeof buf, "%.11e", x);
  } else {
    std::snprintf(buf, sizeof buf, "%.12g", x);
  }
  return buf;
}

std::string to_csv(const Table& table) {
  std::ostringstream out;
  for (const auto& [key, value] : table.meta) {
    out << "# " << key << ": " << value << "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_value(row[i]);
    }
    out << "\n";
  }
  return out.str();
}

std::string to_json(const Table& table) {
  std::ostringstream out;
  out << "{\n  \"meta\": {";
  for (std::size_t i = 0; i < table.meta.size(); ++i) {
    out << (i ? ",\n    " : "\n    ") << "\"" << table.meta[i].first << "\": \""
        << table.meta[i].second << "\"";
  }
  out << "\n  },\n  \"rows\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n    " : "\n    ") << "{";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? ", " : "") << "\"" << table.columns[i]
          << "\": " << format_value(table.rows[r][i]);
    }
    out << "}";
  }
  out << "\n  ]\n}\n";
  return out.str();
}

bool VerifyReport::passed(double tol) const {
  return std::all_of(checks.begin(), checks.end(),
                     [tol](const VerifyCheck& c) { return c.max_deviation < tol; });
}

std::string VerifyReport::render(double tol) const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.max_deviation < tol ? "PASS" : "FAIL") << "  " << c.name
        << "  max deviation " << format_value(c.max_deviation) << "\n";
  }
  for (const auto& n : notes) out << "note: " << n << "\n";
  out << (passed(tol) ? "verify: all checks passed" : "verify: FAILURES above")
      << " (tolerance " << format_value(tol) << ")\n";
  return out.str();
}

VerifyReport run_verify(double grid_step, int seeds, std::uint64_t seed) {
  if (grid_step <= 0.0 || grid_step > 0.5) {
    throw std::invalid_argument("grid step must lie in (0, 0.5]");
  }
  if (seeds < 1) throw std::invalid_argument("seed count must be >= 1");

  VerifyCheck eq4{"fidelity (replica vs input)", 0.0};
  VerifyCheck eq5{"replica entanglement", 0.0};
  VerifyCheck eq8{"correlation dissipation kappa^4", 0.0};
  VerifyCheck eq9{"two-step correlation kappa^2", 0.0};
  VerifyCheck eq10{"intermediate correlation", 0.0};
  VerifyCheck quad{"intermediate entanglement quadratic", 0.0};
  VerifyReport report;

  const std::vector<double> grid = step_grid(grid_step);

  auto run_input = [&](const cvec& psi) {
    const cmat rho_in = projector(psi);
    const double e12 = entanglement(rho_in);
    const double ic12 = correlation_information(rho_in);
    for (double ew : grid) {
      const WernerChannel ch{ew};
      const cmat out = teleport_two(rho_in, ch, ch).state;
      eq4.max_deviation = std::max(
          eq4.max_deviation,
          std::abs(fidelity(psi, out) - fidelity_formula(e12, ew)));
      eq5.max_deviation = std::max(
          eq5.max_deviation,
          std::abs(entanglement(out) - replica_entanglement_formula(e12, ew)));
      eq8.max_deviation = std::max(
          eq8.max_deviation,
          std::abs(correlation_information(out) - correlation_transfer(ic12, ew)));

      const double k2 = kappa(ew) * kappa(ew);
      const cmat rho72 = teleport_one(rho_in, 1, ch).state;
      const double ic72 = correlation_information(rho72);
      eq9.max_deviation =
          std::max(eq9.max_deviation, std::abs(ic72 - k2 * ic12));
      const cmat rho78 = teleport_one(rho72, 2, ch).state;
      eq9.max_deviation = std::max(
          eq9.max_deviation,
          std::abs(correlation_information(rho78) - k2 * ic72));

      if (ew > 0.0) {
        const double e72 = entanglement(rho72);
        if (e72 == 0.0) {
          report.notes.push_back(
              "e72 = 0 with entangled channel ew = " + format_value(ew) +
              ", e12 = " + format_value(e12) + "; formula value used as-is");
        }
        eq10.max_deviation = std::max(
            eq10.max_deviation,
            std::abs(intermediate_correlation(e72, ew) - ic72));
        const double u = 1.0 - kappa(ew);
        quad.max_deviation = std::max(
            quad.max_deviation,
            std::abs(e72 * e72 + u * e72 - ew * (2.0 + ew) * e12 * e12 / 3.0));
      }
    }
  };

  for (double e12 : grid) run_input(schmidt_pure(theta_for(e12)));
  for (int i = 0; i < seeds; ++i) run_input(random_pure(seed + i));

  report.checks = {eq4, eq5, eq8, eq9, eq10, quad};
  return report;
}

Table fig2_table(int e12_steps, int ew_steps, std::uint64_t seed) {
  Table t;
  add_common_meta(t, "fig2", seed);
  t.meta.emplace_back("grid", std::to_string(e12_steps) + "x" + std::to_string(ew_steps));
  t.columns = {"e12", "ew", "e78_formula", "e78_oracle", "deviation"};
  for (double e12 : unit_grid(e12_steps)) {
    const cmat rho_in = projector(schmidt_pure(theta_for(e12)));
    for (double ew : unit_grid(ew_steps)) {
      const WernerChannel ch{ew};
      const double oracle = entanglement(teleport_two(rho_in, ch, ch).state);
      const double formula = replica_entanglement_formula(e12, ew);
      t.rows.push_back({e12, ew, formula, oracle, std::abs(formula - oracle)});
    }
  }
  return t;
}

Table fidelity_table(int e12_steps, int ew_steps, std::uint64_t seed) {
  Table t;
  add_common_meta(t, "fidelity", seed);
  t.meta.emplace_back("grid", std::to_string(e12_steps) + "x" + std::to_string(ew_steps));
  t.columns = {"e12", "ew", "f_formula", "f_oracle", "deviation"};
  for (double e12 : unit_grid(e12_steps)) {
    const cvec psi = schmidt_pure(theta_for(e12));
    const cmat rho_in = projector(psi);
    for (double ew : unit_grid(ew_steps)) {
      const WernerChannel ch{ew};
      const double oracle = fidelity(psi, teleport_two(rho_in, ch, ch).state);
      const double formula = fidelity_formula(e12, ew);
      t.rows.push_back({e12, ew, formula, oracle, std::abs(formula - oracle)});
    }
  }
  return t;
}

Table info_table(int e12_steps, int ew_steps, std::uint64_t seed) {
  Table t;
  add_common_meta(t, "info", seed);
  t.meta.emplace_back("grid", std::to_string(e12_steps) + "x" + std::to_string(ew_steps));
  t.columns = {"e12", "ew", "ic12", "ic78_formula", "ic78_oracle", "deviation"};
  for (double e12 : unit_grid(e12_steps)) {
    const cmat rho_in = projector(schmidt_pure(theta_for(e12)));
    const double ic12 = correlation_information(rho_in);
    for (double ew : unit_grid(ew_steps)) {
      const WernerChannel ch{ew};
      const double oracle =
          correlation_information(teleport_two(rho_in, ch, ch).state);
      const double formula = correlation_transfer(ic12, ew);
      t.rows.push_back(
          {e12, ew, ic12, formula, oracle, std::abs(formula - oracle)});
    }
  }
  return t;
}

Table fig3_table(double e46, const std::vector<double>& targets,
                 double target_tol, int density, std::uint64_t seed) {
  if (e46 < 0.0 || e46 > 1.0) {
    throw std::invalid_argument("e46 must lie in [0, 1]");
  }
  if (density < 2) throw std::invalid_argument("sweep density must be >= 2");

  Table t;
  add_common_meta(t, "fig3", seed);
  t.meta.emplace_back("e46", format_value(e46));
  t.meta.emplace_back("density", std::to_string(density));
  t.meta.emplace_back("target_tol", format_value(target_tol));
  t.meta.emplace_back(
      "strategy",
      "sweep (theta, ew1), bin rows by intermediate entanglement e72");
  t.columns = {"target", "theta", "ew1", "e72", "p72", "e78"};

  struct Sample {
    double theta, ew1, e72, p72;
    cmat rho72;
  };
  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(density) * density);
  for (int i = 0; i < density; ++i) {
    const double theta =
        std::numbers::pi / 4.0 * static_cast<double>(i) / (density - 1);
    const cmat rho_in = projector(schmidt_pure(theta));
    for (int j = 0; j < density; ++j) {
      const double ew1 = static_cast<double>(j) / (density - 1);
      const cmat rho72 = teleport_one(rho_in, 1, WernerChannel{ew1}).state;
      samples.push_back(
          {theta, ew1, entanglement(rho72), purity(rho72), rho72});
    }
  }

  for (double target : targets) {
    bool any = false;
    std::vector<std::vector<double>> rows;
    for (const Sample& s : samples) {
      if (std::abs(s.e72 - target) > target_tol) continue;
      any = true;
      const double e78 =
          entanglement(teleport_one(s.rho72, 2, WernerChannel{e46}).state);
      rows.push_back({target, s.theta, s.ew1, s.e72, s.p72, e78});
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& x, const auto& y) { return x[4] < y[4]; });
    if (!any) {
      t.meta.emplace_back("warning",
                          "no samples within tolerance of target e72 = " +
                              format_value(target));
    }
    t.rows.insert(t.rows.end(), rows.begin(), rows.end());
  }
  return t;
}

}  // namespace qtel
