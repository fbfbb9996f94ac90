#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qtel {

inline constexpr const char* kToolVersion = "qtel 1.0.0";

/// One parameter-sweep output surface: run metadata, column names, and
/// numeric rows. Serialized to CSV (metadata as '#' comment lines) or
/// JSON ({"meta": ..., "rows": [...]}) with identical values.
struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Decimal with 12 significant digits; scientific for |x| < 1e-4.
std::string format_value(double x);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

struct VerifyCheck {
  std::string name;
  double max_deviation;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  std::vector<std::string> notes;

  bool passed(double tol) const;
  std::string render(double tol) const;
};

/// Oracle-vs-formula comparison of the fidelity, replica-entanglement,
/// correlation-dissipation, two-step and intermediate-correlation laws
/// over an (e12, ew) grid plus Haar-random pure inputs.
VerifyReport run_verify(double grid_step, int seeds, std::uint64_t seed);

/// Replica entanglement surface: e12, ew, e78_formula, e78_oracle, deviation.
Table fig2_table(int e12_steps, int ew_steps, std::uint64_t seed);

/// Partial-teleportation sweep: vary (theta, ew1), bin rows whose
/// intermediate entanglement e72 lands near each target, then teleport
/// the second particle through a channel of entanglement e46.
Table fig3_table(double e46, const std::vector<double>& targets,
                 double target_tol, int density, std::uint64_t seed);

/// Fidelity surface: e12, ew, f_formula, f_oracle, deviation.
Table fidelity_table(int e12_steps, int ew_steps, std::uint64_t seed);

/// Correlation-information surface: e12, ew, ic12, ic78_formula,
/// ic78_oracle, deviation.
Table info_table(int e12_steps, int ew_steps, std::uint64_t seed);

}  // namespace qtel
