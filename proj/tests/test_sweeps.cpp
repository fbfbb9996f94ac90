#include "qtel/sweeps.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <sstream>

using namespace qtel;

TEST_CASE("number formatting") {
  CHECK(format_value(0.0) == "0");
  CHECK(format_value(0.5) == "0.5");
  CHECK(format_value(1.0 / 3.0) == "0.333333333333");
  CHECK(format_value(2e-7).find('e') != std::string::npos);
  CHECK(std::strtod(format_value(2.0 / 81.0).c_str(), nullptr) ==
        doctest::Approx(2.0 / 81.0).epsilon(1e-11));
}

TEST_CASE("sweep output is byte-deterministic") {
  const Table a = fig2_table(6, 6, 42);
  const Table b = fig2_table(6, 6, 42);
  CHECK(to_csv(a) == to_csv(b));
  CHECK(to_json(a) == to_json(b));
  const Table f1 = fig3_table(0.6, {0.2}, 5e-3, 40, 42);
  const Table f2 = fig3_table(0.6, {0.2}, 5e-3, 40, 42);
  CHECK(to_csv(f1) == to_csv(f2));
}

TEST_CASE("CSV and JSON carry identical values") {
  const Table t = fidelity_table(5, 5, 42);
  const std::string csv = to_csv(t);
  const auto parsed = nlohmann::json::parse(to_json(t));

  std::vector<std::vector<double>> csv_rows;
  std::istringstream in(csv);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      row.push_back(std::strtod(cell.c_str(), nullptr));
    }
    csv_rows.push_back(row);
  }

  REQUIRE(parsed["rows"].size() == csv_rows.size());
  for (std::size_t r = 0; r < csv_rows.size(); ++r) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      CHECK(parsed["rows"][r][t.columns[c]].get<double>() == csv_rows[r][c]);
    }
  }
}

TEST_CASE("surface tables satisfy their schema and tolerance") {
  const Table fig2 = fig2_table(6, 6, 42);
  CHECK(fig2.columns ==
        std::vector<std::string>{"e12", "ew", "e78_formula", "e78_oracle",
                                 "deviation"});
  CHECK(fig2.rows.size() == 36);
  for (const auto& row : fig2.rows) {
    REQUIRE(row.size() == 5);
    CHECK(row[4] < 1e-9);
  }
  // corners: (1,1) -> 1; (0, .) -> 0
  CHECK(fig2.rows.back()[2] == doctest::Approx(1.0).epsilon(1e-12));
  for (int j = 0; j < 6; ++j) {
    CHECK(fig2.rows[j][2] == 0.0);
  }

  const Table fid = fidelity_table(6, 6, 42);
  for (const auto& row : fid.rows) CHECK(row[4] < 1e-9);
  CHECK(fid.rows[0][2] == doctest::Approx(4.0 / 9.0));  // (0, 0)
  for (int i = 0; i < 6; ++i) {
    CHECK(fid.rows[i * 6 + 5][2] == doctest::Approx(1.0));  // ew = 1 column
  }

  const Table info = info_table(6, 6, 42);
  for (const auto& row : info.rows) CHECK(row[5] < 1e-9);
  CHECK(info.rows.back()[2] == doctest::Approx(2.0));           // ic12 at e12=1
  CHECK(info.rows[5 * 6][3] == doctest::Approx(2.0 / 81.0));    // e12=1, ew=0
}

TEST_CASE("fig3 sweep bins by target and orders by purity") {
  const Table t = fig3_table(0.6, {0.20, 2.0}, 5e-3, 60, 42);
  bool has_zero = false, has_positive = false;
  double prev_p72 = -1.0;
  std::size_t target_rows = 0;
  for (const auto& row : t.rows) {
    if (row[0] != 0.20) continue;
    ++target_rows;
    CHECK(std::abs(row[3] - 0.20) <= 5e-3);  // e72 within tolerance
    CHECK(row[4] >= prev_p72);               // sorted by p72
    prev_p72 = row[4];
    if (row[5] == 0.0) has_zero = true;
    if (row[5] > 0.0) has_positive = true;
  }
  CHECK(target_rows > 0);
  // low-purity rows transfer no entanglement, high-purity rows do
  CHECK(has_zero);
  CHECK(has_positive);
  // e78 grows with purity across the curve ends
  std::vector<const std::vector<double>*> curve;
  for (const auto& row : t.rows) {
    if (row[0] == 0.20) curve.push_back(&row);
  }
  CHECK((*curve.back())[5] > (*curve.front())[5]);

  // unreachable target produces a warning entry, not an error
  bool warned = false;
  for (const auto& [key, value] : t.meta) {
    if (key == "warning" && value.find("2") != std::string::npos) {
      warned = true;
    }
  }
  CHECK(warned);
}

TEST_CASE("verify passes at the default tolerance and reports deviations") {
  const VerifyReport report = run_verify(0.25, 5, 42);
  CHECK(report.checks.size() == 6);
  CHECK(report.passed(1e-9));
  CHECK_FALSE(report.passed(1e-16));
  const std::string text = report.render(1e-9);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("all checks passed") != std::string::npos);
}

TEST_CASE("sweep input validation") {
  CHECK_THROWS(run_verify(0.0, 5, 42));
  CHECK_THROWS(run_verify(0.6, 5, 42));
  CHECK_THROWS(run_verify(0.1, 0, 42));
  CHECK_THROWS(fig2_table(1, 6, 42));
  CHECK_THROWS(fig3_table(1.5, {0.2}, 1e-3, 40, 42));
  CHECK_THROWS(fig3_table(0.6, {0.2}, 1e-3, 1, 42));
}
