#pragma once

#include <json.hpp>

#include "charlib.hpp"

namespace biham {

struct CheckRecord {
  std::string name;
  std::string inputs;
  std::string expected;
  std::string actual;
  bool pass = false;
  bool gating = true;  // informational records never fail a suite
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  long long elapsed_ms = 0;
  bool pass() const;
  nlohmann::json to_json() const;
  std::string human_summary() const;
};

/// Known suites: dims, characters, multiplicities, basis, poset, residue.
std::vector<std::string> suite_names();

/// Runs one suite (or "all"). max_n <= 0 selects each suite's default cap;
/// larger values are clamped to the per-suite hard limits.
VerificationReport run_suite(const std::string& suite, int max_n = 0, int jobs = 0);

/// Lie2 character series assembled from brute-force traces (degrees 1..n).
SymL brute_lie2_series(int n, int jobs = 0);

/// P2 characters through the composed brute route F_Com o (brute Lie2).
SymL brute_p2_series(int n, int jobs = 0);

/// Dimension table. Routes: formula | invert | brute (brute caps at the
/// free-algebra limit; com2 supports formula only).
nlohmann::json dims_json(Operad op, int max_n, const std::string& route, int jobs = 0);
std::string dims_text(const nlohmann::json& table);

/// Character tables; route formula | mt | brute. The mt route reports the
/// printed-form value alongside whenever it differs from the calibrated one.
nlohmann::json character_table_json(Operad op, int n, const std::string& route,
                                    const std::vector<Exponents>& classes, int jobs = 0);
std::string character_table_text(const nlohmann::json& table);

}  // namespace biham
