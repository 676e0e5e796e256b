#ifndef TWINREP_SUITE_HPP
#define TWINREP_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "twinrep/analysis.hpp"

namespace twinrep::cli {

struct CheckResult {
  std::string id;
  std::string status;  // "pass" | "fail" | "skipped"
  std::string detail;
};

struct RunReport {
  std::string command;
  std::string selector;
  uint64_t seed = 0;
  int n = 4;
  std::vector<CheckResult> checks;

  bool all_ok() const;
  /// Deterministic machine form: same command + seed give identical bytes
  /// (wall time is reported on the human channel only).
  std::string to_json() const;
  static RunReport from_json(const std::string& text);
};

struct SuiteOptions {
  int n = 4;
  uint64_t seed = 0;
  bool self_test = false;  // run against an empty catalog: everything skips
};

const std::vector<std::string>& suite_selectors();

/// Executes the checks anchored to one classification/irreducibility/
/// faithfulness statement (or the classical fixtures, or everything).
RunReport run_theorem_suite(const std::string& selector, const SuiteOptions& opts);

// Granular check groups, shared between the suite runner and the acceptance
// binary.  Each returns one result per verification performed.
std::vector<CheckResult> check_relations(groups::GroupTag tag, const std::vector<int>& ns);
std::vector<CheckResult> check_mutation_detection();
std::vector<CheckResult> check_constraints();
std::vector<CheckResult> check_completeness(int count, uint64_t seed);
std::vector<CheckResult> check_reducibility(groups::GroupTag tag, const std::vector<int>& ns);
std::vector<CheckResult> check_reducibility_anchors();
std::vector<CheckResult> check_factor_chain_tau1();
std::vector<CheckResult> check_factor_chain_tau2();
std::vector<CheckResult> check_meataxe_tau1_grid(uint64_t seed);
std::vector<CheckResult> check_meataxe_tau2_grid(uint64_t seed);
std::vector<CheckResult> check_faithfulness_catalog(groups::GroupTag tag);
std::vector<CheckResult> check_classical_fixtures();
std::vector<CheckResult> check_properties(uint64_t seed);

}  // namespace twinrep::cli

#endif
