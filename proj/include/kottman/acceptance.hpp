#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "kottman/config.hpp"
#include "kottman/kernels.hpp"

namespace kottman {

struct AcceptanceOptions {
  Budgets budgets;
  Execution ex = Execution::parallel;
  /// Cuts the random trial counts to a tenth; affected lines say so.
  bool quick = false;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct ClaimRow {
  std::string name;
  int published = 0;
  int computed = 0;
  std::string upper_method;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  std::vector<ClaimRow> claims;
  bool passed() const;
};

/// Runs every criterion, printing one PASS/FAIL line each as it finishes,
/// then the table of published values against computed ones.
AcceptanceReport run_acceptance(const AcceptanceOptions& options, std::ostream& out);

}  // namespace kottman
