#pragma once

#include "x0gal/dataset.hpp"
#include "x0gal/report.hpp"

namespace x0gal {

// relation -> Q -> Qtilde -> degree report -> sampling -> verdict
Report run_pipeline(const Dataset& ds, const CaseSpec& cs, const SampleBudget& budget);

struct CaseResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;
  std::string verdict;
};

struct VerifySummary {
  std::vector<CaseResult> cases;
  bool all_passed = true;
};

// runs every bundled case and compares against the recorded expectations;
// polynomial comparisons are exact up to a global sign
VerifySummary verify_paper(const std::map<std::string, Dataset>& datasets,
                           const SampleBudget& budget);

}  // namespace x0gal
