#pragma once

#include <string>

#include <json.hpp>

#include "x0gal/galois.hpp"
#include "x0gal/relation.hpp"

namespace x0gal {

struct Report {
  std::string dataset;
  std::string case_name;
  long N = 0;
  long weight = 0;
  std::string relation_source;  // "recovered" | "bundled"
  TernaryForm relation;
  BiPoly Q;
  BiPoly Qt;
  DegreeReport degrees;
  ExclusionRule exclusions;
  GroupVerdict verdict;
  SampleBudget budget;

  bool operator==(const Report&) const;
};

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

// 0 identified, 2 candidate-set-only
int exit_code_for(const GroupVerdict& v);

}  // namespace x0gal
