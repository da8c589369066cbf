#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "x0gal/poly.hpp"
#include "x0gal/qexp.hpp"

namespace x0gal {

// One verification case: either recover the relation from a form triple,
// run the conic construction on a basis, or start from a bundled
// polynomial (used where the source prints the polynomial but not
// expansions long enough to recover it).
struct CaseSpec {
  std::string name;
  std::string kind;  // "relation" | "conic" | "bundled"
  std::vector<std::string> forms;  // labels; sums like "f3+f4" allowed
  int maxdeg = 0;
  bool fg_deepest = false;
  std::optional<BiPoly> bundled_Q;

  // expectations for verification runs
  std::optional<TernaryForm> expected_relation;
  std::optional<BiPoly> expected_Q;
  std::optional<BiPoly> expected_Qt;
  std::string expected_group;
  std::vector<std::string> required_certificates;
  bool expect_degree_two = false;   // conic cases
  bool expect_birational = false;
  std::string note;
};

struct Dataset {
  std::string label;
  long N = 0;
  long weight = 2;
  std::map<std::string, QExpansion> forms;
  std::vector<CaseSpec> cases;
};

// reads <data_dir>/datasets.json and the qexp files it references
std::map<std::string, Dataset> load_datasets(const std::string& data_dir);

// a named form, or a '+'-separated sum of named forms
QExpansion resolve_form(const Dataset& ds, const std::string& ref);

}  // namespace x0gal
