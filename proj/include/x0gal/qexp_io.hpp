#pragma once

#include <string>
#include <vector>

#include "x0gal/qexp.hpp"

namespace x0gal {

struct LabeledForm {
  std::string label;
  QExpansion series;
};

// Format (one file may hold several expansions):
//   # qexp v1
//   N=72 weight=2 label=f0 prec=40
//   5 1
//   11 -2
// Coefficients are signed integers or num/den fractions; '#' starts a
// comment; unlisted exponents within the precision are zero.
std::vector<LabeledForm> parse_qexp_file(const std::string& path);
std::vector<LabeledForm> parse_qexp_text(const std::string& text, const std::string& origin);

}  // namespace x0gal
