#pragma once

#include <string>

#include "x0gal/errors.hpp"

namespace x0gal {

enum class Hyperelliptic { yes, no, low_genus_other };

struct CurveInvariants {
  long N = 0;
  long mu = 0;     // index [SL2(Z) : Gamma_0(N)]
  long nu2 = 0;    // elliptic points of order 2
  long nu3 = 0;    // elliptic points of order 3
  long cusps = 0;
  long genus = 0;
  Hyperelliptic hyperelliptic = Hyperelliptic::low_genus_other;
};

CurveInvariants curve_invariants(long N);

// dim S_m(Gamma_0(N)) for even m >= 2 (m = 2 gives the genus)
long dim_cusp_forms(long N, long m);

// dim S_m + g - 1 - eps_m, eps_2 = 1 and eps_m = 0 for m >= 4
long l_bound(long N, long m);

// number of leading q-coefficients whose vanishing certifies the zero form
long sturm_precision(long N, long weight);

std::string to_string(Hyperelliptic h);

}  // namespace x0gal
