#pragma once

#include <vector>

#include "x0gal/modcurve.hpp"
#include "x0gal/poly.hpp"
#include "x0gal/qexp.hpp"

namespace x0gal {

// Minimal-degree integral relation P(f, g, h) = 0, certified through the
// Sturm depth for each candidate degree. The returned form is primitive
// and sign-normalized; the kernel at the minimal degree must be
// one-dimensional.
TernaryForm find_relation(const QExpansion& f, const QExpansion& g, const QExpansion& h,
                          int maxdeg);

// true iff P(f, g, h) vanishes through the Sturm depth for its weight
bool verify_relation(const TernaryForm& P, const QExpansion& f, const QExpansion& g,
                     const QExpansion& h);

struct DegreeReport {
  bool operator==(const DegreeReport&) const = default;

  int deg_T = 0;
  int total_degree = 0;
  long lbound = 0;
  long genus = 0;
  bool genus_bound_applies = false;  // f, g are the two deepest-vanishing forms
  bool birational = false;           // 2 * total_degree > lbound
  bool full_genus_degree = false;    // deg_T equals the genus bound
};

DegreeReport degree_report(const BiPoly& Q, long N, long m, const CurveInvariants& inv,
                           bool fg_deepest);

struct ConicVerdict {
  TernaryForm conic;
  long genus = 0;
  long bound = 0;  // 2(g-1) - (min vanishing order - 1)
  bool degree_two_extension = false;
};

// basis: weight-2 forms ordered by vanishing order; the three with orders
// g-2, g-1, g are used
ConicVerdict hyperelliptic_conic(const std::vector<QExpansion>& basis);

}  // namespace x0gal
