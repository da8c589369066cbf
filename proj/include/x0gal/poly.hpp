#pragma once

#include <array>
#include <map>
#include <vector>

#include "x0gal/qexp.hpp"

namespace x0gal {

// Homogeneous integer form in (x0, x1, x2) = (f, g, h). Normalized forms
// are primitive with the lexicographically first nonzero coefficient
// positive (keys ordered ascending as (a, b, c) triples).
struct TernaryForm {
  std::map<std::array<int, 3>, Int> coeffs;

  bool operator==(const TernaryForm&) const = default;

  int degree() const;
  bool is_zero() const { return coeffs.empty(); }
  bool homogeneous() const;
  Int content() const;
  TernaryForm negated() const;
  TernaryForm normalized() const;  // primitive + sign rule
  void set(int a, int b, int c, Int v);
};

// Q(lambda, T) with integer coefficients, keyed by (lambda degree, T degree).
// The dehomogenization convention is lambda = g/f, T = h/f.
struct BiPoly {
  std::map<std::pair<int, int>, Int> coeffs;

  bool operator==(const BiPoly&) const = default;

  int deg_T() const;
  int deg_lambda() const;
  int total_degree() const;
  bool is_zero() const { return coeffs.empty(); }
  bool depends_on_lambda() const;
  bool monic_in_T() const;   // leading T-coefficient is the constant 1
  bool even_in_T() const;    // only even T-powers
  Int content() const;
  std::vector<Int> lambda_coeff(int k) const;  // a_k(lambda), dense ascending
  void set(int i, int k, Int v);
};

BiPoly dehomogenize(const TernaryForm& P);
TernaryForm homogenize(const BiPoly& Q);

// a_n(lambda)^(n-1) Q(lambda, T / a_n(lambda)); monic in T, integral
BiPoly monicize(const BiPoly& Q);

// the monic polynomial obtained from Qt by T -> -T (up to the global sign
// that restores monicity); monicize(-Q) == mirror_T(monicize(Q))
BiPoly mirror_T(const BiPoly& Qt);

Int eval_bipoly(const BiPoly& Q, const Int& lambda, const Int& t);
Int eval_lambda_poly(const std::vector<Int>& c, const Int& lambda);

}  // namespace x0gal
