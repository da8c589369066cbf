#pragma once

#include <cstdint>
#include <vector>

#include "x0gal/poly.hpp"

namespace x0gal {

// Dense univariate polynomial over F_p, coefficients ascending; the
// leading coefficient is nonzero (the zero polynomial has empty c).
struct FpPoly {
  long long p = 0;
  std::vector<long long> c;

  bool operator==(const FpPoly&) const = default;

  int degree() const { return (int)c.size() - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_constant() const { return c.size() <= 1; }
  long long coeff(int i) const { return i < (int)c.size() ? c[i] : 0; }

  static FpPoly make(long long p, std::vector<long long> raw);
};

bool is_prime(long long p);

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b);
FpPoly fp_monic(const FpPoly& a);
FpPoly fp_derivative(const FpPoly& a);
FpPoly fp_gcd(FpPoly a, FpPoly b);  // monic; gcd(f, 0) is monic f
FpPoly fp_pow_mod(const FpPoly& base, long long e, const FpPoly& mod);

// evaluate the lambda-coefficients of a monic-in-T polynomial at r mod p
FpPoly specialize_mod(const BiPoly& Qt, long long r, long long p);

bool is_squarefree(const FpPoly& f);

// multiset of (degree, count) of the irreducible factors of a monic
// squarefree polynomial; Frobenius powers by repeated squaring
std::vector<std::pair<int, int>> distinct_degree_factorization(const FpPoly& f);

}  // namespace x0gal
