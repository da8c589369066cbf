#pragma once

#include <map>
#include <boost/multiprecision/cpp_int.hpp>

#include "x0gal/errors.hpp"

namespace x0gal {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Truncated q-series with exact rational coefficients. Coefficients of
// q^n are known for every n <= prec(); exponents may be negative for
// quotients (j = E4^3 / Delta starts at q^-1). Values are immutable
// after construction; all operations are pure.
class QExpansion {
 public:
  // sentinel for exactly-known series (constants)
  static constexpr long kExactPrec = 1L << 48;

  // prec may drop to 0 or below only through division (Laurent windows);
  // constructed forms and parsed files always have prec >= 1
  QExpansion(long level, long weight, long prec)
      : level_(level), weight_(weight), prec_(prec) {
    if (level < 1) throw Error("level must be positive");
  }

  long level() const { return level_; }
  long weight() const { return weight_; }
  long prec() const { return prec_; }

  // builder; exponent beyond prec is rejected, zeros are dropped
  void set_coeff(long n, const Rat& c);

  // the coefficient of q^n; asking past the known window is an error
  Rat coeff(long n) const;

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<long, Rat>& coeffs() const { return coeffs_; }

  // smallest exponent with nonzero coefficient
  long valuation() const;

  bool same_series(const QExpansion& other) const;

 private:
  long level_, weight_, prec_;
  std::map<long, Rat> coeffs_;
};

QExpansion qexp_add(const QExpansion& a, const QExpansion& b);
QExpansion qexp_sub(const QExpansion& a, const QExpansion& b);
QExpansion qexp_scale(const QExpansion& a, const Rat& s);
QExpansion qexp_mul(const QExpansion& a, const QExpansion& b);
QExpansion qexp_pow(const QExpansion& a, long k);
QExpansion monomial_eval(const QExpansion& f, const QExpansion& g, const QExpansion& h,
                         long a, long b, long c);
QExpansion qexp_div(const QExpansion& num, const QExpansion& den);
long vanishing_order(const QExpansion& a);

// classical series at level 1
QExpansion eisenstein_e4(long prec);
QExpansion delta(long prec);

// the same series reported only through q^p
QExpansion truncated(const QExpansion& a, long p);

}  // namespace x0gal
