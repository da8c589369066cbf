#include "x0gal/qexp.hpp"

#include <algorithm>
#include <vector>

namespace x0gal {

void QExpansion::set_coeff(long n, const Rat& c) {
  if (n > prec_) throw PrecisionError("coefficient exponent beyond declared precision");
  if (c == 0)
    coeffs_.erase(n);
  else
    coeffs_[n] = c;
}

Rat QExpansion::coeff(long n) const {
  if (n > prec_) throw PrecisionError("coefficient requested beyond known precision");
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

long QExpansion::valuation() const {
  if (coeffs_.empty()) throw ZeroSeries("valuation of a series that is zero to its precision");
  return coeffs_.begin()->first;
}

bool QExpansion::same_series(const QExpansion& other) const {
  long p = std::min(prec_, other.prec_);
  for (const auto& [n, c] : coeffs_)
    if (n <= p && other.coeff(n) != c) return false;
  for (const auto& [n, c] : other.coeffs_)
    if (n <= p && coeff(n) != c) return false;
  return true;
}

namespace {

// valuation stand-in used by the precision rules; a series that is zero
// to its precision contributes its whole window
long prec_val(const QExpansion& a) { return a.is_zero() ? a.prec() : a.valuation(); }

void check_level(const QExpansion& a, const QExpansion& b) {
  if (a.level() != b.level()) throw LevelMismatch("operands live on different levels");
}

}  // namespace

QExpansion qexp_add(const QExpansion& a, const QExpansion& b) {
  check_level(a, b);
  if (a.weight() != b.weight()) throw WeightMismatch("cannot add forms of different weights");
  QExpansion out(a.level(), a.weight(), std::min(a.prec(), b.prec()));
  for (const auto& [n, c] : a.coeffs())
    if (n <= out.prec()) out.set_coeff(n, c);
  for (const auto& [n, c] : b.coeffs())
    if (n <= out.prec()) out.set_coeff(n, out.coeff(n) + c);
  return out;
}

QExpansion qexp_sub(const QExpansion& a, const QExpansion& b) {
  return qexp_add(a, qexp_scale(b, Rat(-1)));
}

QExpansion qexp_scale(const QExpansion& a, const Rat& s) {
  QExpansion out(a.level(), a.weight(), a.prec());
  if (s != 0)
    for (const auto& [n, c] : a.coeffs()) out.set_coeff(n, c * s);
  return out;
}

QExpansion qexp_mul(const QExpansion& a, const QExpansion& b) {
  check_level(a, b);
  long va = prec_val(a), vb = prec_val(b);
  long prec = std::min({a.prec() + vb, b.prec() + va, QExpansion::kExactPrec});
  QExpansion out(a.level(), a.weight() + b.weight(), prec);
  for (const auto& [i, ci] : a.coeffs()) {
    if (i > a.prec()) continue;
    for (const auto& [j, cj] : b.coeffs()) {
      long k = i + j;
      if (k > prec) break;  // map is ordered by exponent
      out.set_coeff(k, out.coeff(k) + ci * cj);
    }
  }
  return out;
}

QExpansion qexp_pow(const QExpansion& a, long k) {
  if (k < 0) throw Error("negative power of a q-expansion");
  if (k == 0) {
    QExpansion one(a.level(), 0, QExpansion::kExactPrec);
    one.set_coeff(0, 1);
    return one;
  }
  QExpansion out = a;
  for (long i = 1; i < k; ++i) out = qexp_mul(out, a);
  return out;
}

QExpansion monomial_eval(const QExpansion& f, const QExpansion& g, const QExpansion& h,
                         long a, long b, long c) {
  if (a + b + c < 1) throw Error("monomial must have positive total degree");
  QExpansion out = qexp_mul(qexp_mul(qexp_pow(f, a), qexp_pow(g, b)), qexp_pow(h, c));
  long v = out.is_zero() ? out.prec() : out.valuation();
  if (out.prec() < v) throw PrecisionError("monomial has an empty validity window");
  return out;
}

QExpansion qexp_div(const QExpansion& num, const QExpansion& den) {
  check_level(num, den);
  if (den.is_zero()) throw ZeroDivide("division by a series that is zero to its precision");
  long v2 = den.valuation();
  if (num.is_zero())
    return QExpansion(num.level(), num.weight() - den.weight(), num.prec() - v2);
  long v1 = num.valuation();
  long v = v1 - v2;
  long prec = std::min({num.prec() - v2, den.prec() + v1 - 2 * v2, QExpansion::kExactPrec});
  if (prec < v) throw PrecisionError("quotient has an empty validity window");
  QExpansion out(num.level(), num.weight() - den.weight(), prec);
  Rat lead = den.coeff(v2);
  std::map<long, Rat> q;
  for (long k = v; k <= prec; ++k) {
    Rat acc = num.coeff(k + v2);
    for (const auto& [j, cj] : q) {
      long e = k + v2 - j;
      if (e >= v2 && e <= den.prec()) acc -= cj * den.coeff(e);
    }
    Rat ck = acc / lead;
    if (ck != 0) {
      q[k] = ck;
      out.set_coeff(k, ck);
    }
  }
  return out;
}

long vanishing_order(const QExpansion& a) { return a.valuation(); }

QExpansion eisenstein_e4(long prec) {
  if (prec < 1) throw PrecisionError("precision must be positive");
  QExpansion out(1, 4, prec);
  out.set_coeff(0, 1);
  for (long n = 1; n <= prec; ++n) {
    Int s3 = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) s3 += Int(d) * d * d;
    out.set_coeff(n, Rat(240 * s3));
  }
  return out;
}

QExpansion delta(long prec) {
  if (prec < 1) throw PrecisionError("precision must be positive");
  // q * prod (1-q^n)^24; the Euler product by the pentagonal number theorem
  std::vector<Int> euler(prec, 0);
  euler[0] = 1;
  for (long k = 1;; ++k) {
    long e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
    if (e1 >= prec && e2 >= prec) break;
    Int sign = (k % 2 == 0) ? 1 : -1;
    if (e1 < prec) euler[e1] += sign;
    if (e2 < prec) euler[e2] += sign;
  }
  auto mul = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
    std::vector<Int> r(prec, 0);
    for (long i = 0; i < prec; ++i) {
      if (x[i] == 0) continue;
      for (long j = 0; i + j < prec; ++j)
        if (y[j] != 0) r[i + j] += x[i] * y[j];
    }
    return r;
  };
  std::vector<Int> acc(prec, 0), base = euler;
  acc[0] = 1;
  for (long e = 24; e > 0; e >>= 1) {
    if (e & 1) acc = mul(acc, base);
    if (e > 1) base = mul(base, base);
  }
  QExpansion out(1, 12, prec);
  for (long n = 0; n + 1 <= prec; ++n)
    if (acc[n] != 0) out.set_coeff(n + 1, Rat(acc[n]));
  return out;
}

QExpansion truncated(const QExpansion& a, long p) {
  if (p > a.prec()) throw PrecisionError("cannot extend precision by truncation");
  QExpansion out(a.level(), a.weight(), p);
  for (const auto& [n, c] : a.coeffs())
    if (n <= p) out.set_coeff(n, c);
  return out;
}

}  // namespace x0gal
