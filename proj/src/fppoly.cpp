#include "x0gal/fppoly.hpp"

#include <algorithm>

namespace x0gal {

namespace {

long long mod_mul(long long a, long long b, long long p) {
  return (long long)((__int128)a * b % p);
}

long long mod_pow(long long a, long long e, long long p) {
  long long r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

long long mod_inv(long long a, long long p) { return mod_pow(a, p - 2, p); }

void strip(std::vector<long long>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FpPoly FpPoly::make(long long p, std::vector<long long> raw) {
  if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  for (auto& v : raw) {
    v %= p;
    if (v < 0) v += p;
  }
  strip(raw);
  return FpPoly{p, std::move(raw)};
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
  std::vector<long long> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff((int)i) + b.coeff((int)i)) % a.p;
  strip(c);
  return FpPoly{a.p, std::move(c)};
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
  std::vector<long long> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = ((a.coeff((int)i) - b.coeff((int)i)) % a.p + a.p) % a.p;
  strip(c);
  return FpPoly{a.p, std::move(c)};
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly{a.p, {}};
  std::vector<long long> c(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = (c[i + j] + mod_mul(a.c[i], b.c[j], a.p)) % a.p;
  }
  strip(c);
  return FpPoly{a.p, std::move(c)};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<long long> r = a.c;
  long long inv = mod_inv(b.c.back(), a.p);
  while (r.size() >= b.c.size()) {
    long long f = mod_mul(r.back(), inv, a.p);
    size_t shift = r.size() - b.c.size();
    if (f != 0)
      for (size_t i = 0; i < b.c.size(); ++i)
        r[i + shift] = ((r[i + shift] - mod_mul(f, b.c[i], a.p)) % a.p + a.p) % a.p;
    r.pop_back();
    strip(r);
    if (r.size() < b.c.size()) break;
  }
  strip(r);
  return FpPoly{a.p, std::move(r)};
}

FpPoly fp_monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  long long inv = mod_inv(a.c.back(), a.p);
  std::vector<long long> c = a.c;
  for (auto& v : c) v = mod_mul(v, inv, a.p);
  return FpPoly{a.p, std::move(c)};
}

FpPoly fp_derivative(const FpPoly& a) {
  std::vector<long long> c;
  for (size_t i = 1; i < a.c.size(); ++i) c.push_back(mod_mul(a.c[i], (long long)(i % a.p), a.p));
  strip(c);
  return FpPoly{a.p, std::move(c)};
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_mod(a, b);
    a = b;
    b = r;
  }
  return fp_monic(a);
}

FpPoly fp_pow_mod(const FpPoly& base, long long e, const FpPoly& mod) {
  FpPoly acc{base.p, {1}};
  FpPoly b = fp_mod(base, mod);
  while (e) {
    if (e & 1) acc = fp_mod(fp_mul(acc, b), mod);
    b = fp_mod(fp_mul(b, b), mod);
    e >>= 1;
  }
  return acc;
}

FpPoly specialize_mod(const BiPoly& Qt, long long r, long long p) {
  if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  if (!Qt.monic_in_T()) throw Error("specialization requires a polynomial monic in T");
  int n = Qt.deg_T();
  long long rr = r % p;
  if (rr < 0) rr += p;
  std::vector<long long> c(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    // Horner on the exact integer coefficients, reduced as we go
    long long acc = 0;
    std::vector<Int> ak = Qt.lambda_coeff(k);
    for (auto it = ak.rbegin(); it != ak.rend(); ++it) {
      long long ci = (long long)(*it % p);
      if (ci < 0) ci += p;
      acc = (mod_mul(acc, rr, p) + ci) % p;
    }
    c[k] = acc;
  }
  return FpPoly::make(p, std::move(c));
}

bool is_squarefree(const FpPoly& f) {
  if (f.degree() < 1) throw Error("squarefree test needs positive degree");
  FpPoly d = fp_derivative(f);
  if (d.is_zero()) return false;
  return fp_gcd(f, d).is_constant();
}

std::vector<std::pair<int, int>> distinct_degree_factorization(const FpPoly& f_in) {
  if (!is_squarefree(f_in)) throw NotSquarefree("input has a repeated factor");
  FpPoly f = fp_monic(f_in);
  std::vector<std::pair<int, int>> out;
  FpPoly t{f.p, {0, 1}};
  FpPoly h = t;  // will hold T^(p^d) mod f
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = fp_pow_mod(h, f.p, f);
    FpPoly g = fp_gcd(f, fp_sub(h, t));
    if (g.degree() > 0) {
      out.emplace_back(d, g.degree() / d);
      // divide f by g: use long division via mod trick
      FpPoly q{f.p, {}};
      {
        // exact division: f = g * q
        std::vector<long long> rem = f.c, qc(f.c.size() - g.c.size() + 1, 0);
        long long inv = mod_inv(g.c.back(), f.p);
        for (int i = (int)qc.size() - 1; i >= 0; --i) {
          long long fac = mod_mul(rem[i + g.degree()], inv, f.p);
          qc[i] = fac;
          if (fac != 0)
            for (size_t j = 0; j < g.c.size(); ++j)
              rem[i + j] = ((rem[i + j] - mod_mul(fac, g.c[j], f.p)) % f.p + f.p) % f.p;
        }
        q = FpPoly{f.p, std::move(qc)};
      }
      f = fp_monic(q);
      if (f.degree() > 0) h = fp_mod(h, f);
    }
  }
  if (f.degree() > 0) out.emplace_back(f.degree(), 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace x0gal
