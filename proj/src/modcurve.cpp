#include "x0gal/modcurve.hpp"

#include <array>
#include <numeric>
#include <vector>

namespace x0gal {

namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

long euler_phi(long n) {
  long r = n;
  for (long p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

// Ogg's list of hyperelliptic X_0(N)
constexpr std::array<long, 19> kHyperelliptic = {22, 23, 26, 28, 29, 30, 31, 33, 35, 37,
                                                 39, 40, 41, 46, 47, 48, 50, 59, 71};

}  // namespace

CurveInvariants curve_invariants(long N) {
  if (N < 1) throw Error("level must be positive");
  CurveInvariants inv;
  inv.N = N;

  inv.mu = N;
  for (long p : prime_factors(N)) inv.mu = inv.mu / p * (p + 1);

  if (N % 4 == 0) {
    inv.nu2 = 0;
  } else {
    inv.nu2 = 1;
    for (long p : prime_factors(N)) {
      if (p == 2) continue;
      inv.nu2 *= 1 + (p % 4 == 1 ? 1 : -1);
    }
  }
  if (N % 9 == 0) {
    inv.nu3 = 0;
  } else {
    inv.nu3 = 1;
    for (long p : prime_factors(N)) {
      if (p == 3) continue;
      inv.nu3 *= 1 + (p % 3 == 1 ? 1 : -1);
    }
  }

  inv.cusps = 0;
  for (long d = 1; d <= N; ++d)
    if (N % d == 0) inv.cusps += euler_phi(std::gcd(d, N / d));

  // 12 g = 12 + mu - 3 nu2 - 4 nu3 - 6 cusps
  long twelve_g = 12 + inv.mu - 3 * inv.nu2 - 4 * inv.nu3 - 6 * inv.cusps;
  if (twelve_g % 12 != 0 || twelve_g < 0) throw Error("genus formula did not give an integer");
  inv.genus = twelve_g / 12;

  bool ogg = false;
  for (long h : kHyperelliptic) ogg = ogg || (h == N);
  if (ogg)
    inv.hyperelliptic = Hyperelliptic::yes;
  else if (inv.genus >= 2)
    inv.hyperelliptic = Hyperelliptic::no;
  else
    inv.hyperelliptic = Hyperelliptic::low_genus_other;
  return inv;
}

long dim_cusp_forms(long N, long m) {
  if (m < 2 || m % 2 != 0) throw Error("weight must be an even integer >= 2");
  CurveInvariants inv = curve_invariants(N);
  if (m == 2) return inv.genus;
  return (m - 1) * (inv.genus - 1) + (m / 2 - 1) * inv.cusps + (m / 4) * inv.nu2 +
         (m / 3) * inv.nu3;
}

long l_bound(long N, long m) {
  long eps = (m == 2) ? 1 : 0;
  return dim_cusp_forms(N, m) + curve_invariants(N).genus - 1 - eps;
}

long sturm_precision(long N, long weight) {
  if (weight < 2 || weight % 2 != 0) throw Error("weight must be an even integer >= 2");
  CurveInvariants inv = curve_invariants(N);
  return weight * inv.mu / 12 + 1;
}

std::string to_string(Hyperelliptic h) {
  switch (h) {
    case Hyperelliptic::yes: return "hyperelliptic";
    case Hyperelliptic::no: return "non-hyperelliptic";
    default: return "low-genus-other";
  }
}

}  // namespace x0gal
