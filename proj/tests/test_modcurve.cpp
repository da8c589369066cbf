#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "x0gal/modcurve.hpp"

using namespace x0gal;

namespace {

// independent oracles: direct enumeration instead of the closed formulas

long oracle_nu2(long N) {
  long count = 0;
  for (long x = 0; x < N; ++x)
    if ((x * x + 1) % N == 0) ++count;
  return count;
}

long oracle_nu3(long N) {
  long count = 0;
  for (long x = 0; x < N; ++x)
    if ((x * x + x + 1) % N == 0) ++count;
  return count;
}

// P^1(Z/N) as canonicalized pairs; the index is its size and the cusp
// count is the number of orbits of (c:d) -> (c:c+d)
struct P1 {
  long N;
  std::vector<std::pair<long, long>> points;
  std::map<std::pair<long, long>, size_t> index;

  explicit P1(long n) : N(n) {
    std::set<std::pair<long, long>> seen;
    for (long c = 0; c < N; ++c)
      for (long d = 0; d < N; ++d) {
        if (std::gcd(std::gcd(c, d), N) != 1) continue;
        seen.insert(canon(c, d));
      }
    if (N == 1) seen.insert({0, 0});
    for (auto& p : seen) {
      index[p] = points.size();
      points.push_back(p);
    }
  }

  std::pair<long, long> canon(long c, long d) const {
    c = ((c % N) + N) % N;
    d = ((d % N) + N) % N;
    if (N == 1) return {0, 0};
    std::pair<long, long> best{N, N};
    for (long u = 1; u < N; ++u) {
      if (std::gcd(u, N) != 1) continue;
      best = std::min(best, {u * c % N, u * d % N});
    }
    return best;
  }
};

long oracle_mu(long N) { return (long)P1(N).points.size(); }

long oracle_cusps(long N) {
  P1 p1(N);
  std::vector<int> orbit(p1.points.size(), -1);
  int orbits = 0;
  for (size_t i = 0; i < p1.points.size(); ++i) {
    if (orbit[i] != -1) continue;
    auto [c, d] = p1.points[i];
    size_t j = i;
    while (orbit[j] == -1) {
      orbit[j] = orbits;
      d = (c + d) % p1.N;
      j = p1.index.at(p1.canon(c, d));
    }
    ++orbits;
  }
  return orbits;
}

}  // namespace

TEST_CASE("invariants match direct enumeration for N <= 100") {
  for (long N = 1; N <= 100; ++N) {
    CurveInvariants inv = curve_invariants(N);
    CAPTURE(N);
    CHECK(inv.mu == oracle_mu(N));
    CHECK(inv.nu2 == oracle_nu2(N));
    CHECK(inv.nu3 == oracle_nu3(N));
    CHECK(inv.cusps == oracle_cusps(N));
    CHECK(inv.genus >= 0);
    CHECK(12 * inv.genus == 12 + inv.mu - 3 * inv.nu2 - 4 * inv.nu3 - 6 * inv.cusps);
    CHECK(dim_cusp_forms(N, 2) == inv.genus);
  }
}

TEST_CASE("genus values of the bundled levels") {
  CHECK(curve_invariants(30).genus == 3);
  CHECK(curve_invariants(63).genus == 5);
  CHECK(curve_invariants(64).genus == 3);
  CHECK(curve_invariants(72).genus == 5);
  CHECK(curve_invariants(30).hyperelliptic == Hyperelliptic::yes);
  CHECK(curve_invariants(64).hyperelliptic == Hyperelliptic::no);
}

TEST_CASE("hyperelliptic classification is exactly the known list") {
  std::set<long> list = {22, 23, 26, 28, 29, 30, 31, 33, 35, 37,
                         39, 40, 41, 46, 47, 48, 50, 59, 71};
  for (long N = 1; N <= 120; ++N) {
    CAPTURE(N);
    auto flag = curve_invariants(N).hyperelliptic;
    if (list.count(N)) {
      CHECK(flag == Hyperelliptic::yes);
    } else {
      CHECK(flag != Hyperelliptic::yes);
    }
  }
  // the non-hyperelliptic levels called out alongside the list
  std::vector<long> non_hyp = {34, 38, 42, 43, 44, 45};
  for (long N = 51; N <= 58; ++N) non_hyp.push_back(N);
  for (long N = 60; N <= 70; ++N) non_hyp.push_back(N);
  for (long N = 72; N <= 120; ++N) non_hyp.push_back(N);
  for (long N : non_hyp) {
    CAPTURE(N);
    CHECK(curve_invariants(N).hyperelliptic == Hyperelliptic::no);
  }
}

TEST_CASE("cusp form dimensions") {
  CHECK(dim_cusp_forms(30, 4) == 14);
  CHECK(dim_cusp_forms(63, 2) == 5);
  CHECK(dim_cusp_forms(72, 2) == 5);
  CHECK_THROWS_AS(dim_cusp_forms(30, 3), Error);
  CHECK_THROWS_AS(dim_cusp_forms(30, 0), Error);
}

TEST_CASE("the l bound") {
  CHECK(l_bound(30, 4) == 16);
  CHECK(l_bound(30, 2) == 4);
  CHECK(l_bound(63, 2) == 8);
  CHECK(l_bound(72, 2) == 8);
  for (long N : {30L, 63L, 64L, 72L}) {
    long prev = l_bound(N, 2);
    for (long m = 4; m <= 12; m += 2) {
      long cur = l_bound(N, m);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("Sturm precision") {
  CHECK(sturm_precision(30, 32) == 193);
  CHECK(sturm_precision(64, 8) == 65);
  CHECK(sturm_precision(1, 12) == 2);
}

TEST_CASE("level zero is rejected") {
  CHECK_THROWS_AS(curve_invariants(0), Error);
}
