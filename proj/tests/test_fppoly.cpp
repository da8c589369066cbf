#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"

using namespace x0gal;
using namespace x0gal::testing;

TEST_CASE("specialization of the monic level-63 polynomial") {
  auto Qt = bipoly({{0, 5, 1}, {0, 4, -2}, {3, 3, 1}, {3, 2, 2}, {6, 2, -3},
                    {3, 1, -1}, {6, 1, 3}, {6, 0, -1}});
  auto f = specialize_mod(Qt, 2, 3);
  CHECK(f.degree() == 5);
  CHECK(f.c.back() == 1);
  // T^5 + T^4 + 2T^3 + T^2 + T + 2 over F_3
  CHECK(f.c == std::vector<long long>{2, 1, 1, 2, 1, 1});
  CHECK_THROWS_AS(specialize_mod(Qt, 2, 6), NotPrime);
}

TEST_CASE("specialization with zero constant column") {
  auto Qt = bipoly({{0, 2, 1}, {1, 1, 2}, {2, 0, 4}});
  auto f = specialize_mod(Qt, 0, 2);
  CHECK(f.c == std::vector<long long>{0, 0, 1});  // T^2
}

TEST_CASE("squarefree detection") {
  CHECK(!is_squarefree(FpPoly::make(2, {0, 0, 1})));          // T^2 over F_2
  CHECK(is_squarefree(FpPoly::make(79, {14, 0, -7, 0, 1})));  // T^4 - 7T^2 + 14
  CHECK(is_squarefree(FpPoly::make(5, {0, 4, 1})));           // T(T-1) = T^2+4T
}

TEST_CASE("distinct degrees of known specializations") {
  auto Qt63 = bipoly({{0, 5, 1}, {0, 4, -2}, {3, 3, 1}, {3, 2, 2}, {6, 2, -3},
                      {3, 1, -1}, {6, 1, 3}, {6, 0, -1}});
  // [5] at (11, 2) and [2, 3] at (11, 8)
  auto f = specialize_mod(Qt63, 2, 11);
  CHECK(distinct_degree_factorization(f) == std::vector<std::pair<int, int>>{{5, 1}});
  f = specialize_mod(Qt63, 8, 11);
  CHECK(distinct_degree_factorization(f) ==
        std::vector<std::pair<int, int>>{{2, 1}, {3, 1}});

  // T^4 - 7T^2 + 14 at p = 79: two linear factors and a quadratic
  auto g = FpPoly::make(79, {14, 0, -7, 0, 1});
  CHECK(distinct_degree_factorization(g) ==
        std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});
}

TEST_CASE("rejects repeated factors") {
  CHECK_THROWS_AS(distinct_degree_factorization(FpPoly::make(2, {0, 0, 1})), NotSquarefree);
}

TEST_CASE("gcd conventions") {
  auto f = FpPoly::make(7, {3, 1});  // T + 3
  auto z = FpPoly::make(7, {});
  CHECK(fp_gcd(f, z) == fp_monic(f));
  auto a = FpPoly::make(7, {2, 0, 1});
  auto b = FpPoly::make(7, {5, 1});
  CHECK(fp_gcd(a, b) == fp_gcd(b, a));
}

TEST_CASE("DDF agrees with trial division: exhaustive for p = 2, 3") {
  for (long long p : {2LL, 3LL}) {
    IrreducibleTable table(p, 6);
    std::vector<long long> c(7, 0);
    c[6] = 1;
    long long total = 1;
    for (int i = 0; i < 6; ++i) total *= p;
    for (long long code = 0; code < total; ++code) {
      long long x = code;
      for (int i = 0; i < 6; ++i) {
        c[i] = x % p;
        x /= p;
      }
      FpPoly f{p, c};
      FpPoly d = fp_derivative(f);
      if (d.is_zero() || !fp_gcd(f, d).is_constant()) continue;
      CHECK(distinct_degree_factorization(f) == table.factor_degrees(f));
    }
  }
}

TEST_CASE("DDF agrees with trial division: 10^4 randomized samples") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  int target = 0;
  for (long long p : {5LL, 7LL, 11LL, 13LL}) {
    // irreducibles through degree 3 fully factor any degree <= 6 input
    IrreducibleTable table(p, 3);
    std::uniform_int_distribution<long long> coeff(0, p - 1);
    std::uniform_int_distribution<int> degree(1, 6);
    target += 2500;
    while (checked < target) {
      int d = degree(rng);
      std::vector<long long> c(d + 1);
      for (int i = 0; i < d; ++i) c[i] = coeff(rng);
      c[d] = 1;
      FpPoly f{p, c};
      FpPoly der = fp_derivative(f);
      if (der.is_zero() || !fp_gcd(f, der).is_constant()) continue;
      CHECK(distinct_degree_factorization(f) == table.factor_degrees(f));
      ++checked;
    }
  }
  CHECK(checked == 10000);
}

TEST_CASE("weighted degree sum equals the polynomial degree") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    long long p = std::vector<long long>{5, 7, 11, 13, 17}[trial % 5];
    std::uniform_int_distribution<long long> coeff(0, p - 1);
    std::vector<long long> c(9);
    for (auto& v : c) v = coeff(rng);
    c[8] = 1;
    FpPoly f{p, c};
    FpPoly d = fp_derivative(f);
    if (d.is_zero() || !fp_gcd(f, d).is_constant()) continue;
    int sum = 0;
    for (auto [deg, cnt] : distinct_degree_factorization(f)) sum += deg * cnt;
    CHECK(sum == f.degree());
  }
}
