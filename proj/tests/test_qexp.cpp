#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "x0gal/qexp.hpp"

using namespace x0gal;

namespace {

QExpansion series(long level, long weight, long prec,
                  std::initializer_list<std::pair<long, long>> cs) {
  QExpansion q(level, weight, prec);
  for (auto [n, c] : cs) q.set_coeff(n, Rat(c));
  return q;
}

QExpansion random_series(std::mt19937_64& rng, long level, long weight, long prec) {
  QExpansion q(level, weight, prec);
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::uniform_int_distribution<long> exp(0, prec);
  for (int i = 0; i < 12; ++i) q.set_coeff(exp(rng), Rat(coeff(rng)));
  return q;
}

}  // namespace

TEST_CASE("addition matches the listed sum of the level-72 pair") {
  // q^2 - 4q^14 + ...  plus  q - 2q^13 - 4q^19 - q^25 + ...
  auto f3 = series(72, 2, 40, {{2, 1}, {14, -4}, {26, 2}, {38, 8}});
  auto f4 = series(72, 2, 40, {{1, 1}, {13, -2}, {19, -4}, {25, -1}, {31, 8}, {37, 6}});
  auto sum = qexp_add(f3, f4);
  CHECK(sum.coeff(1) == 1);
  CHECK(sum.coeff(2) == 1);
  CHECK(sum.coeff(13) == -2);
  CHECK(sum.coeff(14) == -4);
  CHECK(sum.coeff(19) == -4);
  CHECK(sum.coeff(25) == -1);
  CHECK(sum.coeff(26) == 2);
}

TEST_CASE("additive identity and inverse") {
  auto a = series(30, 2, 20, {{1, 1}, {4, -1}});
  auto zero = QExpansion(30, 2, 20);
  CHECK(qexp_add(a, zero).same_series(a));
  auto b = series(30, 2, 20, {{1, -1}, {4, 1}});
  CHECK(qexp_add(a, b).is_zero());
}

TEST_CASE("level and weight mismatches are rejected") {
  auto a = series(30, 2, 20, {{1, 1}});
  CHECK_THROWS_AS(qexp_add(a, series(31, 2, 20, {{1, 1}})), LevelMismatch);
  CHECK_THROWS_AS(qexp_add(a, series(30, 4, 20, {{1, 1}})), WeightMismatch);
  CHECK_THROWS_AS(qexp_mul(a, series(31, 2, 20, {{1, 1}})), LevelMismatch);
}

TEST_CASE("products match the printed level-30 series") {
  auto f = series(30, 2, 14,
                  {{2, 1}, {4, -1}, {6, -1}, {8, -1}, {10, 1}, {12, 1}});
  auto g = series(30, 2, 14,
                  {{3, 1}, {4, 1}, {5, -1}, {6, -1}, {7, -2}, {8, -2}, {10, 1}, {11, 2}, {12, 2}});
  auto ff = qexp_mul(f, f);
  // q^4 - 2q^6 - q^8 + 5q^12 (zero at q^5, q^7, q^9..q^11)
  CHECK(ff.weight() == 4);
  CHECK(ff.coeff(4) == 1);
  CHECK(ff.coeff(5) == 0);
  CHECK(ff.coeff(6) == -2);
  CHECK(ff.coeff(7) == 0);
  CHECK(ff.coeff(8) == -1);
  CHECK(ff.coeff(9) == 0);
  CHECK(ff.coeff(10) == 0);
  CHECK(ff.coeff(11) == 0);
  CHECK(ff.coeff(12) == 5);

  auto fg = qexp_mul(f, g);
  // q^5 + q^6 - 2q^7 - 2q^8 - 2q^9 - 2q^10 + 2q^11 + 3q^12
  CHECK(fg.coeff(5) == 1);
  CHECK(fg.coeff(6) == 1);
  CHECK(fg.coeff(7) == -2);
  CHECK(fg.coeff(8) == -2);
  CHECK(fg.coeff(9) == -2);
  CHECK(fg.coeff(10) == -2);
  CHECK(fg.coeff(11) == 2);
  CHECK(fg.coeff(12) == 3);
}

TEST_CASE("multiplicative identity and power semantics") {
  auto a = series(5, 2, 15, {{1, 2}, {3, -1}, {7, 4}});
  QExpansion one(5, 0, QExpansion::kExactPrec);
  one.set_coeff(0, 1);
  CHECK(qexp_mul(a, one).same_series(a));
  CHECK(qexp_pow(a, 0).coeff(0) == 1);
  CHECK(qexp_pow(a, 0).weight() == 0);
  CHECK(qexp_pow(a, 2).same_series(qexp_mul(a, a)));
}

TEST_CASE("precision tracking of products uses valuations") {
  auto a = series(7, 2, 10, {{2, 1}});   // valuation 2, prec 10
  auto b = series(7, 2, 10, {{3, 1}});   // valuation 3
  auto ab = qexp_mul(a, b);
  CHECK(ab.prec() == 12);                // min(10+3, 10+2)
  CHECK_THROWS_AS(ab.coeff(13), PrecisionError);
}

TEST_CASE("monomial evaluation") {
  auto f = series(64, 2, 80, {{2, 1}, {10, -2}});
  auto g = series(64, 2, 80, {{5, 1}, {13, -3}});
  auto h = series(64, 2, 80, {{1, 1}, {9, -3}});
  CHECK(monomial_eval(f, g, h, 1, 0, 0).same_series(f));
  auto m = monomial_eval(f, g, h, 0, 3, 1);
  CHECK(m.valuation() == 16);
  CHECK(m.coeff(16) == 1);
  CHECK_THROWS_AS(monomial_eval(f, g, h, 0, 0, 0), Error);
}

TEST_CASE("Eisenstein series of weight four") {
  auto e4 = eisenstein_e4(6);
  CHECK(e4.coeff(0) == 1);
  CHECK(e4.coeff(1) == 240);
  CHECK(e4.coeff(2) == 2160);  // 240 * sigma_3(2)
  CHECK(e4.coeff(6) == 240 * (1 + 8 + 27 + 216));
}

TEST_CASE("delta from the eta product") {
  auto d = delta(8);
  CHECK(d.coeff(1) == 1);
  CHECK(d.coeff(2) == -24);
  CHECK(d.coeff(3) == 252);
  CHECK(d.coeff(4) == -1472);
  CHECK(d.coeff(5) == 4830);
}

TEST_CASE("cube of delta") {
  auto d3 = qexp_pow(delta(6), 3);
  CHECK(d3.valuation() == 3);
  CHECK(d3.coeff(3) == 1);   // leading coefficient of the cube
  CHECK(d3.coeff(4) == -72); // 3 * tau(2)
  CHECK(d3.weight() == 36);
}

TEST_CASE("the j-quotient starts at 1/q with constant 744") {
  long prec = 12;
  auto j = qexp_div(qexp_pow(eisenstein_e4(prec), 3), delta(prec));
  CHECK(j.valuation() == -1);
  CHECK(j.coeff(-1) == 1);
  CHECK(j.coeff(0) == 744);
  CHECK(j.coeff(1) == 196884);
  CHECK(j.weight() == 0);
}

TEST_CASE("division round-trips and rejects zero divisors") {
  auto a = series(3, 2, 20, {{1, 1}, {2, -3}, {5, 7}});
  CHECK(qexp_div(a, a).coeff(0) == 1);
  auto b = series(3, 2, 20, {{1, 1}, {4, 2}});
  auto q = qexp_div(qexp_mul(a, b), b);
  for (long n = 1; n <= q.prec(); ++n) CHECK(q.coeff(n) == a.coeff(n));
  CHECK_THROWS_AS(qexp_div(a, QExpansion(3, 2, 20)), ZeroDivide);
}

TEST_CASE("vanishing orders") {
  CHECK(vanishing_order(series(63, 2, 30, {{4, 1}, {7, 1}})) == 4);
  CHECK(vanishing_order(series(63, 2, 30, {{5, 2}, {8, -1}})) == 5);
  CHECK(vanishing_order(delta(5)) == 1);
  CHECK_THROWS_AS(vanishing_order(QExpansion(63, 2, 30)), ZeroSeries);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_series(rng, 11, 2, 25);
    auto b = random_series(rng, 11, 2, 25);
    auto c = random_series(rng, 11, 2, 25);
    CHECK(qexp_add(qexp_add(a, b), c).same_series(qexp_add(a, qexp_add(b, c))));
    auto lhs = qexp_mul(a, qexp_add(b, c));
    auto rhs = qexp_add(qexp_mul(a, b), qexp_mul(a, c));
    CHECK(truncated(lhs, std::min(lhs.prec(), rhs.prec()))
              .same_series(truncated(rhs, std::min(lhs.prec(), rhs.prec()))));
    auto ab = qexp_mul(a, b);
    CHECK(ab.same_series(qexp_mul(b, a)));
  }
}

TEST_CASE("precision soundness: truncate then multiply agrees on the window") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_series(rng, 11, 2, 25);
    auto b = random_series(rng, 11, 2, 25);
    if (a.is_zero() || b.is_zero()) continue;
    auto full = qexp_mul(a, b);
    auto cut = qexp_mul(truncated(a, 15), truncated(b, 15));
    for (long n = std::min(a.valuation(), 0L); n <= cut.prec(); ++n)
      CHECK(cut.coeff(n) == full.coeff(n));
  }
}
