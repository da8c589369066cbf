#include "x0gal/poly.hpp"

#include <algorithm>

namespace x0gal {

namespace {

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<Int> lpoly_mul(const std::vector<Int>& x, const std::vector<Int>& y) {
  if (x.empty() || y.empty()) return {};
  std::vector<Int> r(x.size() + y.size() - 1, Int(0));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) r[i + j] += x[i] * y[j];
  }
  return r;
}

std::vector<Int> lpoly_pow(const std::vector<Int>& x, int e) {
  std::vector<Int> acc = {Int(1)};
  for (int i = 0; i < e; ++i) acc = lpoly_mul(acc, x);
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- TernaryForm

void TernaryForm::set(int a, int b, int c, Int v) {
  std::array<int, 3> key{a, b, c};
  if (v == 0)
    coeffs.erase(key);
  else
    coeffs[key] = std::move(v);
}

int TernaryForm::degree() const {
  int d = 0;
  for (const auto& [k, v] : coeffs) d = std::max(d, k[0] + k[1] + k[2]);
  return d;
}

bool TernaryForm::homogeneous() const {
  if (coeffs.empty()) return true;
  int d = degree();
  for (const auto& [k, v] : coeffs)
    if (k[0] + k[1] + k[2] != d) return false;
  return true;
}

Int TernaryForm::content() const {
  Int g = 0;
  for (const auto& [k, v] : coeffs) g = gcd_int(g, v);
  return g;
}

TernaryForm TernaryForm::negated() const {
  TernaryForm out;
  for (const auto& [k, v] : coeffs) out.coeffs[k] = -v;
  return out;
}

TernaryForm TernaryForm::normalized() const {
  if (coeffs.empty()) return {};
  Int g = content();
  TernaryForm out;
  for (const auto& [k, v] : coeffs) out.coeffs[k] = v / g;
  if (out.coeffs.begin()->second < 0) out = out.negated();
  return out;
}

// -------------------------------------------------------------------- BiPoly

void BiPoly::set(int i, int k, Int v) {
  std::pair<int, int> key{i, k};
  if (v == 0)
    coeffs.erase(key);
  else
    coeffs[key] = std::move(v);
}

int BiPoly::deg_T() const {
  int d = 0;
  for (const auto& [k, v] : coeffs) d = std::max(d, k.second);
  return d;
}

int BiPoly::deg_lambda() const {
  int d = 0;
  for (const auto& [k, v] : coeffs) d = std::max(d, k.first);
  return d;
}

int BiPoly::total_degree() const {
  int d = 0;
  for (const auto& [k, v] : coeffs) d = std::max(d, k.first + k.second);
  return d;
}

bool BiPoly::depends_on_lambda() const {
  for (const auto& [k, v] : coeffs)
    if (k.first > 0) return true;
  return false;
}

bool BiPoly::monic_in_T() const {
  int n = deg_T();
  auto lead = lambda_coeff(n);
  return lead.size() == 1 && lead[0] == 1;
}

bool BiPoly::even_in_T() const {
  for (const auto& [k, v] : coeffs)
    if (k.second % 2 != 0) return false;
  return true;
}

Int BiPoly::content() const {
  Int g = 0;
  for (const auto& [k, v] : coeffs) g = gcd_int(g, v);
  return g;
}

std::vector<Int> BiPoly::lambda_coeff(int k) const {
  std::vector<Int> out;
  for (const auto& [key, v] : coeffs) {
    if (key.second != k) continue;
    if ((int)out.size() <= key.first) out.resize(key.first + 1, Int(0));
    out[key.first] = v;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// ----------------------------------------------------------- transformations

BiPoly dehomogenize(const TernaryForm& P) {
  BiPoly Q;
  for (const auto& [k, v] : P.coeffs) Q.set(k[1], k[2], v);
  if (Q.deg_T() < 1)
    throw ResultConstantInT("dehomogenization does not involve the T variable");
  if (!Q.depends_on_lambda())
    throw ResultConstantInT("dehomogenization does not involve the lambda variable");
  return Q;
}

TernaryForm homogenize(const BiPoly& Q) {
  int d = Q.total_degree();
  TernaryForm P;
  for (const auto& [k, v] : Q.coeffs) P.set(d - k.first - k.second, k.first, k.second, v);
  return P;
}

BiPoly monicize(const BiPoly& Q) {
  int n = Q.deg_T();
  if (n < 1) throw Error("monicize requires positive degree in T");
  std::vector<Int> an = Q.lambda_coeff(n);
  BiPoly out;
  for (int i = 0; i <= n; ++i) {
    std::vector<Int> ai = Q.lambda_coeff(i);
    if (ai.empty()) continue;
    std::vector<Int> scaled = lpoly_mul(lpoly_pow(an, n - 1 - i < 0 ? 0 : n - 1 - i), ai);
    if (i == n) scaled = {Int(1)};  // a_n^0 * a_n normalized away
    for (size_t j = 0; j < scaled.size(); ++j)
      if (scaled[j] != 0) out.set((int)j, i, scaled[j]);
  }
  return out;
}

BiPoly mirror_T(const BiPoly& Qt) {
  int n = Qt.deg_T();
  BiPoly out;
  for (const auto& [k, v] : Qt.coeffs) {
    Int w = ((n - k.second) % 2 == 0) ? v : -v;
    out.set(k.first, k.second, w);
  }
  return out;
}

Int eval_lambda_poly(const std::vector<Int>& c, const Int& lambda) {
  Int acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lambda + *it;
  return acc;
}

Int eval_bipoly(const BiPoly& Q, const Int& lambda, const Int& t) {
  Int acc = 0;
  for (int k = Q.deg_T(); k >= 0; --k)
    acc = acc * t + eval_lambda_poly(Q.lambda_coeff(k), lambda);
  return acc;
}

}  // namespace x0gal
