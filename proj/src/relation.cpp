#include "x0gal/relation.hpp"

#include <algorithm>
#include <map>
#include <optional>

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

// all monomial exponents (a, b, c) with a+b+c = d, ascending lex
std::vector<std::array<int, 3>> monomials_of_degree(int d) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b + a <= d; ++b) out.push_back({a, b, d - a - b});
  return out;
}

// power cache so the degree sweep reuses series products
class MonomialCache {
 public:
  MonomialCache(const QExpansion& f, const QExpansion& g, const QExpansion& h)
      : f_(f), g_(g), h_(h) {}

  const QExpansion& power(int which, int e) {
    auto& table = pows_[which];
    if (auto it = table.find(e); it != table.end()) return it->second;
    QExpansion v = qexp_pow(base(which), e);
    return table.emplace(e, std::move(v)).first->second;
  }

  QExpansion monomial(const std::array<int, 3>& m) {
    return qexp_mul(qexp_mul(power(0, m[0]), power(1, m[1])), power(2, m[2]));
  }

 private:
  const QExpansion& base(int which) { return which == 0 ? f_ : which == 1 ? g_ : h_; }
  const QExpansion &f_, &g_, &h_;
  std::map<int, QExpansion> pows_[3];
};

struct KernelResult {
  int rank = 0;
  std::vector<std::vector<Rat>> vectors;
};

// fraction-free (Bareiss) elimination; pivot row chosen by largest
// numerator magnitude in the pivot column
KernelResult integer_kernel(std::vector<std::vector<Int>> m, int cols) {
  KernelResult res;
  std::vector<int> pivot_cols;
  std::vector<int> pivot_col_of_row;
  Int prev = 1;
  int row = 0;
  int rows = (int)m.size();
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    Int best = 0;
    for (int r = row; r < rows; ++r) {
      Int v = m[r][col] < 0 ? Int(-m[r][col]) : m[r][col];
      if (v > best) {
        best = v;
        sel = r;
      }
    }
    if (sel == -1) continue;
    std::swap(m[row], m[sel]);
    for (int r = row + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = (m[r][c] * m[row][col] - m[r][col] * m[row][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[row][col];
    pivot_cols.push_back(col);
    pivot_col_of_row.push_back(col);
    ++row;
  }
  res.rank = (int)pivot_cols.size();

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;

  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rat> x(cols, Rat(0));
    x[fc] = 1;
    for (int i = res.rank - 1; i >= 0; --i) {
      int pc = pivot_col_of_row[i];
      Rat acc = 0;
      for (int c = pc + 1; c < cols; ++c)
        if (x[c] != 0 && m[i][c] != 0) acc += Rat(m[i][c]) * x[c];
      x[pc] = -acc / Rat(m[i][pc]);
    }
    res.vectors.push_back(std::move(x));
  }
  return res;
}

TernaryForm form_from_kernel(const std::vector<Rat>& x,
                             const std::vector<std::array<int, 3>>& mons) {
  Int den = 1;
  for (const Rat& v : x) {
    Int d = denominator(v);
    den = den / gcd_int(den, d) * d;
  }
  TernaryForm P;
  for (size_t j = 0; j < mons.size(); ++j) {
    Rat v = x[j] * Rat(den);
    if (v != 0) P.set(mons[j][0], mons[j][1], mons[j][2], numerator(v));
  }
  return P.normalized();
}

}  // namespace

TernaryForm find_relation(const QExpansion& f, const QExpansion& g, const QExpansion& h,
                          int maxdeg) {
  if (maxdeg < 1) throw Error("maxdeg must be positive");
  if (f.level() != g.level() || f.level() != h.level())
    throw LevelMismatch("relation search requires a common level");
  if (f.weight() != g.weight() || f.weight() != h.weight())
    throw WeightMismatch("relation search requires a common weight");
  if (f.same_series(g) || f.same_series(h) || g.same_series(h))
    throw LinearDependence("two of the input forms coincide");
  long N = f.level(), w = f.weight();
  long need = sturm_precision(N, maxdeg * w) - 1;
  if (f.prec() < need || g.prec() < need || h.prec() < need)
    throw InsufficientPrecision("expansions shorter than the Sturm depth for maxdeg");

  MonomialCache cache(f, g, h);
  for (int d = 1; d <= maxdeg; ++d) {
    auto mons = monomials_of_degree(d);
    long depth = sturm_precision(N, d * w) - 1;  // exponents 1..depth certify

    std::vector<QExpansion> series;
    series.reserve(mons.size());
    for (const auto& m : mons) series.push_back(cache.monomial(m));

    // rows: q-exponents; scale each row integral
    std::vector<std::vector<Int>> mat;
    mat.reserve(depth + 1);
    for (long n = 0; n <= depth; ++n) {
      std::vector<Rat> row(mons.size());
      bool nonzero = false;
      for (size_t j = 0; j < mons.size(); ++j) {
        row[j] = series[j].coeff(n);
        nonzero = nonzero || row[j] != 0;
      }
      if (!nonzero) continue;
      Int den = 1;
      for (const Rat& v : row) {
        Int dd = denominator(v);
        den = den / gcd_int(den, dd) * dd;
      }
      std::vector<Int> irow(mons.size());
      for (size_t j = 0; j < mons.size(); ++j) irow[j] = numerator(row[j] * Rat(den));
      mat.push_back(std::move(irow));
    }

    KernelResult ker = integer_kernel(std::move(mat), (int)mons.size());
    size_t dim = ker.vectors.size();
    if (dim == 0) continue;
    if (d == 1) throw LinearDependence("the three forms satisfy a linear relation");
    if (dim > 1)
      throw AmbiguousKernel("kernel dimension " + std::to_string(dim) + " at degree " +
                            std::to_string(d) + "; supply longer expansions");
    return form_from_kernel(ker.vectors[0], mons);
  }
  throw NoRelationWithinBound("no relation of degree <= " + std::to_string(maxdeg));
}

bool verify_relation(const TernaryForm& P, const QExpansion& f, const QExpansion& g,
                     const QExpansion& h) {
  if (P.is_zero() || !P.homogeneous()) throw Error("relation must be a nonzero homogeneous form");
  long N = f.level(), w = f.weight();
  int d = P.degree();
  long depth = sturm_precision(N, d * w) - 1;

  MonomialCache cache(f, g, h);
  std::optional<QExpansion> sum;
  for (const auto& [m, coeff] : P.coeffs) {
    QExpansion term = qexp_scale(cache.monomial(m), Rat(coeff));
    sum = sum ? qexp_add(*sum, term) : term;
  }
  if (sum->prec() < depth)
    throw InsufficientPrecision("expansions too short to certify the relation");
  for (const auto& [n, c] : sum->coeffs())
    if (n <= depth && c != 0) return false;
  return true;
}

DegreeReport degree_report(const BiPoly& Q, long N, long m, const CurveInvariants& inv,
                           bool fg_deepest) {
  DegreeReport rep;
  rep.deg_T = Q.deg_T();
  rep.total_degree = homogenize(Q).degree();
  rep.lbound = l_bound(N, m);
  rep.genus = inv.genus;
  rep.genus_bound_applies = fg_deepest;
  rep.birational = 2 * rep.total_degree > rep.lbound;
  rep.full_genus_degree = fg_deepest && rep.deg_T == inv.genus;
  return rep;
}

ConicVerdict hyperelliptic_conic(const std::vector<QExpansion>& basis) {
  if (basis.size() < 3) throw Error("need at least three forms");
  long N = basis.front().level();
  CurveInvariants inv = curve_invariants(N);
  long g = inv.genus;

  for (const auto& q : basis)
    if (q.weight() != 2) throw WrongVanishingOrders("conic construction expects weight 2");

  ConicVerdict v;
  v.genus = g;
  if (basis.size() == 3) {
    // taken as given; the relation search reports duplicates itself
    v.conic = find_relation(basis[0], basis[1], basis[2], 2);
    if (vanishing_order(basis[0]) != g - 2 || vanishing_order(basis[1]) != g - 1 ||
        vanishing_order(basis[2]) != g)
      throw WrongVanishingOrders("need forms of vanishing orders g-2, g-1, g");
  } else {
    std::map<long, const QExpansion*> by_order;
    for (const auto& q : basis) by_order[vanishing_order(q)] = &q;
    for (long o : {g - 2, g - 1, g})
      if (!by_order.count(o))
        throw WrongVanishingOrders("need forms of vanishing orders g-2, g-1, g");
    v.conic = find_relation(*by_order[g - 2], *by_order[g - 1], *by_order[g], 2);
  }
  long min_order = g - 2;
  v.bound = 2 * (g - 1) - (min_order - 1);
  // map degree d is even and d * deg(conic) <= bound; d = 2 is forced
  // exactly when d = 4 would already overshoot
  v.degree_two_extension = v.conic.degree() == 2 && 2 * 4 > v.bound;
  return v;
}

}  // namespace x0gal
