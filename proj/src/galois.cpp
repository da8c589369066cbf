#include "x0gal/galois.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace x0gal {

namespace {

std::vector<CyclePattern> partitions_of(int n) {
  std::vector<CyclePattern> out;
  CyclePattern cur;
  // nondecreasing parts
  auto rec = [&](auto&& self, int remaining, int minpart) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = minpart; part <= remaining; ++part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, 1);
  return out;
}

std::vector<long long> primes_up_to(long long n) {
  std::vector<bool> sieve(n + 1, true);
  std::vector<long long> ps;
  for (long long i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    ps.push_back(i);
    for (long long j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return ps;
}

}  // namespace

const std::vector<GroupEntry>& transitive_catalog(int n) {
  auto P = [](std::initializer_list<std::initializer_list<int>> pats) {
    std::set<CyclePattern> s;
    for (auto& p : pats) s.insert(CyclePattern(p));
    return s;
  };
  static const std::vector<GroupEntry> deg2 = {
      {"S(2)", 2, 2, P({{1, 1}, {2}})},
  };
  static const std::vector<GroupEntry> deg3 = {
      {"C(3)", 3, 3, P({{1, 1, 1}, {3}})},
      {"S(3)", 3, 6, P({{1, 1, 1}, {1, 2}, {3}})},
  };
  static const std::vector<GroupEntry> deg4 = {
      {"C(4)", 4, 4, P({{1, 1, 1, 1}, {2, 2}, {4}})},
      {"E(4)", 4, 4, P({{1, 1, 1, 1}, {2, 2}})},
      {"D(4)", 4, 8, P({{1, 1, 1, 1}, {1, 1, 2}, {2, 2}, {4}})},
      {"A(4)", 4, 12, P({{1, 1, 1, 1}, {1, 3}, {2, 2}})},
      {"S(4)", 4, 24, P({{1, 1, 1, 1}, {1, 1, 2}, {1, 3}, {2, 2}, {4}})},
  };
  static const std::vector<GroupEntry> deg5 = {
      {"C(5)", 5, 5, P({{1, 1, 1, 1, 1}, {5}})},
      {"D(5)", 5, 10, P({{1, 1, 1, 1, 1}, {1, 2, 2}, {5}})},
      {"F(20)", 5, 20, P({{1, 1, 1, 1, 1}, {1, 2, 2}, {1, 4}, {5}})},
      {"A(5)", 5, 60, P({{1, 1, 1, 1, 1}, {1, 1, 3}, {1, 2, 2}, {5}})},
      {"S(5)", 5, 120,
       P({{1, 1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 4}, {2, 3}, {5}})},
  };
  switch (n) {
    case 2: return deg2;
    case 3: return deg3;
    case 4: return deg4;
    case 5: return deg5;
    default: throw UnsupportedDegree("no catalog for degree " + std::to_string(n));
  }
}

std::set<CyclePattern> pattern_power_closure(const std::set<CyclePattern>& observed) {
  std::set<CyclePattern> out;
  for (const CyclePattern& pat : observed) {
    long lcm = 1;
    for (int part : pat) lcm = std::lcm(lcm, (long)part);
    for (long k = 1; k <= lcm; ++k) {
      CyclePattern img;
      for (int part : pat) {
        int g = (int)std::gcd((long)part, k);
        for (int i = 0; i < g; ++i) img.push_back(part / g);
      }
      std::sort(img.begin(), img.end());
      out.insert(img);
    }
  }
  return out;
}

ExclusionRule negation_exclusions(const BiPoly& Qt) {
  ExclusionRule rule;
  if (!Qt.even_in_T()) return rule;
  int n = Qt.deg_T();
  rule.active = true;
  rule.reason = "even polynomial in T: odd-degree factors pair under T -> -T";
  for (const CyclePattern& pat : partitions_of(n)) {
    std::map<int, int> odd_mult;
    for (int part : pat)
      if (part % 2 == 1) ++odd_mult[part];
    bool pairable = true;
    for (auto& [part, mult] : odd_mult) pairable = pairable && (mult % 2 == 0);
    if (!pairable) rule.excluded.insert(pat);
  }
  return rule;
}

std::vector<PatternWitness> sample_patterns(const BiPoly& Qt, const SampleBudget& budget) {
  if (!Qt.monic_in_T()) throw Error("pattern sampling requires a polynomial monic in T");
  std::vector<PatternWitness> out;
  std::set<CyclePattern> seen;
  for (long long p : primes_up_to(budget.max_prime)) {
    std::vector<long long> residues;
    if (p <= budget.exhaustive_below) {
      residues.resize(p);
      std::iota(residues.begin(), residues.end(), 0);
    } else {
      std::mt19937_64 rng(budget.seed * 0x9e3779b97f4a7c15ULL + (unsigned long long)p);
      std::set<long long> drawn;
      while ((long long)drawn.size() < std::min<long long>(budget.residues_per_prime, p)) {
        long long r = (long long)(rng() % (unsigned long long)p);
        if (drawn.insert(r).second) residues.push_back(r);
      }
    }
    for (long long r : residues) {
      FpPoly spec = specialize_mod(Qt, r, p);
      FpPoly d = fp_derivative(spec);
      if (d.is_zero() || !fp_gcd(spec, d).is_constant()) continue;  // repeated factor
      CyclePattern pat;
      for (auto [deg, cnt] : distinct_degree_factorization(spec))
        for (int i = 0; i < cnt; ++i) pat.push_back(deg);
      std::sort(pat.begin(), pat.end());
      if (seen.insert(pat).second) out.push_back({pat, p, r});
    }
  }
  return out;
}

GroupVerdict identify_group(int degree, const std::vector<PatternWitness>& observed,
                            const ExclusionRule& rule, const std::vector<GroupEntry>& catalog) {
  GroupVerdict v;
  v.degree = degree;
  v.observed = observed;
  std::set<CyclePattern> base;
  for (const auto& w : observed) {
    if ((int)std::accumulate(w.pattern.begin(), w.pattern.end(), 0) != degree)
      throw Error("observed pattern does not sum to the degree");
    base.insert(w.pattern);
  }
  v.closure = pattern_power_closure(base);
  if (rule.active) {
    v.excluded = rule.excluded;
    v.exclusion_reason = rule.reason;
    for (const auto& pat : v.closure)
      if (v.excluded.count(pat))
        throw Error("observed pattern is excluded by the negation rule; upstream bug");
  }

  bool exclusion_used = false;
  for (const GroupEntry& entry : catalog) {
    bool contains_all = std::includes(entry.patterns.begin(), entry.patterns.end(),
                                      v.closure.begin(), v.closure.end());
    if (!contains_all) continue;
    bool hits_excluded = false;
    for (const auto& pat : v.excluded) hits_excluded = hits_excluded || entry.patterns.count(pat);
    if (hits_excluded) {
      exclusion_used = true;
      continue;
    }
    v.candidates.push_back(entry.name);
  }
  if (v.candidates.empty())
    throw EmptyCandidates("no transitive group realizes the observed patterns");

  // irreducible specialization certifies transitivity
  for (const auto& w : observed)
    if ((int)w.pattern.size() == 1) {
      v.certificates.push_back("irreducible specialization at (p=" + std::to_string(w.p) +
                               ", r=" + std::to_string(w.r) + ")");
      break;
    }
  if (exclusion_used) v.certificates.push_back("even-polynomial exclusion: " + rule.reason);

  // prime degree + full cycle + transposition generate the symmetric group
  bool is_prime_deg = degree >= 2;
  for (int d = 2; d < degree; ++d)
    if (degree % d == 0) is_prime_deg = false;
  CyclePattern full{degree};
  CyclePattern transposition;
  for (int i = 0; i < degree - 2; ++i) transposition.push_back(1);
  transposition.push_back(2);
  if (is_prime_deg && v.closure.count(full) && v.closure.count(transposition)) {
    std::string sym = "S(" + std::to_string(degree) + ")";
    for (const auto& c : v.candidates)
      if (c == sym) {
        v.identified = sym;
        v.certificates.push_back("full cycle with transposition at prime degree");
      }
  }
  if (!v.identified && v.candidates.size() == 1) v.identified = v.candidates.front();
  return v;
}

std::set<long> normal_subgroup_orders(const std::string& name) {
  static const std::map<std::string, std::set<long>> table = {
      {"S(2)", {1, 2}},
      {"C(3)", {1, 3}},
      {"S(3)", {1, 3, 6}},
      {"C(4)", {1, 2, 4}},
      {"E(4)", {1, 2, 4}},
      {"D(4)", {1, 2, 4, 8}},
      {"A(4)", {1, 4, 12}},
      {"S(4)", {1, 4, 12, 24}},
      {"C(5)", {1, 5}},
      {"D(5)", {1, 5, 10}},
      {"F(20)", {1, 5, 10, 20}},
      {"A(5)", {1, 60}},
      {"S(5)", {1, 60, 120}},
  };
  auto it = table.find(name);
  if (it == table.end()) throw UnsupportedDegree("no normal-subgroup table for " + name);
  return it->second;
}

ConsistencyReport quotient_consistency_check(const GroupVerdict& full_degree_verdict,
                                             const GroupVerdict& companion) {
  if (!full_degree_verdict.identified || !companion.identified)
    throw Error("consistency check requires identified verdicts");
  ConsistencyReport rep;
  int n = full_degree_verdict.degree;
  const std::string& comp = *companion.identified;
  long comp_order = 0;
  for (const GroupEntry& e : transitive_catalog(companion.degree))
    if (e.name == comp) comp_order = e.order;

  // order-n groups would make the shared degree-n field Galois; the
  // companion's splitting field contains it, so the companion group needs
  // a normal subgroup of order |G| / n
  if (comp_order % n == 0) {
    std::set<long> normals = normal_subgroup_orders(comp);
    for (const GroupEntry& e : transitive_catalog(n)) {
      if (e.order != n) continue;
      if (!normals.count(comp_order / n)) rep.ruled_out.push_back(e.name);
    }
  }
  for (const auto& name : rep.ruled_out)
    if (*full_degree_verdict.identified == name) {
      rep.consistent = false;
      rep.note = name + " requires a normal subgroup of order " +
                 std::to_string(comp_order / n) + " in " + comp + ", which does not exist";
    }
  if (rep.consistent)
    rep.note = "verdict pair is consistent with one splitting field containing the other";
  return rep;
}

std::string pattern_to_string(const CyclePattern& pat) {
  std::string s = "[";
  for (size_t i = 0; i < pat.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(pat[i]);
  }
  return s + "]";
}

}  // namespace x0gal
