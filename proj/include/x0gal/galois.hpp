#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "x0gal/fppoly.hpp"
#include "x0gal/poly.hpp"

namespace x0gal {

// multiset of cycle lengths, ascending, summing to the degree
using CyclePattern = std::vector<int>;

struct GroupEntry {
  std::string name;
  int degree = 0;
  long order = 0;
  std::set<CyclePattern> patterns;
};

// transitive subgroups of S(n) up to conjugacy, 2 <= n <= 5
const std::vector<GroupEntry>& transitive_catalog(int n);

// closure under sigma -> sigma^k: an l-cycle splits into gcd(l,k) cycles
// of length l/gcd(l,k)
std::set<CyclePattern> pattern_power_closure(const std::set<CyclePattern>& observed);

struct ExclusionRule {
  bool operator==(const ExclusionRule&) const = default;

  bool active = false;
  std::string reason;
  std::set<CyclePattern> excluded;
};

// for polynomials even in T: odd-degree factors of a squarefree
// specialization pair off under T -> -T, so patterns whose odd parts
// cannot be matched in equal pairs never occur
ExclusionRule negation_exclusions(const BiPoly& Qt);

struct SampleBudget {
  bool operator==(const SampleBudget&) const = default;

  long long max_prime = 200;
  long long exhaustive_below = 50;  // exhaustive residues for p <= this
  int residues_per_prime = 64;      // sampled count above the threshold
  unsigned long long seed = 0;
};

struct PatternWitness {
  CyclePattern pattern;
  long long p = 0;
  long long r = 0;
  bool operator==(const PatternWitness&) const = default;
};

// deterministic sweep; non-squarefree specializations are skipped; each
// pattern is recorded with its first witness
std::vector<PatternWitness> sample_patterns(const BiPoly& Qt, const SampleBudget& budget);

struct GroupVerdict {
  bool operator==(const GroupVerdict&) const = default;

  int degree = 0;
  std::vector<PatternWitness> observed;
  std::set<CyclePattern> closure;
  std::set<CyclePattern> excluded;
  std::string exclusion_reason;
  std::vector<std::string> candidates;
  std::optional<std::string> identified;
  std::vector<std::string> certificates;
};

GroupVerdict identify_group(int degree, const std::vector<PatternWitness>& observed,
                            const ExclusionRule& rule, const std::vector<GroupEntry>& catalog);

struct ConsistencyReport {
  bool consistent = true;
  std::vector<std::string> ruled_out;  // order-n groups impossible for full-degree h
  std::string note;
};

// Galois-theoretic cross-check of two identified verdicts sharing (f, g),
// the first for an h of full degree: if the full-degree group had order
// equal to the degree, the shared field would be Galois, forcing the
// companion's group to have a normal subgroup of matching index
ConsistencyReport quotient_consistency_check(const GroupVerdict& full_degree_verdict,
                                             const GroupVerdict& companion);

// normal-subgroup orders of a cataloged group (used by the consistency check)
std::set<long> normal_subgroup_orders(const std::string& name);

std::string pattern_to_string(const CyclePattern& pat);

}  // namespace x0gal
