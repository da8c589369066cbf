#include "x0gal/report.hpp"

namespace x0gal {

using nlohmann::json;

namespace {

json ternary_to_json(const TernaryForm& P) {
  json terms = json::array();
  for (const auto& [k, v] : P.coeffs)
    terms.push_back({k[0], k[1], k[2], v.str()});
  return terms;
}

TernaryForm ternary_of(const json& j) {
  TernaryForm P;
  for (const auto& t : j)
    P.set(t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), Int(t[3].get<std::string>()));
  return P;
}

json bipoly_to_json(const BiPoly& Q) {
  json terms = json::array();
  for (const auto& [k, v] : Q.coeffs) terms.push_back({k.first, k.second, v.str()});
  return terms;
}

BiPoly bipoly_of(const json& j) {
  BiPoly Q;
  for (const auto& t : j) Q.set(t[0].get<int>(), t[1].get<int>(), Int(t[2].get<std::string>()));
  return Q;
}

json patterns_to_json(const std::vector<PatternWitness>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back({{"pattern", w.pattern}, {"p", w.p}, {"r", w.r}});
  return out;
}

std::vector<PatternWitness> patterns_of(const json& j) {
  std::vector<PatternWitness> out;
  for (const auto& t : j)
    out.push_back({t.at("pattern").get<CyclePattern>(), t.at("p").get<long long>(),
                   t.at("r").get<long long>()});
  return out;
}

json pattern_set_to_json(const std::set<CyclePattern>& s) {
  json out = json::array();
  for (const auto& p : s) out.push_back(p);
  return out;
}

std::set<CyclePattern> pattern_set_of(const json& j) {
  std::set<CyclePattern> out;
  for (const auto& p : j) out.insert(p.get<CyclePattern>());
  return out;
}

}  // namespace

bool Report::operator==(const Report& o) const {
  return dataset == o.dataset && case_name == o.case_name && N == o.N && weight == o.weight &&
         relation_source == o.relation_source && relation == o.relation && Q == o.Q &&
         Qt == o.Qt && degrees == o.degrees && exclusions == o.exclusions &&
         verdict == o.verdict && budget == o.budget;
}

json report_to_json(const Report& r) {
  json j;
  j["dataset"] = r.dataset;
  j["case"] = r.case_name;
  j["N"] = r.N;
  j["weight"] = r.weight;
  j["relation_source"] = r.relation_source;
  j["relation"] = ternary_to_json(r.relation);
  j["Q"] = bipoly_to_json(r.Q);
  j["Qtilde"] = bipoly_to_json(r.Qt);
  j["degrees"] = {{"deg_T", r.degrees.deg_T},
                  {"total_degree", r.degrees.total_degree},
                  {"l_bound", r.degrees.lbound},
                  {"genus", r.degrees.genus},
                  {"genus_bound_applies", r.degrees.genus_bound_applies},
                  {"birational", r.degrees.birational},
                  {"full_genus_degree", r.degrees.full_genus_degree}};
  j["patterns"] = patterns_to_json(r.verdict.observed);
  j["exclusions"] = {{"active", r.exclusions.active},
                     {"reason", r.exclusions.reason},
                     {"excluded", pattern_set_to_json(r.exclusions.excluded)}};
  j["verdict"] = {{"degree", r.verdict.degree},
                  {"closure", pattern_set_to_json(r.verdict.closure)},
                  {"candidates", r.verdict.candidates},
                  {"identified", r.verdict.identified ? json(*r.verdict.identified) : json()},
                  {"certificates", r.verdict.certificates}};
  j["certificates"] = r.verdict.certificates;
  j["budget"] = {{"max_prime", r.budget.max_prime},
                 {"exhaustive_below", r.budget.exhaustive_below},
                 {"residues_per_prime", r.budget.residues_per_prime}};
  j["seed"] = r.budget.seed;
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.dataset = j.at("dataset").get<std::string>();
  r.case_name = j.at("case").get<std::string>();
  r.N = j.at("N").get<long>();
  r.weight = j.at("weight").get<long>();
  r.relation_source = j.at("relation_source").get<std::string>();
  r.relation = ternary_of(j.at("relation"));
  r.Q = bipoly_of(j.at("Q"));
  r.Qt = bipoly_of(j.at("Qtilde"));
  const json& d = j.at("degrees");
  r.degrees.deg_T = d.at("deg_T").get<int>();
  r.degrees.total_degree = d.at("total_degree").get<int>();
  r.degrees.lbound = d.at("l_bound").get<long>();
  r.degrees.genus = d.at("genus").get<long>();
  r.degrees.genus_bound_applies = d.at("genus_bound_applies").get<bool>();
  r.degrees.birational = d.at("birational").get<bool>();
  r.degrees.full_genus_degree = d.at("full_genus_degree").get<bool>();
  const json& e = j.at("exclusions");
  r.exclusions.active = e.at("active").get<bool>();
  r.exclusions.reason = e.at("reason").get<std::string>();
  r.exclusions.excluded = pattern_set_of(e.at("excluded"));
  const json& v = j.at("verdict");
  r.verdict.degree = v.at("degree").get<int>();
  r.verdict.observed = patterns_of(j.at("patterns"));
  r.verdict.closure = pattern_set_of(v.at("closure"));
  r.verdict.excluded = r.exclusions.excluded;
  r.verdict.exclusion_reason = r.exclusions.reason;
  r.verdict.candidates = v.at("candidates").get<std::vector<std::string>>();
  if (!v.at("identified").is_null())
    r.verdict.identified = v.at("identified").get<std::string>();
  r.verdict.certificates = v.at("certificates").get<std::vector<std::string>>();
  const json& b = j.at("budget");
  r.budget.max_prime = b.at("max_prime").get<long long>();
  r.budget.exhaustive_below = b.at("exhaustive_below").get<long long>();
  r.budget.residues_per_prime = b.at("residues_per_prime").get<int>();
  r.budget.seed = j.at("seed").get<unsigned long long>();
  return r;
}

int exit_code_for(const GroupVerdict& v) { return v.identified ? 0 : 2; }

}  // namespace x0gal
