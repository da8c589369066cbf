#include "x0gal/dataset.hpp"

#include <fstream>

#include <json.hpp>

#include "x0gal/errors.hpp"
#include "x0gal/qexp_io.hpp"

namespace x0gal {

namespace {

using nlohmann::json;

TernaryForm ternary_from_json(const json& j) {
  TernaryForm P;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 4)
      throw ParseError("ternary term must be [a, b, c, coeff]");
    P.set(term[0].get<int>(), term[1].get<int>(), term[2].get<int>(),
          Int(term[3].get<std::string>()));
  }
  return P;
}

BiPoly bipoly_from_json(const json& j) {
  BiPoly Q;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3)
      throw ParseError("bivariate term must be [lambda_deg, T_deg, coeff]");
    Q.set(term[0].get<int>(), term[1].get<int>(), Int(term[2].get<std::string>()));
  }
  return Q;
}

}  // namespace

std::map<std::string, Dataset> load_datasets(const std::string& data_dir) {
  std::ifstream in(data_dir + "/datasets.json");
  if (!in) throw ParseError("cannot open " + data_dir + "/datasets.json");
  json root = json::parse(in);

  std::map<std::string, Dataset> out;
  for (const auto& jd : root.at("datasets")) {
    Dataset ds;
    ds.label = jd.at("label").get<std::string>();
    ds.N = jd.at("N").get<long>();
    ds.weight = jd.at("weight").get<long>();
    if (jd.contains("qexp")) {
      auto forms = parse_qexp_file(data_dir + "/" + jd.at("qexp").get<std::string>());
      for (auto& lf : forms) {
        if (lf.series.level() != ds.N)
          throw ParseError(ds.label + ": form " + lf.label + " has the wrong level");
        ds.forms.emplace(lf.label, lf.series);
      }
    }
    for (const auto& jc : jd.value("cases", json::array())) {
      CaseSpec cs;
      cs.name = jc.at("name").get<std::string>();
      cs.kind = jc.at("kind").get<std::string>();
      if (jc.contains("forms"))
        for (const auto& f : jc.at("forms")) cs.forms.push_back(f.get<std::string>());
      cs.maxdeg = jc.value("maxdeg", 0);
      cs.fg_deepest = jc.value("fg_deepest", false);
      if (jc.contains("bundled_Q")) {
        cs.bundled_Q = bipoly_from_json(jc.at("bundled_Q"));
        if (cs.bundled_Q->content() != 1)
          throw ParseError(cs.name + ": bundled polynomial is not primitive");
      }
      if (jc.contains("expected_relation")) {
        cs.expected_relation = ternary_from_json(jc.at("expected_relation"));
        if (cs.expected_relation->content() != 1)
          throw ParseError(cs.name + ": recorded relation is not primitive");
      }
      if (jc.contains("expected_Q")) cs.expected_Q = bipoly_from_json(jc.at("expected_Q"));
      if (jc.contains("expected_Qt")) cs.expected_Qt = bipoly_from_json(jc.at("expected_Qt"));
      cs.expected_group = jc.value("expected_group", "");
      if (jc.contains("required_certificates"))
        for (const auto& c : jc.at("required_certificates"))
          cs.required_certificates.push_back(c.get<std::string>());
      cs.expect_degree_two = jc.value("expect_degree_two", false);
      cs.expect_birational = jc.value("expect_birational", false);
      cs.note = jc.value("note", "");
      ds.cases.push_back(std::move(cs));
    }
    out.emplace(ds.label, std::move(ds));
  }
  return out;
}

QExpansion resolve_form(const Dataset& ds, const std::string& ref) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : ref) {
    if (ch == '+') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  std::optional<QExpansion> acc;
  for (const auto& name : parts) {
    auto it = ds.forms.find(name);
    if (it == ds.forms.end()) throw ParseError("dataset " + ds.label + " has no form '" + name + "'");
    acc = acc ? qexp_add(*acc, it->second) : it->second;
  }
  return *acc;
}

}  // namespace x0gal
