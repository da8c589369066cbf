#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "x0gal/pipeline.hpp"

using namespace x0gal;

namespace {

// exit codes: 0 success / group identified; 2 candidate set only;
// 3 input or parse problem; 4 insufficient precision; 5 relation search
// failed (dependence, ambiguity, bound); 6 other errors
constexpr const char* kExitCodeHelp =
    "Exit codes: 0 success/identified, 2 candidate-set-only verdict, "
    "3 bad input, 4 insufficient precision, 5 relation search failure, 6 other errors.";

int classify_error(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 3;
  if (dynamic_cast<const InsufficientPrecision*>(&e)) return 4;
  if (dynamic_cast<const PrecisionError*>(&e)) return 4;
  if (dynamic_cast<const LinearDependence*>(&e)) return 5;
  if (dynamic_cast<const AmbiguousKernel*>(&e)) return 5;
  if (dynamic_cast<const NoRelationWithinBound*>(&e)) return 5;
  return 6;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(1) << "\n";
  } else {
    std::ofstream out(out_path);
    out << j.dump(1) << "\n";
  }
}

const CaseSpec* find_case(const Dataset& ds, const std::string& name) {
  for (const auto& cs : ds.cases)
    if (cs.name == name) return &cs;
  return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relation polynomials and Galois verdicts for modular-form triples on X_0(N)"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);
  app.fallthrough();

  std::string data_dir = "data";
  app.add_option("--data-dir", data_dir, "directory with datasets.json")->capture_default_str();

  long inv_N = 0;
  auto* inv_cmd = app.add_subcommand("invariants", "closed-form invariants of X_0(N)");
  inv_cmd->add_option("N", inv_N, "level")->required();

  std::string series_name;
  long series_prec = 20;
  auto* ser_cmd = app.add_subcommand("series", "print a classical q-expansion");
  ser_cmd->add_option("name", series_name, "e4 | delta | j")->required();
  ser_cmd->add_option("--prec", series_prec, "number of coefficients")->capture_default_str();

  std::string rel_dataset, rel_forms, rel_out, rel_case;
  int rel_maxdeg = 0;
  auto* rel_cmd = app.add_subcommand("relation", "recover the relation polynomial of a triple");
  rel_cmd->add_option("--dataset", rel_dataset, "dataset label")->required();
  rel_cmd->add_option("--forms", rel_forms, "comma-separated form labels f,g,h");
  rel_cmd->add_option("--case", rel_case, "bundled case name (instead of --forms)");
  rel_cmd->add_option("--maxdeg", rel_maxdeg, "degree bound for the search");
  rel_cmd->add_option("--out", rel_out, "write the JSON report to a file");

  std::string gal_dataset, gal_forms, gal_out, gal_case;
  int gal_maxdeg = 0;
  SampleBudget budget;
  auto* gal_cmd = app.add_subcommand("galois", "full pipeline: relation, monicization, verdict");
  gal_cmd->add_option("--dataset", gal_dataset, "dataset label")->required();
  gal_cmd->add_option("--forms", gal_forms, "comma-separated form labels f,g,h");
  gal_cmd->add_option("--case", gal_case, "bundled case name (instead of --forms)");
  gal_cmd->add_option("--maxdeg", gal_maxdeg, "degree bound for the search");
  gal_cmd->add_option("--max-prime", budget.max_prime, "largest specialization prime")
      ->capture_default_str();
  gal_cmd->add_option("--seed", budget.seed, "sampling seed")->capture_default_str();
  gal_cmd->add_option("--out", gal_out, "write the JSON report to a file");

  auto* vp_cmd =
      app.add_subcommand("verify-paper", "run every bundled case against the recorded results");
  std::string vp_out;
  vp_cmd->add_option("--out", vp_out, "write the JSON summary to a file");
  vp_cmd->add_option("--max-prime", budget.max_prime, "largest specialization prime");
  vp_cmd->add_option("--seed", budget.seed, "sampling seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inv_cmd) {
      CurveInvariants inv = curve_invariants(inv_N);
      nlohmann::json j = {{"N", inv.N},         {"mu", inv.mu},
                          {"nu2", inv.nu2},     {"nu3", inv.nu3},
                          {"cusps", inv.cusps}, {"genus", inv.genus},
                          {"hyperelliptic", to_string(inv.hyperelliptic)}};
      std::cout << j.dump(1) << "\n";
      return 0;
    }

    if (*ser_cmd) {
      QExpansion s = series_name == "e4"      ? eisenstein_e4(series_prec)
                     : series_name == "delta" ? delta(series_prec)
                     : series_name == "j"
                         ? qexp_div(qexp_pow(eisenstein_e4(series_prec + 2), 3),
                                    delta(series_prec + 2))
                         : throw ParseError("unknown series '" + series_name + "'");
      for (const auto& [n, c] : s.coeffs())
        if (n <= series_prec) std::cout << n << " " << c << "\n";
      return 0;
    }

    if (*rel_cmd || *gal_cmd) {
      bool galois_stage = bool(*gal_cmd);
      const std::string& label = galois_stage ? gal_dataset : rel_dataset;
      const std::string& forms = galois_stage ? gal_forms : rel_forms;
      const std::string& case_name = galois_stage ? gal_case : rel_case;
      const std::string& out_path = galois_stage ? gal_out : rel_out;
      int maxdeg = galois_stage ? gal_maxdeg : rel_maxdeg;

      auto datasets = load_datasets(data_dir);
      auto it = datasets.find(label);
      if (it == datasets.end()) throw ParseError("no dataset labeled '" + label + "'");
      const Dataset& ds = it->second;

      CaseSpec cs;
      if (!case_name.empty()) {
        const CaseSpec* found = find_case(ds, case_name);
        if (!found) throw ParseError("dataset has no case '" + case_name + "'");
        cs = *found;
      } else if (!forms.empty()) {
        cs.name = label + ":" + forms;
        cs.kind = "relation";
        cs.forms = split_csv(forms);
        if (cs.forms.size() != 3) throw ParseError("--forms wants three labels");
        cs.maxdeg = 8;
      } else if (ds.cases.size() == 1) {
        cs = ds.cases.front();
      } else {
        throw ParseError("give --forms or --case for this dataset");
      }
      if (maxdeg > 0) cs.maxdeg = maxdeg;

      if (!galois_stage) {
        // stop after the degree report
        Report rep;
        rep.dataset = ds.label;
        rep.case_name = cs.name;
        rep.N = ds.N;
        rep.weight = ds.weight;
        if (cs.kind == "bundled") {
          rep.relation_source = "bundled";
          rep.relation = homogenize(*cs.bundled_Q).normalized();
        } else if (cs.kind == "conic") {
          std::vector<QExpansion> basis;
          for (const auto& ref : cs.forms) basis.push_back(resolve_form(ds, ref));
          rep.relation_source = "recovered";
          rep.relation = hyperelliptic_conic(basis).conic;
        } else {
          QExpansion f = resolve_form(ds, cs.forms.at(0));
          QExpansion g = resolve_form(ds, cs.forms.at(1));
          QExpansion h = resolve_form(ds, cs.forms.at(2));
          rep.relation_source = "recovered";
          rep.relation = find_relation(f, g, h, cs.maxdeg);
        }
        rep.Q = dehomogenize(rep.relation);
        rep.Qt = monicize(rep.Q);
        rep.degrees =
            degree_report(rep.Q, ds.N, ds.weight, curve_invariants(ds.N), cs.fg_deepest);
        nlohmann::json j = report_to_json(rep);
        j.erase("patterns");
        j.erase("exclusions");
        j.erase("verdict");
        emit(j, out_path);
        return 0;
      }

      Report rep = run_pipeline(ds, cs, budget);
      emit(report_to_json(rep), out_path);
      return exit_code_for(rep.verdict);
    }

    if (*vp_cmd) {
      auto datasets = load_datasets(data_dir);
      VerifySummary summary = verify_paper(datasets, budget);
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& c : summary.cases) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.verdict.empty()) std::cout << "  " << c.verdict;
        std::cout << "\n";
        for (const auto& f : c.failures) std::cout << "      " << f << "\n";
        rows.push_back({{"case", c.name},
                        {"passed", c.passed},
                        {"verdict", c.verdict},
                        {"failures", c.failures}});
      }
      std::cout << (summary.all_passed ? "all cases passed" : "some cases FAILED") << "\n";
      if (!vp_out.empty()) {
        std::ofstream out(vp_out);
        out << rows.dump(1) << "\n";
      }
      return summary.all_passed ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  }
  return 0;
}
