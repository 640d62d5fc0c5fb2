#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "khoskein/cube.hpp"
#include "khoskein/diagram.hpp"
#include "khoskein/homology.hpp"
#include "khoskein/json_io.hpp"
#include "khoskein/skein.hpp"
#include "khoskein/spectral.hpp"

namespace {

using namespace khoskein;

std::string slurp_if_file(const std::string& input) {
  std::ifstream in(input);
  if (!in.good()) return input;
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  // Diagram files may spread items over several lines.
  for (char& c : text)
    if (c == '\n' || c == '\r') c = ' ';
  return text;
}

LinkDiagram load_diagram(const std::string& input, const std::string& ordering) {
  LinkDiagram d = parse_pd(slurp_if_file(input));
  if (!ordering.empty()) {
    std::vector<int> order;
    std::istringstream nums(ordering);
    std::string tok;
    while (std::getline(nums, tok, ',')) order.push_back(std::stoi(tok) - 1);
    d = d.with_ordering(order);
  }
  return d;
}

void print_homology(const LinkDiagram& d, bool json) {
  HomologyTable h = homology(build_cube(d));
  LaurentPoly kh = khovanov_polynomial(h);
  if (json) {
    nlohmann::json j;
    j["diagram"] = serialize(d);
    j["diagramDetail"] = nlohmann::json::parse(diagram_to_json(d));
    j["dims"] = nlohmann::json::array();
    for (const auto& [s, dim] : h.dims()) j["dims"].push_back({s.i, s.j, dim});
    j["poincare"] = poly_to_json(kh);
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "diagram: " << serialize(d) << "\n";
  for (const auto& [s, dim] : h.dims())
    std::cout << "KH^{" << s.i << "," << s.j << "} = Q^" << dim << "\n";
  std::cout << "Kh = " << kh.to_string() << "\n";
}

void print_poly(const char* name, const LaurentPoly& p, bool json) {
  if (json) {
    nlohmann::json j;
    j[name] = poly_to_json(p);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << p.to_string() << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"khoskein: Khovanov homology, generalized skein defects, and skein-tree invariants"};
  app.require_subcommand(1);

  std::string input, ordering, gamma_file;
  long dval = 1, dprime = 1;
  int crossing = 0;
  bool json = false, assume_minimal = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", input, "PD string (or path of a file holding one)")->required();
    sub->add_option("--ordering", ordering, "component ordering, e.g. 2,1 (1-based)");
    sub->add_flag("--json", json, "emit machine-readable JSON");
  };

  CLI::App* homology_cmd = app.add_subcommand("homology", "Khovanov homology table");
  add_common(homology_cmd);
  CLI::App* poincare_cmd = app.add_subcommand("poincare", "Khovanov (Poincare) polynomial");
  add_common(poincare_cmd);
  CLI::App* jones_cmd = app.add_subcommand("jones", "Jones polynomial (normalized and unnormalized)");
  add_common(jones_cmd);

  CLI::App* triple_cmd = app.add_subcommand("triple", "Conway triple and spectral pages at a crossing");
  add_common(triple_cmd);
  triple_cmd->add_option("--crossing", crossing, "crossing index (0-based)")->required();
  CLI::App* defect_cmd = app.add_subcommand("defect", "skein defect C and C^sym at a crossing");
  add_common(defect_cmd);
  defect_cmd->add_option("--crossing", crossing, "crossing index (0-based)")->required();
  CLI::App* verify_cmd = app.add_subcommand("verify-skein", "check the generalized skein relation at a crossing");
  add_common(verify_cmd);
  verify_cmd->add_option("--crossing", crossing, "crossing index (0-based)")->required();

  CLI::App* theta_cmd = app.add_subcommand("theta", "theta invariant");
  add_common(theta_cmd);
  theta_cmd->add_option("-d,--framing", dval, "framing parameter d >= 1")->check(CLI::PositiveNumber);
  CLI::App* khd_cmd = app.add_subcommand("khd", "Kh_d invariant (d' = d)");
  add_common(khd_cmd);
  khd_cmd->add_option("-d,--framing", dval, "framing parameter d >= 1")->check(CLI::PositiveNumber);
  CLI::App* khdd_cmd = app.add_subcommand("khdd", "averaged Kh_{d,d'} invariant");
  add_common(khdd_cmd);
  khdd_cmd->add_option("-d,--framing", dval, "framing parameter d >= 1")->check(CLI::PositiveNumber);
  khdd_cmd->add_option("--dprime", dprime, "second framing parameter d'");
  khdd_cmd->add_option("--gamma-file", gamma_file, "minimal diagrams per ordering");
  khdd_cmd->add_flag("--assume-minimal", assume_minimal,
                     "acknowledge that the input diagram is treated as the only minimal one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (homology_cmd->parsed()) {
    print_homology(load_diagram(input, ordering), json);
  } else if (poincare_cmd->parsed()) {
    print_poly("poincare", khovanov_of(load_diagram(input, ordering)), json);
  } else if (jones_cmd->parsed()) {
    LinkDiagram d = load_diagram(input, ordering);
    LaurentPoly jhat = euler_characteristic(build_cube(d));
    LaurentPoly j = jhat.divide_exact(q_plus_qinv());
    if (json) {
      nlohmann::json out;
      out["jones"] = poly_to_json(j);
      out["jones_unnormalized"] = poly_to_json(jhat);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "J = " << j.to_string() << "\n";
      std::cout << "Jhat = " << jhat.to_string() << "\n";
    }
  } else if (triple_cmd->parsed()) {
    SkeinAnalysis a = analyze_crossing(load_diagram(input, ordering), crossing);
    if (json) {
      std::cout << pages_report_json(a) << "\n";
    } else {
      std::cout << "D+  = " << serialize(a.triple.dplus) << "\n";
      std::cout << "D-  = " << serialize(a.triple.dminus) << "\n";
      std::cout << "D0+ = " << serialize(a.triple.d0plus) << "\n";
      std::cout << "D1+ = " << serialize(a.triple.d1plus) << "\n";
      std::cout << "c+ = " << a.triple.cplus << ", c- = " << a.triple.cminus << "\n";
      std::cout << "Kh(E2 top) = " << a.report.kh_e2_top.to_string() << "\n";
      std::cout << "Kh(E2 bot) = " << a.report.kh_e2_bot.to_string() << "\n";
      std::cout << "Kh(E3 top) = " << a.report.kh_e3_top.to_string() << "\n";
      std::cout << "Kh(E3 bot) = " << a.report.kh_e3_bot.to_string() << "\n";
    }
  } else if (defect_cmd->parsed()) {
    SkeinAnalysis a = analyze_crossing(load_diagram(input, ordering), crossing);
    if (json) {
      nlohmann::json out;
      out["defect"] = poly_to_json(a.report.defect_c);
      out["defect_sym"] = poly_to_json(a.report.defect_csym);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "C = " << a.report.defect_c.to_string() << "\n";
      std::cout << "Csym = " << a.report.defect_csym.to_string() << "\n";
    }
  } else if (verify_cmd->parsed()) {
    SkeinAnalysis a = analyze_crossing(load_diagram(input, ordering), crossing);
    if (json) {
      nlohmann::json out;
      out["holds"] = true;
      out["lhs"] = poly_to_json(a.report.lhs);
      out["defect"] = poly_to_json(a.report.defect_c);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "(t^2 q^3 - q) Kh(D0+) - t^2 q^4 Kh(D-) + Kh(D+) = "
                << a.report.lhs.to_string() << "\n";
      std::cout << "C(D0+, D-, D+) = " << a.report.defect_c.to_string() << "\n";
      std::cout << "generalized skein relation holds\n";
    }
  } else if (theta_cmd->parsed()) {
    print_poly("theta", theta(load_diagram(input, ordering), dval), json);
  } else if (khd_cmd->parsed()) {
    LinkDiagram d = load_diagram(input, ordering);
    ThetaParams params;
    params.d = DValue::numeric(dval);
    params.dprime = LaurentPoly(Rat(dval));
    LaurentPoly v;
    std::vector<int> marks = step1_marks(d);
    if (marks.empty()) {
      EvalCache cache;
      v = kh_ddprime(d, params, nullptr, &cache);
    } else {
      v = kh_ddprime_at(d, marks.front(), params);
    }
    print_poly("khd", v, json);
  } else if (khdd_cmd->parsed()) {
    LinkDiagram d = load_diagram(input, ordering);
    ThetaParams params;
    params.d = DValue::numeric(dval);
    params.dprime = LaurentPoly(Rat(dprime));
    GammaSet gamma;
    const GammaSet* gamma_ptr = nullptr;
    if (!gamma_file.empty()) {
      std::ifstream in(gamma_file);
      if (!in.good()) throw InputError("cannot read gamma file: " + gamma_file);
      std::stringstream ss;
      ss << in.rdbuf();
      gamma = parse_gamma_file(ss.str(), d);
      gamma_ptr = &gamma;
    } else if (!step1_marks(d).empty() && !assume_minimal) {
      throw InputError(
          "no gamma file given: pass --assume-minimal to treat the input diagram as the "
          "single minimal diagram for every ordering");
    }
    print_poly("khdd", kh_ddprime(d, params, gamma_ptr), json);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InternalError& e) {
    std::cerr << "internal consistency violation: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
