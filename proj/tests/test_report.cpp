#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nilcenter/report.hpp"
#include "test_support.hpp"

using namespace nilcenter;
using testsupport::source_path;

namespace {

struct GoldenCase {
  std::string name;
  std::string command;
  std::string file;
  RunOptions opts;
};

std::vector<GoldenCase> golden_cases() {
  RunOptions none;
  RunOptions lorenz1;
  lorenz1.numeric = "a=1";
  RunOptions lorenz_branch;
  lorenz_branch.subst = "d=-2*a";
  lorenz_branch.assumptions = {"a>0"};
  RunOptions kukles_neg;
  kukles_neg.assumptions = {"b101<0"};
  RunOptions with_nf;
  with_nf.normal_form = true;
  RunOptions nf8;
  nf8.order = 8;
  return {
      {"eq52_analyze", "analyze", "systems/eq52.sys", none},
      {"eq52_omega", "omega", "systems/eq52.sys", none},
      {"trivial_analyze", "analyze", "systems/trivial.sys", none},
      {"integrable_analyze", "analyze", "systems/integrable.sys", with_nf},
      {"kukles_analyze", "analyze", "systems/kukles.sys", kukles_neg},
      {"kukles_center_analyze", "analyze", "systems/kukles_center.sys", kukles_neg},
      {"lorenz_general_omega", "omega", "systems/lorenz_general.sys", none},
      {"lorenz_branch_analyze", "analyze", "systems/lorenz_general.sys", lorenz_branch},
      {"lorenz_a1_analyze", "analyze", "systems/lorenz.sys", lorenz1},
      {"dynamo_analyze", "analyze", "systems/dynamo.sys", none},
      {"generic_cm", "cm", "systems/generic_quadratic.sys", [] {
         RunOptions o;
         o.order = 2;
         return o;
       }()},
      {"integrable_nf", "nf", "systems/integrable.sys", nf8},
  };
}

Json run_case(const GoldenCase& c) {
  const PreparedInput in = prepare_input(source_path(c.file), c.opts);
  Json r;
  if (c.command == "analyze") r = report_analyze(in, c.opts.normal_form);
  if (c.command == "omega") r = report_omega(in);
  if (c.command == "cm") r = report_cm(in);
  if (c.command == "nf") r = report_nf(in);
  r["input"]["file"] = c.file;
  return r;
}

// Exact match except floating-point numbers, which agree to 1e-8 absolute;
// integration error estimates are not compared.
bool same(const Json& a, const Json& b, const std::string& where, std::string& diff) {
  if (a.is_number() && b.is_number() && !a.is_number_float() && !b.is_number_float()) {
    if (a.get<long long>() != b.get<long long>()) diff = where;
    return a.get<long long>() == b.get<long long>();
  }
  if (a.is_number_float() || b.is_number_float()) {
    if (!a.is_number() || !b.is_number()) {
      diff = where;
      return false;
    }
    if (where.size() >= 6 && where.compare(where.size() - 6, 6, "/error") == 0) return true;
    if (std::abs(a.get<double>() - b.get<double>()) > 1e-8) {
      diff = where;
      return false;
    }
    return true;
  }
  if (a.type() != b.type() || a.size() != b.size()) {
    diff = where;
    return false;
  }
  if (a.is_object()) {
    for (const auto& [k, v] : a.items()) {
      if (!b.contains(k) || !same(v, b[k], where + "/" + k, diff)) {
        if (diff.empty()) diff = where + "/" + k;
        return false;
      }
    }
    return true;
  }
  if (a.is_array()) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!same(a[i], b[i], where + "/" + std::to_string(i), diff)) return false;
    return true;
  }
  if (a != b) diff = where;
  return a == b;
}

}  // namespace

TEST_CASE("golden reports") {
  const bool update = std::getenv("NILCENTER_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : golden_cases()) {
    CAPTURE(c.name);
    const Json r = run_case(c);
    const std::string path = source_path("tests/golden/" + c.name + ".json");
    if (update) {
      std::ofstream(path) << r.dump(2) << "\n";
      continue;
    }
    std::ifstream f(path);
    REQUIRE_MESSAGE(f.good(), "missing golden file " << path);
    const Json g = Json::parse(f);
    std::string diff;
    CHECK_MESSAGE(same(r, g, "", diff), "first difference at " << diff);
  }
}

TEST_CASE("text and JSON reports carry the same verdict content") {
  for (const auto& c : golden_cases()) {
    CAPTURE(c.name);
    const Json r = run_case(c);
    const std::string text = render_text(r);
    if (r.contains("verdict")) CHECK(text.find("verdict: " + r["verdict"]["summary"].get<std::string>()) != std::string::npos);
    if (r.contains("monodromy")) CHECK(text.find("monodromy: " + r["monodromy"]["status"].get<std::string>()) != std::string::npos);
    if (r.contains("obstruction"))
      for (const auto& [k, v] : r["obstruction"]["omegas"].items())
        CHECK(text.find(omega_name(std::stoi(k)) + "=" + v.get<std::string>()) != std::string::npos);
    for (const auto& sc : r["side_conditions"]) CHECK(text.find("  " + sc.get<std::string>() + "\n") != std::string::npos);
    // Every verdict-bearing block names its justification.
    for (const char* key : {"monodromy", "obstruction", "verdict", "center_manifold", "andreev"})
      if (r.contains(key)) CHECK(!r[key]["provenance"]["result"].get<std::string>().empty());
  }
}

TEST_CASE("report text examples") {
  RunOptions none;
  const Json om = report_omega(prepare_input(source_path("systems/eq52.sys"), none));
  CHECK(render_text(om).find("ω₄=0, ω₅=2 ← first nonzero (odd index)") != std::string::npos);

  const Json dyn = report_analyze(prepare_input(source_path("systems/dynamo.sys"), none), false);
  CHECK(dyn["verdict"]["status"] == "not-a-center");
  CHECK(dyn["verdict"]["index"] == 8);
  CHECK(dyn["verdict"]["citation"] == "even-index obstruction theorem");

  RunOptions a1;
  a1.numeric = "a=1";
  const Json lor = report_analyze(prepare_input(source_path("systems/lorenz.sys"), a1), false);
  CHECK(lor["verdict"]["status"] == "center-confirmed");
  CHECK(lor["numeric"]["agreement"] == "consistent");
  CHECK(report_exit_code(lor) == 0);

  RunOptions nf;
  const Json id = report_nf(prepare_input(source_path("systems/trivial.sys"), nf));
  CHECK(id["normal_form"]["transform_identity"] == true);
}

TEST_CASE("input errors and order resolution") {
  RunOptions o;
  CHECK_THROWS_AS(prepare_input(source_path("systems/bad.sys"), o), ValidationError);
  CHECK(prepare_input(source_path("systems/trivial.sys"), o).N == 12);
  CHECK(prepare_input(source_path("systems/kukles.sys"), o).N == 8);
  RunOptions big;
  big.order = 20;
  CHECK_THROWS_AS(prepare_input(source_path("systems/trivial.sys"), big), ValidationError);
  RunOptions bad_numeric;
  bad_numeric.numeric = "a=b";
  CHECK_THROWS(prepare_input(source_path("systems/lorenz.sys"), bad_numeric));
  RunOptions sym;
  CHECK_THROWS_AS(report_focal(prepare_input(source_path("systems/lorenz.sys"), sym)), ValidationError);
  CHECK(omega_name(12) == "ω₁₂");
}
