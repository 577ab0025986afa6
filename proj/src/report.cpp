#include "nilcenter/report.hpp"

#include <sstream>

#include "nilcenter/cmanifold.hpp"
#include "nilcenter/monodromy.hpp"
#include "nilcenter/normalform.hpp"
#include "nilcenter/numerics.hpp"
#include "nilcenter/obstruction.hpp"
#include "nilcenter/parser.hpp"

namespace nilcenter {

namespace {

const char* const kMonodromyCitation = "Andreev monodromy criterion";

Json provenance(const std::string& operation, const std::string& result) {
  return Json{{"operation", operation}, {"result", result}};
}

Json conditions_json(const SideConditionSet& set) {
  Json a = Json::array();
  for (const auto& c : set.items()) a.push_back(c.to_string());
  return a;
}

template <std::size_t N>
std::string jet_string(const Jet<N>& j) {
  std::string s = j.poly().to_string();
  if (!j.is_exact()) s += " + O(" + std::to_string(j.order() + 1) + ")";
  return s;
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json cm_json(const CenterManifoldJet& h) {
  Json coeffs = Json::array();
  for (const auto& [e, c] : h.h.poly().terms())
    coeffs.push_back({{"name", "h" + std::to_string(e[0]) + std::to_string(e[1])},
                      {"monomial", Poly2::monomial_string(e)},
                      {"value", c.to_string()}});
  return Json{{"h", jet_string(h.h)},
              {"order", h.order},
              {"coefficients", coeffs},
              {"provenance", provenance("cm_jet", "center manifold invariance equation")}};
}

Json andreev_json(const AndreevData& d, const PlanarSystem& pl) {
  return Json{{"restriction", {{"xdot", jet_string(pl.xdot())}, {"ydot", jet_string(pl.ydot())}}},
              {"F", jet_string(d.F)},
              {"f", jet_string(d.f)},
              {"Phi", jet_string(d.Phi)},
              {"alpha", optional_int(d.alpha)},
              {"beta", optional_int(d.beta)},
              {"n", optional_int(d.n)},
              {"a", d.a_tilde.to_string()},
              {"b", d.b_tilde.to_string()},
              {"Delta", d.Delta.to_string()},
              {"provenance", provenance("andreev_data", "Andreev data of the restricted system")}};
}

Json monodromy_json(const MonodromyVerdict& m) {
  return Json{{"status", m.status_label()},
              {"n", optional_int(m.n)},
              {"condition", m.condition_label()},
              {"reason", m.reason},
              {"side_conditions", conditions_json(m.side_conditions)},
              {"provenance", provenance("classify_monodromy", kMonodromyCitation)}};
}

Json omega_json(const ObstructionSeries& o) {
  Json om = Json::object();
  for (const auto& [n, w] : o.omegas) om[std::to_string(n)] = w.to_string();
  Json first = nullptr;
  if (o.first_nonzero)
    first = {{"index", o.first_nonzero->first},
             {"value", o.first_nonzero->second.to_string()},
             {"parity", o.first_nonzero->first % 2 ? "odd" : "even"}};
  Json elim = Json::array();
  for (const auto& [k, n] : o.eliminations) elim.push_back({{"kernel_degree", k}, {"omega_index", n}});
  return Json{{"N", o.N},
              {"omegas", om},
              {"first_nonzero", first},
              {"trailing", "values after the first nonzero one are representative-dependent"},
              {"H", jet_string(o.H)},
              {"kernel_eliminations", elim},
              {"provenance", provenance("omega_series", "obstruction series X H = sum omega_n x^n")}};
}

Json verdict_json(const CenterVerdict& v) {
  return Json{{"status", v.status_label()},
              {"index", optional_int(v.index)},
              {"value", v.index ? Json(v.value.to_string()) : Json(nullptr)},
              {"summary", v.summary()},
              {"citation", v.citation},
              {"certificate", v.certificate},
              {"side_conditions", conditions_json(v.side_conditions)},
              {"provenance", provenance("center_verdict", v.citation)}};
}

Json non_monodromic_verdict(const MonodromyVerdict& m) {
  const std::string status = m.status == MonodromyVerdict::Status::Inconclusive ? "inconclusive" : "not-monodromic";
  std::string summary = status + ": " + m.reason;
  if (m.status == MonodromyVerdict::Status::NotMonodromic) summary += "; no center or focus";
  summary += std::string(" (") + kMonodromyCitation + ")";
  return Json{{"status", status},
              {"index", nullptr},
              {"value", nullptr},
              {"summary", summary},
              {"citation", kMonodromyCitation},
              {"certificate", ""},
              {"side_conditions", conditions_json(m.side_conditions)},
              {"provenance", provenance("classify_monodromy", kMonodromyCitation)}};
}

Json nf_json(const SystemModel& s, const NormalFormResult& nf) {
  bool residual_zero = true;
  for (const auto& r : conjugacy_residual(s, nf)) residual_zero = residual_zero && r.is_zero();
  const SystemModel g = nf.system();
  return Json{{"order", nf.order},
              {"P1", jet_string(nf.P1)},
              {"Q2", jet_string(nf.Q2)},
              {"R1", jet_string(nf.R1)},
              {"system", {{"dx", g.field()[0].to_string()}, {"dy", g.field()[1].to_string()}, {"dz", g.field()[2].to_string()}}},
              {"transform_identity", nf.transform_is_identity()},
              {"transform",
               {jet_string(nf.transform[0]), jet_string(nf.transform[1]), jet_string(nf.transform[2])}},
              {"conjugacy_residual_zero", residual_zero},
              {"provenance", provenance("normal_form", "formal normal form x' = y + x P1, y' = Q2 + y P1, z' = z(-lambda + R1)")}};
}

Json pattern_json(const IntegrabilityPattern& ip) {
  return Json{{"n", ip.n},
              {"p1_zero", ip.p1_zero_to_m},
              {"m", optional_int(ip.m_index)},
              {"matches_2sn_minus_1", ip.matches_2sn_minus_1},
              {"provenance", provenance("integrability_pattern", "integrable normal forms have P1 = 0 or m = 2sn - 1")}};
}

const std::vector<double> kFocalGrid = {0.02, 0.04, 0.08, 0.16};

Json displacement_json(const DisplacementResult& d) {
  Json samples = Json::array();
  for (const auto& s : d.samples)
    samples.push_back({{"rho0", s.rho0}, {"d", s.d}, {"error", s.err}, {"decided", s.decided()}});
  return Json{{"n", d.n},
              {"T", d.T},
              {"samples", samples},
              {"below_floor", d.below_floor},
              {"sign", d.sign ? Json(*d.sign) : Json(nullptr)},
              {"exponent", d.exponent ? Json(*d.exponent) : Json(nullptr)},
              {"provenance", provenance("displacement", "generalized polar displacement map")}};
}

struct Stages {
  CenterManifoldJet cm;
  PlanarSystem pl;
  AndreevData d;
  MonodromyVerdict m;
};

Stages monodromy_stages(const PreparedInput& in) {
  Stages st;
  st.cm = cm_jet(in.system, in.N);
  st.pl = restrict_to(in.system, st.cm);
  st.d = andreev_data(st.pl);
  st.m = classify_monodromy(st.d, SignContext(in.assumptions));
  return st;
}

Json header(const std::string& command, const PreparedInput& in) {
  return Json{{"schema", kSchema}, {"command", command}, {"input", in.input_echo}};
}

std::string subscript(int n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

std::string str(const Json& j) {
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render_conditions(std::ostringstream& os, const Json& arr, const std::string& title) {
  if (!arr.is_array() || arr.empty()) return;
  os << title << ":\n";
  for (const auto& c : arr) os << "  " << c.get<std::string>() << "\n";
}

}  // namespace

std::string omega_name(int n) { return "ω" + subscript(n); }

PreparedInput prepare_input(const std::string& path, const RunOptions& opts) {
  PreparedInput in;
  in.file = path;
  SystemModel s = load_system(path);
  if (!opts.subst.empty()) s = s.substitute(parse_assignments(opts.subst, s.params));
  if (!opts.numeric.empty()) {
    const auto vals = parse_assignments(opts.numeric, s.params);
    for (const auto& [k, v] : vals)
      if (!v.is_rational()) throw ValidationError("--numeric value for " + k + " is not a number: " + v.to_string());
    s = s.substitute(vals);
  }
  for (const auto& a : opts.assumptions) in.assumptions.push_back(parse_assumption(a, s.params));

  if (opts.order) {
    in.N = *opts.order;
  } else {
    in.N = s.params.empty() ? 12 : 8;
    if (!s.exact) in.N = std::min(in.N, s.order);
  }
  if (in.N < 2) throw ValidationError("order must be at least 2");
  if (in.N > opts.max_order)
    throw ValidationError("order " + std::to_string(in.N) + " exceeds NILCENTER_MAX_ORDER = " +
                          std::to_string(opts.max_order));
  s.check_order(in.N);
  in.system = s;

  Json assumptions = Json::array();
  for (const auto& a : in.assumptions) assumptions.push_back(a.to_string());
  const auto f = s.field();
  in.input_echo = Json{{"file", path},
                       {"system", {{"dx", f[0].to_string()}, {"dy", f[1].to_string()}, {"dz", f[2].to_string()}}},
                       {"lambda", s.lambda.to_string()},
                       {"params", s.params},
                       {"exact", s.exact},
                       {"order", in.N},
                       {"numeric", opts.numeric},
                       {"subst", opts.subst},
                       {"assumptions", assumptions}};
  return in;
}

Json report_cm(const PreparedInput& in) {
  Json r = header("cm", in);
  const CenterManifoldJet h = cm_jet(in.system, in.N);
  r["center_manifold"] = cm_json(h);
  SideConditionSet sc = in.system.side_conditions;
  sc.merge(h.side_conditions);
  r["side_conditions"] = conditions_json(sc);
  return r;
}

Json report_omega(const PreparedInput& in) {
  Json r = header("omega", in);
  const ObstructionSeries o = omega_series(in.system, in.N);
  r["obstruction"] = omega_json(o);
  SideConditionSet sc = in.system.side_conditions;
  sc.merge(o.side_conditions);
  r["side_conditions"] = conditions_json(sc);
  return r;
}

Json report_nf(const PreparedInput& in) {
  Json r = header("nf", in);
  const NormalFormResult nf = normal_form(in.system, in.N);
  r["normal_form"] = nf_json(in.system, nf);
  if (in.N >= 3) {
    const Stages st = monodromy_stages(in);
    r["monodromy"] = monodromy_json(st.m);
    if (st.m.status == MonodromyVerdict::Status::Monodromic)
      r["integrability_pattern"] = pattern_json(integrability_pattern(nf, *st.m.n));
  }
  SideConditionSet sc = in.system.side_conditions;
  sc.merge(nf.side_conditions);
  r["side_conditions"] = conditions_json(sc);
  return r;
}

Json report_focal(const PreparedInput& in) {
  if (!in.system.params.empty()) {
    std::string names;
    for (const auto& p : in.system.params) names += (names.empty() ? "" : ", ") + p;
    throw ValidationError("focal needs --numeric values for: " + names);
  }
  Json r = header("focal", in);
  const Stages st = monodromy_stages(in);
  r["monodromy"] = monodromy_json(st.m);
  if (st.m.status == MonodromyVerdict::Status::Monodromic) {
    r["gen_trig"] = {{"n", *st.m.n}, {"T", gen_trig_period(*st.m.n)}};
    r["displacement"] = displacement_json(displacement(st.pl, *st.m.n, kFocalGrid));
  }
  return r;
}

Json report_analyze(const PreparedInput& in, bool with_normal_form) {
  Json r = header("analyze", in);
  const Stages st = monodromy_stages(in);
  r["center_manifold"] = cm_json(st.cm);
  r["andreev"] = andreev_json(st.d, st.pl);
  r["monodromy"] = monodromy_json(st.m);
  SideConditionSet sc = in.system.side_conditions;
  sc.merge(st.cm.side_conditions);
  sc.merge(st.d.side_conditions);

  const ObstructionSeries o = omega_series(in.system, in.N);
  r["obstruction"] = omega_json(o);
  sc.merge(o.side_conditions);

  std::optional<CenterVerdict> verdict;
  if (st.m.status == MonodromyVerdict::Status::Monodromic) {
    verdict = center_verdict(in.system, st.d, st.m, o, SignContext(in.assumptions));
    r["verdict"] = verdict_json(*verdict);
    sc.merge(verdict->side_conditions);
  } else {
    r["verdict"] = non_monodromic_verdict(st.m);
    sc.merge(st.m.side_conditions);
  }
  if (with_normal_form) {
    const NormalFormResult nf = normal_form(in.system, in.N);
    r["normal_form"] = nf_json(in.system, nf);
    if (st.m.n && st.m.status == MonodromyVerdict::Status::Monodromic)
      r["integrability_pattern"] = pattern_json(integrability_pattern(nf, *st.m.n));
  }
  if (in.system.params.empty() && st.m.status == MonodromyVerdict::Status::Monodromic) {
    Json num;
    try {
      const DisplacementResult d = displacement(st.pl, *st.m.n, kFocalGrid);
      num = displacement_json(d);
      std::string agreement = "consistent";
      if (verdict->status == CenterVerdict::Status::NotACenter && !d.sign) agreement = "discrepancy: no decided sign";
      if (verdict->status == CenterVerdict::Status::CenterConfirmed && !d.below_floor)
        agreement = "discrepancy: nonzero displacement";
      num["agreement"] = agreement;
    } catch (const NumericError& e) {
      num = Json{{"error", e.what()}};
    }
    r["numeric"] = num;
  }
  r["side_conditions"] = conditions_json(sc);
  return r;
}

int report_exit_code(const Json& report) {
  if (report.contains("monodromy") && report["monodromy"]["status"] == "inconclusive") return 3;
  return 0;
}

std::string render_text(const Json& r) {
  std::ostringstream os;
  const Json& in = r["input"];
  os << "nilcenter " << str(r["command"]) << " " << str(in["file"]) << "\n";
  os << "system:\n";
  for (const char* k : {"dx", "dy", "dz"}) os << "  " << k << " = " << str(in["system"][k]) << "\n";
  os << "order: " << in["order"].get<int>() << "\n";
  if (!in["assumptions"].empty()) {
    os << "assumptions:";
    for (const auto& a : in["assumptions"]) os << " " << a.get<std::string>();
    os << "\n";
  }

  if (r.contains("center_manifold")) {
    const Json& c = r["center_manifold"];
    os << "center manifold: z = " << str(c["h"]) << "\n";
    if (r["command"] == "cm")
      for (const auto& k : c["coefficients"]) os << "  " << str(k["name"]) << " = " << str(k["value"]) << "\n";
  }
  if (r.contains("andreev")) {
    const Json& a = r["andreev"];
    os << "restriction: x' = " << str(a["restriction"]["xdot"]) << "\n";
    os << "             y' = " << str(a["restriction"]["ydot"]) << "\n";
    os << "Andreev data: F = " << str(a["F"]) << "\n";
    os << "              f = " << str(a["f"]) << "\n";
    os << "              Phi = " << str(a["Phi"]) << "\n";
    os << "  alpha = " << str(a["alpha"]) << ", beta = " << str(a["beta"]) << ", n = " << str(a["n"])
       << ", a = " << str(a["a"]) << ", b = " << str(a["b"]) << ", Delta = " << str(a["Delta"]) << "\n";
  }
  if (r.contains("monodromy")) {
    const Json& m = r["monodromy"];
    os << "monodromy: " << str(m["status"]);
    if (!m["n"].is_null()) os << ", n = " << m["n"].get<int>();
    if (!str(m["condition"]).empty()) os << ", condition " << str(m["condition"]);
    os << ": " << str(m["reason"]) << " (" << kMonodromyCitation << ")\n";
  }
  if (r.contains("obstruction")) {
    const Json& o = r["obstruction"];
    os << "obstruction: ";
    const int first = o["first_nonzero"].is_null() ? -1 : o["first_nonzero"]["index"].get<int>();
    bool sep = false;
    for (const auto& [k, v] : o["omegas"].items()) {
      const int n = std::stoi(k);
      os << (sep ? ", " : "") << omega_name(n) << "=" << v.get<std::string>();
      if (n == first) os << " ← first nonzero (" << str(o["first_nonzero"]["parity"]) << " index)";
      sep = true;
    }
    os << "\n";
    if (first < 0)
      os << "  all omega vanish through order " << o["N"].get<int>() << "\n";
    else if (first < o["N"].get<int>())
      os << "  " << str(o["trailing"]) << "\n";
  }
  if (r.contains("verdict")) os << "verdict: " << str(r["verdict"]["summary"]) << "\n";
  if (r.contains("normal_form")) {
    const Json& n = r["normal_form"];
    os << "normal form (order " << n["order"].get<int>() << "):\n";
    os << "  P1 = " << str(n["P1"]) << "\n  Q2 = " << str(n["Q2"]) << "\n  R1 = " << str(n["R1"]) << "\n";
    os << "  transform: " << (n["transform_identity"].get<bool>() ? "identity" : "near-identity") << "\n";
    if (!n["transform_identity"].get<bool>()) {
      const char* names[] = {"x", "y", "z"};
      for (int i = 0; i < 3; ++i) os << "    " << names[i] << " -> " << str(n["transform"][i]) << "\n";
    }
    os << "  conjugacy residual: " << (n["conjugacy_residual_zero"].get<bool>() ? "zero" : "NONZERO") << "\n";
  }
  if (r.contains("integrability_pattern")) {
    const Json& p = r["integrability_pattern"];
    os << "integrability pattern: ";
    if (p["p1_zero"].get<bool>())
      os << "P1 = 0 to the computed order\n";
    else
      os << "m = " << str(p["m"]) << ", n = " << p["n"].get<int>() << ", m = 2sn - 1: "
         << (p["matches_2sn_minus_1"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (r.contains("gen_trig"))
    os << "period: T = " << r["gen_trig"]["T"].get<double>() << " (n = " << r["gen_trig"]["n"].get<int>() << ")\n";
  const Json* disp = r.contains("displacement") ? &r["displacement"] : (r.contains("numeric") ? &r["numeric"] : nullptr);
  if (disp) {
    if (disp->contains("error")) {
      os << "displacement: " << str((*disp)["error"]) << "\n";
    } else {
      os << "displacement:\n";
      for (const auto& s : (*disp)["samples"]) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "  rho0 = %.3g  d = %.6e  (error %.1e%s)\n", s["rho0"].get<double>(),
                      s["d"].get<double>(), s["error"].get<double>(), s["decided"].get<bool>() ? "" : ", below floor");
        os << buf;
      }
      if ((*disp)["below_floor"].get<bool>())
        os << "  below the error floor at every radius\n";
      else {
        os << "  sign " << str((*disp)["sign"]);
        if (!(*disp)["exponent"].is_null()) {
          char buf[64];
          std::snprintf(buf, sizeof buf, ", leading exponent %.2f", (*disp)["exponent"].get<double>());
          os << buf;
        }
        os << "\n";
      }
      if (disp->contains("agreement")) os << "  agreement with the verdict: " << str((*disp)["agreement"]) << "\n";
    }
  }
  render_conditions(os, r.value("side_conditions", Json::array()), "side conditions");
  return os.str();
}

}  // namespace nilcenter
