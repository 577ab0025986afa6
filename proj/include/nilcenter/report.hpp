#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilcenter/model.hpp"

namespace nilcenter {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "nilcenter-report/1";

struct RunOptions {
  std::optional<int> order;  // --order
  int max_order = 16;        // NILCENTER_MAX_ORDER
  std::string numeric;       // "k=v,..." rational values
  std::string subst;         // "k=expr,..." symbolic constraints
  std::vector<std::string> assumptions;
  bool normal_form = false;  // add the normal form to analyze
};

/// Input after substitutions, with the analysis order resolved: the
/// requested order, else 12 for numeric systems and 8 for symbolic ones,
/// never beyond a truncated input.
struct PreparedInput {
  std::string file;
  SystemModel system;
  int N = 12;
  std::vector<SideCondition> assumptions;
  Json input_echo;
};

PreparedInput prepare_input(const std::string& path, const RunOptions& opts);

Json report_analyze(const PreparedInput& in, bool with_normal_form);
Json report_cm(const PreparedInput& in);
Json report_omega(const PreparedInput& in);
Json report_nf(const PreparedInput& in);
Json report_focal(const PreparedInput& in);

/// Human-readable rendering of any report.
std::string render_text(const Json& report);

/// 0 for any verdict, 3 when a stage stopped at the jet bound.
int report_exit_code(const Json& report);

/// omega with a subscript index, e.g. "ω₁₂".
std::string omega_name(int n);

}  // namespace nilcenter
