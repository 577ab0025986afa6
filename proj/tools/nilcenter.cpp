#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "nilcenter/errors.hpp"
#include "nilcenter/report.hpp"

using namespace nilcenter;

namespace {

int max_order_from_env() {
  const char* v = std::getenv("NILCENTER_MAX_ORDER");
  if (!v || !*v) return 16;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    throw ValidationError(std::string("NILCENTER_MAX_ORDER is not an integer: ") + v);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Center/focus analysis of nilpotent singular points on 3D center manifolds"};
  app.require_subcommand(1);

  std::string file;
  RunOptions opts;
  int order = 0;
  bool json = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("FILE", file, "system file")->required();
    sub->add_option("--order", order, "jet order N");
    sub->add_flag("--json", json, "emit JSON (schema v1)");
    sub->add_option("--numeric", opts.numeric, "rational parameter values k=v,...");
    sub->add_option("--subst", opts.subst, "parameter constraints k=expr,...");
    sub->add_option("--assume", opts.assumptions, "sign assumption expr<0, expr>0 or expr!=0")->take_all();
  };
  CLI::App* analyze = app.add_subcommand("analyze", "full pipeline");
  add_common(analyze);
  analyze->add_flag("--nf", opts.normal_form, "include the normal form");
  CLI::App* cm = app.add_subcommand("cm", "center manifold jet");
  add_common(cm);
  CLI::App* omega = app.add_subcommand("omega", "obstruction series");
  add_common(omega);
  CLI::App* nf = app.add_subcommand("nf", "normal form");
  add_common(nf);
  CLI::App* focal = app.add_subcommand("focal", "numeric displacement map");
  add_common(focal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    opts.max_order = max_order_from_env();
    if (order != 0) opts.order = order;
    const PreparedInput in = prepare_input(file, opts);
    Json report;
    if (analyze->parsed())
      report = report_analyze(in, opts.normal_form);
    else if (cm->parsed())
      report = report_cm(in);
    else if (omega->parsed())
      report = report_omega(in);
    else if (nf->parsed())
      report = report_nf(in);
    else
      report = report_focal(in);
    if (json)
      std::cout << report.dump(2) << "\n";
    else
      std::cout << render_text(report);
    return report_exit_code(report);
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.line << ":" << e.column << ": error: " << e.what() << "\n";
    return 2;
  } catch (const OrderError& e) {
    std::cerr << "error (jet bound): " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << file << ": validation error: " << e.what() << "\n";
    return 2;
  } catch (const FrameError& e) {
    std::cerr << file << ": frame error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
