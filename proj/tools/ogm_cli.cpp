// Command-line harness: coefficient tables, certificate checks, bound
// tables, worst-case tightness, method-equivalence sweeps and single runs.
// Exit codes: 0 pass, 1 check failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "ogm/bounds.hpp"
#include "ogm/certificates.hpp"
#include "ogm/coefficients.hpp"
#include "ogm/fo_engine.hpp"
#include "ogm/methods.hpp"
#include "ogm/problems.hpp"
#include "ogm/worstcase.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

ogm::CoefficientTable table_for(const std::string& method, int n) {
  if (method == "fgm1") return ogm::build_h_fgm1(n);
  if (method == "fgm2") return ogm::build_h_fgm2(n);
  if (method == "ogm") return ogm::build_h_ogm_recursive(n);
  if (method == "ogm-direct") return ogm::build_h_ogm_direct(n);
  throw CLI::ValidationError("--method", "unknown coefficient family: " + method);
}

int cmd_coeffs(const std::string& method, int n, const std::string& format,
               const std::string& out_path) {
  const ogm::CoefficientTable h = table_for(method, n);
  if (format == "csv") {
    emit(ogm::to_csv(h), out_path);
  } else {
    json j;
    j["method"] = method;
    j["N"] = n;
    json entries = json::array();
    for (int i = 1; i <= n; ++i)
      for (int k = 0; k < i; ++k)
        entries.push_back({{"i", i}, {"k", k}, {"h", h(i, k)}});
    j["entries"] = std::move(entries);
    emit(j.dump(2), out_path);
  }
  return 0;
}

int cmd_certify(const std::string& family, int n, double tol,
                const std::string& out_path) {
  const ogm::CertFamily fam =
      family == "fgm" ? ogm::CertFamily::Fgm : ogm::CertFamily::Ogm;
  const ogm::CertificationReport report =
      ogm::run_full_certification(fam, n, tol);
  emit(ogm::certification_report_to_json(report), out_path);
  return report.pass ? 0 : 1;
}

int cmd_worstcase(int n, double l, double r, int dim,
                  const std::string& method, double tol,
                  const std::string& out_path) {
  const ogm::WorstCaseSpec spec = ogm::WorstCaseSpec::make(n, l, r, dim);
  json j;
  if (method == "ogm1" || method == "ogm2") {
    const ogm::TightnessReport report = ogm::tightness_check(
        spec, method == "ogm1" ? ogm::OgmVariant::Ogm1 : ogm::OgmVariant::Ogm2,
        tol);
    j["predicted_gap"] = report.predicted_gap;
    j["achieved_gap"] = report.achieved_gap;
    j["max_trace_dev"] = report.max_trace_dev;
    j["pass"] = report.pass;
    emit(j.dump(2), out_path);
    return report.pass ? 0 : 1;
  }
  // FGM runs on phi are informational: they report how far above the OGM
  // bound the gap lands, and never fail.
  const ogm::SmoothProblem problem = ogm::worst_case_problem(spec);
  const Eigen::VectorXd x0 = spec.r * spec.nu;
  const ogm::IterateTrace trace = method == "fgm1"
                                      ? ogm::run_fgm1(problem, x0, n)
                                      : ogm::run_fgm2(problem, x0, n);
  j["predicted_gap"] = ogm::ogm_bound(n, l, r).tight;
  j["achieved_gap"] = trace.f_gaps.back();
  j["informational"] = true;
  emit(j.dump(2), out_path);
  return 0;
}

int cmd_equivalence(int n, int dim, int trials, unsigned seed, double tol,
                    const std::string& out_path) {
  json per_trial = json::array();
  json worst = {{"fgm1_vs_fgm2", 0.0}, {"ogm1_vs_ogm2", 0.0},
                {"fgm1_vs_fo", 0.0},   {"fgm2_vs_fo", 0.0},
                {"ogm1_vs_fo", 0.0},   {"ogm2_vs_fo", 0.0}};
  double overall = 0.0;
  const double r = 1.0;

  const ogm::CoefficientTable h_fgm1 = ogm::build_h_fgm1(n);
  const ogm::CoefficientTable h_fgm2 = ogm::build_h_fgm2(n);
  const ogm::CoefficientTable h_ogm1 = ogm::build_h_ogm_recursive(n);
  const ogm::CoefficientTable h_ogm2 = ogm::build_h_ogm_direct(n);

  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937 rng(seed + static_cast<unsigned>(trial));
    std::uniform_real_distribution<double> uni(0.01, 1.0);
    std::vector<double> evs(static_cast<std::size_t>(dim));
    for (auto& ev : evs) ev = uni(rng);
    evs[0] = 1.0;
    const ogm::SmoothProblem problem =
        ogm::make_quadratic(dim, evs, seed + static_cast<unsigned>(trial));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd dir(dim);
    for (int j2 = 0; j2 < dim; ++j2) dir(j2) = gauss(rng);
    dir.normalize();
    const Eigen::VectorXd x0 = problem.optimum()->x_star + r * dir;

    const ogm::IterateTrace fgm1 = ogm::run_fgm1(problem, x0, n);
    const ogm::IterateTrace fgm2 = ogm::run_fgm2(problem, x0, n);
    const ogm::IterateTrace ogm1 = ogm::run_ogm1(problem, x0, n);
    const ogm::IterateTrace ogm2 = ogm::run_ogm2(problem, x0, n);
    const ogm::IterateTrace fo_fgm1 = ogm::run_fo(problem, x0, h_fgm1);
    const ogm::IterateTrace fo_fgm2 = ogm::run_fo(problem, x0, h_fgm2);
    const ogm::IterateTrace fo_ogm1 = ogm::run_fo(problem, x0, h_ogm1);
    const ogm::IterateTrace fo_ogm2 = ogm::run_fo(problem, x0, h_ogm2);

    auto dev = [r](const ogm::IterateTrace& a, const ogm::IterateTrace& b) {
      double worst_dev = 0.0;
      for (std::size_t i = 0; i < a.points.size(); ++i)
        worst_dev =
            std::max(worst_dev, (a.points[i] - b.points[i]).norm() / r);
      return worst_dev;
    };

    const json row = {{"trial", trial},
                      {"fgm1_vs_fgm2", dev(fgm1, fgm2)},
                      {"ogm1_vs_ogm2", dev(ogm1, ogm2)},
                      {"fgm1_vs_fo", dev(fgm1, fo_fgm1)},
                      {"fgm2_vs_fo", dev(fgm2, fo_fgm2)},
                      {"ogm1_vs_fo", dev(ogm1, fo_ogm1)},
                      {"ogm2_vs_fo", dev(ogm2, fo_ogm2)}};
    for (auto& [key, value] : worst.items()) {
      value = std::max(value.get<double>(), row.at(key).get<double>());
      overall = std::max(overall, value.get<double>());
    }
    per_trial.push_back(row);
  }

  json j;
  j["n"] = n;
  j["dim"] = dim;
  j["trials"] = trials;
  j["seed"] = seed;
  j["tol"] = tol;
  j["per_trial"] = std::move(per_trial);
  j["max_dev"] = std::move(worst);
  j["overall_max"] = overall;
  j["pass"] = overall <= tol;
  emit(j.dump(2), out_path);
  return overall <= tol ? 0 : 1;
}

int cmd_bounds(int nmax, double l, double r, const std::string& format,
               const std::string& out_path) {
  if (format == "json") {
    json rows = json::array();
    for (int n = 1; n <= nmax; ++n) {
      const ogm::BoundPair og = ogm::ogm_bound(n, l, r);
      const ogm::BoundPair fp = ogm::fgm_primary_bound(n, l, r);
      const ogm::BoundPair fa = ogm::fgm_auxiliary_bound(n, l, r);
      rows.push_back({{"n", n},
                      {"lower", ogm::lower_bound(n, l, r)},
                      {"ogm_tight", og.tight},
                      {"ogm_relaxed", og.relaxed},
                      {"fgm_primary", fp.tight},
                      {"fgm_aux", fa.tight},
                      {"ratio", og.tight / fp.tight}});
    }
    emit(rows.dump(2), out_path);
    return 0;
  }
  std::ostringstream csv;
  csv.precision(12);
  csv << "n,lower,ogm_tight,ogm_relaxed,fgm_primary,fgm_aux,ratio\n";
  for (int n = 1; n <= nmax; ++n) {
    const ogm::BoundPair og = ogm::ogm_bound(n, l, r);
    const ogm::BoundPair fp = ogm::fgm_primary_bound(n, l, r);
    const ogm::BoundPair fa = ogm::fgm_auxiliary_bound(n, l, r);
    csv << n << ',' << ogm::lower_bound(n, l, r) << ',' << og.tight << ','
        << og.relaxed << ',' << fp.tight << ',' << fa.tight << ','
        << og.tight / fp.tight << '\n';
  }
  emit(csv.str(), out_path);
  return 0;
}

int cmd_run(const std::string& method, int n, const std::string& problem_path,
            bool points, const std::string& out_path) {
  std::ifstream in(problem_path);
  if (!in)
    throw std::runtime_error("cannot open problem spec: " + problem_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const ogm::LoadedProblem loaded =
      ogm::make_problem_from_spec_json(buffer.str());

  ogm::IterateTrace trace;
  ogm::BoundPair bound;
  if (method == "fgm1" || method == "fgm2") {
    trace = method == "fgm1" ? ogm::run_fgm1(loaded.problem, loaded.x0, n)
                             : ogm::run_fgm2(loaded.problem, loaded.x0, n);
    bound = ogm::fgm_primary_bound(n, loaded.problem.lipschitz(), loaded.r);
  } else if (method == "ogm1" || method == "ogm2") {
    trace = method == "ogm1" ? ogm::run_ogm1(loaded.problem, loaded.x0, n)
                             : ogm::run_ogm2(loaded.problem, loaded.x0, n);
    bound = ogm::ogm_bound(n, loaded.problem.lipschitz(), loaded.r);
  } else {
    throw CLI::ValidationError("--method", "unknown method: " + method);
  }

  ogm::TraceRunInfo info;
  info.method = method;
  info.n = n;
  info.lipschitz = loaded.problem.lipschitz();
  info.r = loaded.r;
  info.bound_tight = bound.tight;
  info.bound_relaxed = bound.relaxed;
  // Point dumps get large; above dimension 10 they stay off unless forced.
  info.include_points = points || loaded.problem.dim() <= 10;
  emit(ogm::trace_to_json(trace, info), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order method toolkit: accelerated gradient methods, "
               "their step-coefficient tables and worst-case certificates"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "Write output to a file instead of stdout")
      ->capture_default_str();

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "Dump a step-coefficient table");
  coeffs->fallthrough();
  std::string coeffs_method = "ogm";
  int coeffs_n = 5;
  std::string coeffs_format = "csv";
  coeffs->add_option("--method", coeffs_method, "fgm1|fgm2|ogm|ogm-direct")
      ->check(CLI::IsMember({"fgm1", "fgm2", "ogm", "ogm-direct"}));
  coeffs->add_option("--n", coeffs_n, "Horizon N >= 1")->required();
  coeffs->add_option("--format", coeffs_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  // certify
  auto* certify = app.add_subcommand("certify", "Check a dual certificate");
  certify->fallthrough();
  std::string certify_family = "ogm";
  int certify_n = 10;
  double certify_tol = 1e-10;
  certify->add_option("--family", certify_family, "fgm|ogm")
      ->check(CLI::IsMember({"fgm", "ogm"}));
  certify->add_option("--n", certify_n, "Horizon N >= 1")->required();
  certify->add_option("--tol", certify_tol, "Residual tolerance");

  // worstcase
  auto* wc = app.add_subcommand("worstcase", "Tightness on the worst-case function");
  wc->fallthrough();
  int wc_n = 1;
  double wc_l = 1.0, wc_r = 1.0, wc_tol = 1e-10;
  int wc_dim = 3;
  std::string wc_method = "ogm1";
  wc->add_option("--n", wc_n, "Horizon N >= 1")->required();
  wc->add_option("--l", wc_l, "Gradient Lipschitz constant");
  wc->add_option("--r", wc_r, "Initial distance to the minimizer");
  wc->add_option("--dim", wc_dim, "Ambient dimension");
  wc->add_option("--method", wc_method, "ogm1|ogm2|fgm1|fgm2")
      ->check(CLI::IsMember({"ogm1", "ogm2", "fgm1", "fgm2"}));
  wc->add_option("--tol", wc_tol, "Relative tolerance on the achieved gap");

  // equivalence
  auto* eq = app.add_subcommand("equivalence",
                                "Cross-check method pairs on random quadratics");
  eq->fallthrough();
  int eq_n = 20, eq_dim = 10, eq_trials = 10;
  unsigned eq_seed = 12345;
  double eq_tol = 1e-10;
  eq->add_option("--n", eq_n, "Iterations per run");
  eq->add_option("--dim", eq_dim, "Quadratic dimension");
  eq->add_option("--trials", eq_trials, "Number of random problems");
  eq->add_option("--seed", eq_seed, "Base seed");
  eq->add_option("--tol", eq_tol, "Max allowed |dx|/R");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Table of convergence bounds");
  bounds->fallthrough();
  int bounds_nmax = 10;
  double bounds_l = 1.0, bounds_r = 1.0;
  std::string bounds_format = "csv";
  bounds->add_option("--nmax", bounds_nmax, "Largest n")->required();
  bounds->add_option("--l", bounds_l, "Gradient Lipschitz constant");
  bounds->add_option("--r", bounds_r, "Initial distance to the minimizer");
  bounds->add_option("--format", bounds_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  // run
  auto* run = app.add_subcommand("run", "Run a method on a problem-spec JSON file");
  run->fallthrough();
  std::string run_method = "ogm1";
  int run_n = 10;
  std::string run_problem;
  bool run_points = false;
  run->add_option("--method", run_method, "fgm1|fgm2|ogm1|ogm2")
      ->check(CLI::IsMember({"fgm1", "fgm2", "ogm1", "ogm2"}));
  run->add_option("--n", run_n, "Iterations")->required();
  run->add_option("--problem", run_problem, "Problem spec JSON file")
      ->required();
  run->add_flag("--points", run_points, "Always include iterate coordinates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (coeffs->parsed())
      return cmd_coeffs(coeffs_method, coeffs_n, coeffs_format, out_path);
    if (certify->parsed())
      return cmd_certify(certify_family, certify_n, certify_tol, out_path);
    if (wc->parsed())
      return cmd_worstcase(wc_n, wc_l, wc_r, wc_dim, wc_method, wc_tol,
                           out_path);
    if (eq->parsed())
      return cmd_equivalence(eq_n, eq_dim, eq_trials, eq_seed, eq_tol,
                             out_path);
    if (bounds->parsed())
      return cmd_bounds(bounds_nmax, bounds_l, bounds_r, bounds_format,
                        out_path);
    if (run->parsed())
      return cmd_run(run_method, run_n, run_problem, run_points, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
