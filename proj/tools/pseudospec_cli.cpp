#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pseudospec/bounds.hpp"
#include "pseudospec/check_suite.hpp"
#include "pseudospec/gaps.hpp"
#include "pseudospec/matrix_io.hpp"
#include "pseudospec/quadratic.hpp"
#include "pseudospec/sweep.hpp"

namespace ps = pseudospec;
using nlohmann::json;

namespace {

// A config file supplies the model; without one the two-level system is used.
ps::SweepConfig model_config(const std::string& config_path, const std::string& fallback_json) {
  if (!config_path.empty()) return ps::load_sweep_config(config_path);
  return ps::parse_sweep_config(fallback_json);
}

std::string tls_fallback(double delta_e, double delta_gamma, double c) {
  json j;
  j["model"] = {{"type", "tls"}, {"delta_e", delta_e}, {"delta_gamma", delta_gamma}, {"c", c}};
  j["grid"] = {{"axes", json::array({{{"name", "reE"}, {"min", 0.0}, {"max", 0.0}, {"steps", 1}}})}};
  j["gaps"] = json::array({"q"});
  return j.dump();
}

json report_json(const ps::BoundReport& r) {
  return {{"name", r.name},           {"lhs", r.lhs},     {"rhs", r.rhs},
          {"satisfied", r.satisfied}, {"slack", r.slack}, {"hypothesis_met", r.hypothesis_met}};
}

int run_sweep_cmd(const std::string& config, const std::string& output, int threads) {
  ps::SweepConfig cfg = ps::load_sweep_config(config);
  if (threads >= 0) cfg.threads = threads;
  const ps::SweepResult result = ps::run_sweep(cfg);
  const std::string path = output.empty() ? cfg.output : output;
  if (path.empty() || path == "-")
    ps::write_csv(std::cout, result);
  else
    ps::write_csv(path, result);
  return 0;
}

int run_gap_cmd(const std::string& config, double x, double y, double re_e, double im_e,
                const ps::TwoLevelParams& tls) {
  const ps::SweepConfig cfg = model_config(config, tls_fallback(tls.delta_e, tls.delta_gamma, tls.c));
  const ps::MatrixTuple t = ps::build_model_tuple(cfg.model, cfg.kappa);
  const std::vector<std::string> names = ps::coordinate_names(cfg);
  std::vector<double> coords;
  json coord_json = json::object();
  for (const auto& n : names) {
    const double v = n == "x" ? x : n == "y" ? y : n == "reE" ? re_e : im_e;
    coords.push_back(v);
    coord_json[n] = v;
  }
  const ps::ProbeSite site = ps::probe_site(names, coords, cfg.kappa);
  const ps::CliffordRep rep = ps::build_rep(t.d1());

  ps::GapRecord rec;
  rec.site = site;
  rec.linear = ps::clifford_linear_gap(t, site, rep);
  rec.radial = ps::clifford_radial_gap(t, site, rep);
  const ps::QuadraticGaps q = ps::quadratic_gaps(t, site);
  rec.rq = q.rq;
  rec.lq = q.lq;
  rec.q = q.q;

  const ps::ResidualCertificate cert = ps::extract_approx_eigvec(t, site, rep);
  json out;
  out["model"] = cfg.model.type;
  out["kappa"] = cfg.kappa;
  out["coordinates"] = coord_json;
  out["site"] = {{"lambda", site.lambda}, {"nu", {site.nu[0].real(), site.nu[0].imag()}}};
  out["gap_linear"] = *rec.linear;
  out["gap_radial"] = *rec.radial;
  out["gap_rq"] = *rec.rq;
  out["gap_lq"] = *rec.lq;
  out["gap_q"] = *rec.q;
  out["certificate"] = {{"side", ps::side_name(cert.side)}, {"block_index", cert.block_index},
                        {"residuals", cert.residuals},      {"residual_norm", cert.residual_norm()},
                        {"bound", cert.bound},              {"eps1", cert.eps1},
                        {"eps2", cert.eps2}};
  json bounds = json::array();
  for (const auto& r : ps::check_gap_bounds(t, site, rep)) bounds.push_back(report_json(r));
  out["bounds"] = bounds;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_check_cmd(std::uint64_t seed, int instances, const std::string& output) {
  const ps::CheckSuiteResult result = ps::check_suite(seed, instances);
  const std::string text = ps::format_check_report(result);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream os(output);
    if (!os) throw ps::InputError("cannot open " + output + " for writing");
    os << text;
  }
  if (result.violations > 0) std::cerr << "check: " << result.violations << " violation(s)\n";
  return result.violations > 0 ? 1 : 0;
}

int run_export_cmd(const std::string& config, const std::string& directory) {
  const ps::SweepConfig cfg = model_config(config, R"({"model":{"type":"haldane"},
      "grid":{"axes":[{"name":"reE","min":0,"max":0,"steps":1}]},"gaps":["q"]})");
  if (cfg.model.type == "haldane") {
    ps::export_model(directory, ps::build_haldane_heterostructure(cfg.model.haldane));
  } else {
    const ps::MatrixTuple t = ps::build_model_tuple(cfg.model, 1.0);
    std::filesystem::create_directories(directory);
    const std::filesystem::path dir(directory);
    ps::write_matrix_market((dir / "H.mtx").string(), t.nonherm.front());
    const char* names[] = {"X.mtx", "Y.mtx"};
    for (int i = 0; i < t.d1() && i < 2; ++i) ps::write_matrix_market((dir / names[i]).string(), t.herm[i]);
  }
  return 0;
}

int run_diff_cmd(const std::string& a_path, const std::string& b_path, const std::string& col_a,
                 const std::string& col_b, const std::string& output) {
  const ps::SweepResult diff = ps::diff_maps(ps::read_csv(a_path), ps::read_csv(b_path), col_a, col_b);
  if (output.empty() || output == "-")
    ps::write_csv(std::cout, diff);
  else
    ps::write_csv(output, diff);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford and quadratic pseudospectral gaps of non-Hermitian matrix tuples"};
  app.require_subcommand(1);

  std::string sweep_config, sweep_output;
  int sweep_threads = -1;
  auto* sweep = app.add_subcommand("sweep", "Evaluate gaps over a probe grid and write CSV");
  sweep->add_option("config", sweep_config, "JSON sweep configuration")->required()->check(CLI::ExistingFile);
  sweep->add_option("-o,--output", sweep_output, "CSV output path ('-' for stdout); overrides the config");
  sweep->add_option("-j,--threads", sweep_threads, "Worker threads (0: all cores); PSPEC_THREADS overrides");

  std::string gap_config;
  double gx = 0.0, gy = 0.0, gre = 0.0, gim = 0.0;
  ps::TwoLevelParams tls;
  auto* gap = app.add_subcommand("gap", "Evaluate every gap at one probe site and print JSON");
  gap->add_option("-c,--config", gap_config, "Config whose model section is used (default: two-level system)");
  gap->add_option("--x", gx, "Position x (unscaled)");
  gap->add_option("--y", gy, "Position y (unscaled)");
  gap->add_option("--reE", gre, "Real part of the energy");
  gap->add_option("--imE", gim, "Imaginary part of the energy");
  gap->add_option("--delta-e", tls.delta_e, "Two-level detuning");
  gap->add_option("--delta-gamma", tls.delta_gamma, "Two-level loss asymmetry");
  gap->add_option("--coupling", tls.c, "Two-level coupling");

  std::uint64_t seed = 1;
  int instances = 100;
  std::string check_output;
  auto* check = app.add_subcommand("check", "Run the seeded bound-inequality fuzz suite");
  check->add_option("--seed", seed, "Random seed");
  check->add_option("-n,--instances", instances, "Number of random instances")->check(CLI::PositiveNumber);
  check->add_option("-o,--output", check_output, "Report path ('-' for stdout)");

  std::string export_config, export_dir = "model_export";
  auto* exporter = app.add_subcommand("export-model", "Write H, X, Y as MatrixMarket files plus a site table");
  exporter->add_option("-c,--config", export_config, "Config whose model section is used (default: Haldane flake)");
  exporter->add_option("-o,--output", export_dir, "Output directory");

  std::string diff_a, diff_b, col_a, col_b, diff_output;
  auto* diff = app.add_subcommand("diff", "Append |a[col_a] - b[col_b]| to CSV a");
  diff->add_option("a", diff_a, "First CSV")->required()->check(CLI::ExistingFile);
  diff->add_option("b", diff_b, "Second CSV")->required()->check(CLI::ExistingFile);
  diff->add_option("--col-a", col_a, "Column of a")->required();
  diff->add_option("--col-b", col_b, "Column of b")->required();
  diff->add_option("-o,--output", diff_output, "CSV output path ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) return run_sweep_cmd(sweep_config, sweep_output, sweep_threads);
    if (*gap) return run_gap_cmd(gap_config, gx, gy, gre, gim, tls);
    if (*check) return run_check_cmd(seed, instances, check_output);
    if (*exporter) return run_export_cmd(export_config, export_dir);
    if (*diff) return run_diff_cmd(diff_a, diff_b, col_a, col_b, diff_output);
  } catch (const ps::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
