#pragma once

// Probe-grid sweeps: JSON configuration, deterministic multi-threaded
// evaluation, CSV emission and difference maps.

#include <iosfwd>
#include <string>
#include <vector>

#include "pseudospec/models.hpp"
#include "pseudospec/quadratic.hpp"

namespace pseudospec {

struct AxisSpec {
  std::string name;  // x, y, reE or imE
  double min = 0.0;
  double max = 0.0;
  int steps = 0;

  double value(int k) const;
};

struct ModelSpec {
  std::string type;  // tls, haldane or file
  TwoLevelParams tls;
  HaldaneParams haldane;
  std::string h_path;                   // file: non-Hermitian matrix
  std::vector<std::string> position_paths;  // file: one or two position matrices
};

struct SweepConfig {
  ModelSpec model;
  double kappa = 1.0;
  std::vector<AxisSpec> axes;
  // Values for every probe coordinate that is not swept, keyed by name.
  std::vector<std::pair<std::string, double>> fixed;
  std::vector<std::string> gaps;    // subset of linear, radial, rq, lq, q
  std::vector<std::string> bounds;  // subset of linear_radial, radial_quadratic, linear_quadratic
  int threads = 1;                  // 0: one per hardware thread
  std::string output;               // empty: caller decides
};

/// Parses and validates a JSON configuration. Errors are ConfigError with the
/// JSON path of the offending field. Relative file paths in the model section
/// are resolved against `base_dir`.
SweepConfig parse_sweep_config(const std::string& json_text, const std::string& base_dir = "");
SweepConfig load_sweep_config(const std::string& path);

/// Probe coordinate names available for the model: x (and y), reE, imE.
std::vector<std::string> coordinate_names(const SweepConfig& cfg);

/// The tuple the sweep evaluates, positions already scaled by kappa.
MatrixTuple build_model_tuple(const ModelSpec& model, double kappa);

/// Physical coordinates (x, y, reE, imE) to a probe site; positions are
/// scaled by kappa to match the tuple.
ProbeSite probe_site(const std::vector<std::string>& names, const std::vector<double>& coords, double kappa);

struct SweepResult {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  int column(const std::string& name) const;  // -1 when absent
};

/// Thread count after applying the PSPEC_THREADS environment override.
int resolve_threads(int requested);

/// Evaluates every grid point. Row order follows the grid indices (first
/// axis outermost) whatever the thread count. Ten sampled rows are
/// re-evaluated through the public gap functions before returning.
SweepResult run_sweep(const SweepConfig& cfg);

struct RowCheck {
  int rows_checked = 0;
  double max_deviation = 0.0;
  bool ok = true;
};

/// Recomputes `count` pseudo-randomly chosen rows with direct module calls.
RowCheck verify_rows(const SweepConfig& cfg, const SweepResult& result, int count = 10);

void write_csv(std::ostream& os, const SweepResult& result);
void write_csv(const std::string& path, const SweepResult& result);
SweepResult read_csv(std::istream& is);
SweepResult read_csv(const std::string& path);

/// a with an extra column absdiff_<col_a>_<col_b> = |a[col_a] - b[col_b]|.
/// Grid and coordinate columns must agree exactly; InputError otherwise.
SweepResult diff_maps(const SweepResult& a, const SweepResult& b, const std::string& col_a, const std::string& col_b);

}  // namespace pseudospec
