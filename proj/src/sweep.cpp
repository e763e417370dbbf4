#include "pseudospec/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pseudospec/bounds.hpp"
#include "pseudospec/gaps.hpp"
#include "pseudospec/matrix_io.hpp"

namespace pseudospec {

using nlohmann::json;

namespace {

const std::vector<std::string> kGapOrder{"linear", "radial", "rq", "lq", "q"};
const std::vector<std::string> kBoundOrder{"linear_radial", "radial_quadratic", "linear_quadratic"};
const std::vector<std::string> kAxisNames{"x", "y", "reE", "imE"};

// ---- JSON helpers ---------------------------------------------------------

void allow_keys(const json& j, const std::string& path, const std::set<std::string>& keys) {
  if (!j.is_object()) throw ConfigError(path.empty() ? "$" : path, "must be an object");
  for (const auto& [key, value] : j.items())
    if (!keys.count(key)) throw ConfigError(path.empty() ? key : path + "." + key, "unknown field");
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(path, "must be finite");
  return v;
}

double number_or(const json& parent, const std::string& key, const std::string& path, double fallback) {
  return parent.contains(key) ? number(parent.at(key), join(path, key)) : fallback;
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "must be an integer");
  return j.get<int>();
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "must be a string");
  return j.get<std::string>();
}

std::string resolve_path(const std::string& p, const std::string& base_dir) {
  namespace fs = std::filesystem;
  if (base_dir.empty() || fs::path(p).is_absolute()) return p;
  return (fs::path(base_dir) / p).string();
}

RegionParams parse_region(const json& j, const std::string& path, RegionParams r) {
  allow_keys(j, path, {"M", "mu", "t", "t_c", "phi"});
  r.mass = number_or(j, "M", path, r.mass);
  r.loss = number_or(j, "mu", path, r.loss);
  r.t = number_or(j, "t", path, r.t);
  r.t_c = number_or(j, "t_c", path, r.t_c);
  r.phi = number_or(j, "phi", path, r.phi);
  return r;
}

ModelSpec parse_model(const json& j, const std::string& base_dir) {
  const std::string path = "model";
  if (!j.is_object()) throw ConfigError(path, "must be an object");
  if (!j.contains("type")) throw ConfigError("model.type", "missing");
  ModelSpec m;
  m.type = string_at(j.at("type"), "model.type");
  if (m.type == "tls") {
    allow_keys(j, path, {"type", "delta_e", "delta_gamma", "c"});
    m.tls.delta_e = number_or(j, "delta_e", path, m.tls.delta_e);
    m.tls.delta_gamma = number_or(j, "delta_gamma", path, m.tls.delta_gamma);
    m.tls.c = number_or(j, "c", path, m.tls.c);
  } else if (m.type == "haldane") {
    allow_keys(j, path, {"type", "r_topo", "r_trivial", "r_lossy", "regions"});
    HaldaneParams& p = m.haldane;
    p.r_topo = number_or(j, "r_topo", path, p.r_topo);
    p.r_trivial = number_or(j, "r_trivial", path, p.r_trivial);
    p.r_lossy = number_or(j, "r_lossy", path, p.r_lossy);
    if (j.contains("regions")) {
      const json& regions = j.at("regions");
      allow_keys(regions, "model.regions", {"topological", "trivial", "lossy"});
      if (regions.contains("topological"))
        p.topological = parse_region(regions.at("topological"), "model.regions.topological", p.topological);
      if (regions.contains("trivial"))
        p.trivial = parse_region(regions.at("trivial"), "model.regions.trivial", p.trivial);
      if (regions.contains("lossy")) p.lossy = parse_region(regions.at("lossy"), "model.regions.lossy", p.lossy);
    }
    try {
      p.validate();
    } catch (const InputError& e) {
      throw ConfigError(path, e.what());
    }
  } else if (m.type == "file") {
    allow_keys(j, path, {"type", "H", "positions"});
    if (!j.contains("H")) throw ConfigError("model.H", "missing");
    m.h_path = resolve_path(string_at(j.at("H"), "model.H"), base_dir);
    if (!j.contains("positions")) throw ConfigError("model.positions", "missing");
    const json& pos = j.at("positions");
    if (!pos.is_array() || pos.empty() || pos.size() > 2)
      throw ConfigError("model.positions", "must be an array of one or two file paths");
    for (std::size_t i = 0; i < pos.size(); ++i)
      m.position_paths.push_back(
          resolve_path(string_at(pos[i], "model.positions[" + std::to_string(i) + "]"), base_dir));
  } else {
    throw ConfigError("model.type", "must be one of tls, haldane, file");
  }
  return m;
}

std::vector<std::string> ordered_subset(const json& j, const std::string& path,
                                        const std::vector<std::string>& allowed) {
  if (!j.is_array()) throw ConfigError(path, "must be an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string item_path = path + "[" + std::to_string(i) + "]";
    const std::string name = string_at(j[i], item_path);
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      throw ConfigError(item_path, "'" + name + "' is not one of " + list);
    }
    if (!seen.insert(name).second) throw ConfigError(item_path, "duplicate entry '" + name + "'");
  }
  std::vector<std::string> out;
  for (const auto& a : allowed)
    if (seen.count(a)) out.push_back(a);
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17e", v);
  return buf;
}

bool is_index_column(const std::string& name) { return name.rfind("i_", 0) == 0; }

bool is_grid_column(const std::string& name) { return is_index_column(name) || contains(kAxisNames, name); }

// ---- evaluation ------------------------------------------------------------

class Evaluator {
 public:
  Evaluator(const SweepConfig& cfg, MatrixTuple tuple)
      : cfg_(cfg), tuple_(std::move(tuple)), names_(coordinate_names(cfg)) {
    for (const auto& g : cfg.gaps) want_[g] = true;
    for (const auto& b : cfg.bounds) want_[b] = true;
    need_localizer_ = want("linear") || want("radial") || !cfg.bounds.empty();
    if (need_localizer_) rep_ = build_rep(tuple_.d1());
  }

  const std::vector<std::string>& names() const { return names_; }
  const MatrixTuple& tuple() const { return tuple_; }
  const CliffordRep& rep() const { return rep_; }

  std::vector<double> evaluate(const std::vector<double>& coords) const {
    const ProbeSite site = probe_site(names_, coords, cfg_.kappa);
    std::vector<double> out;

    std::vector<cplx> spectrum;
    double departure = -1.0;
    double radial = 0.0;
    if (need_localizer_) {
      const ComplexMatrix l = nh_localizer(tuple_, site, rep_);
      if (want("linear") || !cfg_.bounds.empty()) {
        const SchurSpectrum s = schur_spectrum(l);
        spectrum = s.eigenvalues;
        departure = s.departure.schur;
      }
      if (want("radial")) radial = sigma_min(l);
    }
    double rq = 0.0, lq = 0.0;
    if (want("rq") || want("q")) rq = right_quadratic_gap(tuple_, site);
    if (want("lq") || want("q")) lq = left_quadratic_gap(tuple_, site);

    for (const auto& g : cfg_.gaps) {
      if (g == "linear") out.push_back(min_abs_real(spectrum));
      if (g == "radial") out.push_back(radial);
      if (g == "rq") out.push_back(rq);
      if (g == "lq") out.push_back(lq);
      if (g == "q") out.push_back(std::min(rq, lq));
    }
    if (!cfg_.bounds.empty()) {
      const BoundTerms terms = bound_terms(tuple_, site, rep_, departure);
      for (const auto& b : cfg_.bounds) {
        if (b == "linear_radial") out.push_back(terms.linear_radial());
        if (b == "radial_quadratic") out.push_back(terms.radial_quadratic());
        if (b == "linear_quadratic") out.push_back(terms.linear_quadratic());
      }
    }
    return out;
  }

 private:
  bool want(const std::string& key) const {
    auto it = want_.find(key);
    return it != want_.end() && it->second;
  }

  const SweepConfig& cfg_;
  MatrixTuple tuple_;
  std::vector<std::string> names_;
  CliffordRep rep_;
  std::map<std::string, bool> want_;
  bool need_localizer_ = false;
};

// Grid point `row` as (indices per swept axis, coordinates per name).
void grid_point(const SweepConfig& cfg, const std::vector<std::string>& names, std::size_t row,
                std::vector<int>& indices, std::vector<double>& coords) {
  indices.assign(cfg.axes.size(), 0);
  std::size_t rest = row;
  for (std::size_t a = cfg.axes.size(); a-- > 0;) {
    indices[a] = static_cast<int>(rest % cfg.axes[a].steps);
    rest /= cfg.axes[a].steps;
  }
  coords.assign(names.size(), 0.0);
  for (std::size_t c = 0; c < names.size(); ++c) {
    bool swept = false;
    for (std::size_t a = 0; a < cfg.axes.size(); ++a)
      if (cfg.axes[a].name == names[c]) {
        coords[c] = cfg.axes[a].value(indices[a]);
        swept = true;
      }
    if (!swept)
      for (const auto& [name, value] : cfg.fixed)
        if (name == names[c]) coords[c] = value;
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

double AxisSpec::value(int k) const {
  if (steps <= 1) return min;
  return min + (max - min) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

int SweepResult::column(const std::string& name) const {
  auto it = std::find(columns.begin(), columns.end(), name);
  return it == columns.end() ? -1 : static_cast<int>(it - columns.begin());
}

std::vector<std::string> coordinate_names(const SweepConfig& cfg) {
  std::vector<std::string> out{"x"};
  const bool planar = cfg.model.type == "haldane" ||
                      (cfg.model.type == "file" && cfg.model.position_paths.size() == 2);
  if (planar) out.push_back("y");
  out.push_back("reE");
  out.push_back("imE");
  return out;
}

SweepConfig parse_sweep_config(const std::string& json_text, const std::string& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("$", std::string("invalid JSON: ") + e.what());
  }
  allow_keys(root, "", {"model", "kappa", "grid", "gaps", "bounds", "threads", "output"});

  SweepConfig cfg;
  if (!root.contains("model")) throw ConfigError("model", "missing");
  cfg.model = parse_model(root.at("model"), base_dir);

  cfg.kappa = cfg.model.type == "haldane" ? cfg.model.haldane.kappa : 1.0;
  if (root.contains("kappa")) {
    cfg.kappa = number(root.at("kappa"), "kappa");
    if (!(cfg.kappa > 0.0)) throw ConfigError("kappa", "must be > 0");
  }
  cfg.model.haldane.kappa = cfg.kappa;

  const std::vector<std::string> names = coordinate_names(cfg);
  if (!root.contains("grid")) throw ConfigError("grid", "missing");
  const json& grid = root.at("grid");
  allow_keys(grid, "grid", {"axes", "fixed"});
  if (!grid.contains("axes")) throw ConfigError("grid.axes", "missing");
  const json& axes = grid.at("axes");
  if (!axes.is_array() || axes.empty() || axes.size() > 2)
    throw ConfigError("grid.axes", "must be an array with one or two axes");
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const std::string path = "grid.axes[" + std::to_string(i) + "]";
    const json& a = axes[i];
    allow_keys(a, path, {"name", "min", "max", "steps"});
    for (const char* key : {"name", "min", "max", "steps"})
      if (!a.contains(key)) throw ConfigError(path + "." + key, "missing");
    AxisSpec axis;
    axis.name = string_at(a.at("name"), path + ".name");
    if (!contains(names, axis.name)) {
      std::string list;
      for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
      throw ConfigError(path + ".name", "'" + axis.name + "' is not a probe coordinate of this model (" + list + ")");
    }
    for (const auto& other : cfg.axes)
      if (other.name == axis.name) throw ConfigError(path + ".name", "axis '" + axis.name + "' is swept twice");
    axis.min = number(a.at("min"), path + ".min");
    axis.max = number(a.at("max"), path + ".max");
    axis.steps = integer(a.at("steps"), path + ".steps");
    if (axis.steps < 1) throw ConfigError(path + ".steps", "must be >= 1");
    if (axis.steps == 1 && axis.min != axis.max) throw ConfigError(path + ".steps", "a single step requires min == max");
    if (axis.steps >= 2 && !(axis.min < axis.max)) throw ConfigError(path + ".max", "must be greater than min");
    cfg.axes.push_back(axis);
  }

  if (grid.contains("fixed")) {
    const json& fixed = grid.at("fixed");
    if (!fixed.is_object()) throw ConfigError("grid.fixed", "must be an object");
    for (const auto& [key, value] : fixed.items()) {
      const std::string path = "grid.fixed." + key;
      if (!contains(names, key)) throw ConfigError(path, "not a probe coordinate of this model");
      for (const auto& a : cfg.axes)
        if (a.name == key) throw ConfigError(path, "coordinate is also swept");
      cfg.fixed.emplace_back(key, number(value, path));
    }
  }
  for (const auto& n : names) {
    bool covered = false;
    for (const auto& a : cfg.axes) covered = covered || a.name == n;
    for (const auto& f : cfg.fixed) covered = covered || f.first == n;
    if (!covered) cfg.fixed.emplace_back(n, 0.0);
  }

  if (!root.contains("gaps")) throw ConfigError("gaps", "missing");
  cfg.gaps = ordered_subset(root.at("gaps"), "gaps", kGapOrder);
  if (cfg.gaps.empty()) throw ConfigError("gaps", "must request at least one gap");
  if (root.contains("bounds")) cfg.bounds = ordered_subset(root.at("bounds"), "bounds", kBoundOrder);

  if (root.contains("threads")) {
    cfg.threads = integer(root.at("threads"), "threads");
    if (cfg.threads < 0) throw ConfigError("threads", "must be >= 0");
  }
  if (root.contains("output")) cfg.output = resolve_path(string_at(root.at("output"), "output"), base_dir);
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("$", "cannot open config file " + path);
  std::stringstream buf;
  buf << is.rdbuf();
  return parse_sweep_config(buf.str(), std::filesystem::path(path).parent_path().string());
}

MatrixTuple build_model_tuple(const ModelSpec& model, double kappa) {
  if (model.type == "tls") return scale_positions(build_tls(model.tls), kappa);
  if (model.type == "haldane") return scaled_tuple(build_haldane_heterostructure(model.haldane), kappa);
  if (model.type == "file") {
    MatrixTuple t;
    for (const auto& p : model.position_paths) t.herm.push_back(read_matrix_market(p));
    t.nonherm.push_back(read_matrix_market(model.h_path));
    t.validate();
    return scale_positions(t, kappa);
  }
  throw InputError("unknown model type '" + model.type + "'");
}

ProbeSite probe_site(const std::vector<std::string>& names, const std::vector<double>& coords, double kappa) {
  ProbeSite site;
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == "x" || names[i] == "y") site.lambda.push_back(kappa * coords[i]);
    if (names[i] == "reE") re = coords[i];
    if (names[i] == "imE") im = coords[i];
  }
  site.nu.push_back(cplx(re, im));
  return site;
}

int resolve_threads(int requested) {
  if (const char* env = std::getenv("PSPEC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

SweepResult run_sweep(const SweepConfig& cfg) {
  const Evaluator eval(cfg, build_model_tuple(cfg.model, cfg.kappa));
  const auto& names = eval.names();

  SweepResult result;
  for (const auto& a : cfg.axes) result.columns.push_back("i_" + a.name);
  for (const auto& n : names) result.columns.push_back(n);
  for (const auto& g : cfg.gaps) result.columns.push_back("gap_" + g);
  for (const auto& b : cfg.bounds) result.columns.push_back("bound_" + b);

  std::size_t total = 1;
  for (const auto& a : cfg.axes) total *= static_cast<std::size_t>(a.steps);
  result.rows.resize(total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    std::vector<int> indices;
    std::vector<double> coords;
    for (std::size_t row = next++; row < total; row = next++) {
      try {
        grid_point(cfg, names, row, indices, coords);
        std::vector<double> values(indices.begin(), indices.end());
        values.insert(values.end(), coords.begin(), coords.end());
        const std::vector<double> gaps = eval.evaluate(coords);
        values.insert(values.end(), gaps.begin(), gaps.end());
        result.rows[row] = std::move(values);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = total;
      }
    }
  };

  const int threads = std::min<int>(resolve_threads(cfg.threads), static_cast<int>(total));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  const RowCheck check = verify_rows(cfg, result);
  if (!check.ok)
    throw std::runtime_error("sweep self-check failed: sampled row deviates from direct evaluation by " +
                             format_double(check.max_deviation));
  return result;
}

RowCheck verify_rows(const SweepConfig& cfg, const SweepResult& result, int count) {
  RowCheck out;
  if (result.rows.empty()) return out;
  const MatrixTuple t = build_model_tuple(cfg.model, cfg.kappa);
  const std::vector<std::string> names = coordinate_names(cfg);
  const bool need_rep = !cfg.bounds.empty() || contains(cfg.gaps, "linear") || contains(cfg.gaps, "radial");
  const CliffordRep rep = need_rep ? build_rep(t.d1()) : CliffordRep{};

  std::vector<std::size_t> picks;
  if (result.rows.size() <= static_cast<std::size_t>(count)) {
    for (std::size_t r = 0; r < result.rows.size(); ++r) picks.push_back(r);
  } else {
    std::mt19937_64 rng(0x5eedULL + result.rows.size());
    std::uniform_int_distribution<std::size_t> pick(0, result.rows.size() - 1);
    for (int k = 0; k < count; ++k) picks.push_back(pick(rng));
  }

  for (std::size_t r : picks) {
    const auto& row = result.rows[r];
    std::vector<double> coords;
    for (const auto& n : names) coords.push_back(row[result.column(n)]);
    const ProbeSite site = probe_site(names, coords, cfg.kappa);

    std::vector<std::pair<std::string, double>> expected;
    if (contains(cfg.gaps, "linear")) expected.emplace_back("gap_linear", clifford_linear_gap(t, site, rep));
    if (contains(cfg.gaps, "radial")) expected.emplace_back("gap_radial", clifford_radial_gap(t, site, rep));
    if (contains(cfg.gaps, "rq") || contains(cfg.gaps, "lq") || contains(cfg.gaps, "q")) {
      const QuadraticGaps q = quadratic_gaps(t, site);
      expected.emplace_back("gap_rq", q.rq);
      expected.emplace_back("gap_lq", q.lq);
      expected.emplace_back("gap_q", q.q);
    }
    if (!cfg.bounds.empty()) {
      const auto reports = check_gap_bounds(t, site, rep);
      for (std::size_t b = 0; b < kBoundOrder.size(); ++b) expected.emplace_back("bound_" + kBoundOrder[b], reports[b].rhs);
    }
    for (const auto& [column, value] : expected) {
      const int c = result.column(column);
      if (c < 0) continue;
      const double dev = std::abs(row[c] - value);
      out.max_deviation = std::max(out.max_deviation, dev);
      if (!(dev <= 1e-8 * std::max(1.0, std::abs(value)))) out.ok = false;
    }
    ++out.rows_checked;
  }
  return out;
}

void write_csv(std::ostream& os, const SweepResult& result) {
  for (std::size_t c = 0; c < result.columns.size(); ++c) os << (c ? "," : "") << result.columns[c];
  os << '\n';
  for (const auto& row : result.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      if (is_index_column(result.columns[c]))
        os << static_cast<long long>(row[c]);
      else
        os << format_double(row[c]);
    }
    os << '\n';
  }
}

void write_csv(const std::string& path, const SweepResult& result) {
  std::ofstream os(path);
  if (!os) throw InputError("cannot open " + path + " for writing");
  write_csv(os, result);
}

SweepResult read_csv(std::istream& is) {
  SweepResult out;
  std::string line;
  if (!std::getline(is, line)) throw InputError("CSV: missing header");
  out.columns = split(line, ',');
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != out.columns.size())
      throw InputError("CSV: line " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                       " fields, header has " + std::to_string(out.columns.size()));
    std::vector<double> row;
    for (const auto& cell : cells) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0')
        throw InputError("CSV: non-numeric value '" + cell + "' on line " + std::to_string(line_no));
      row.push_back(v);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

SweepResult read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open " + path);
  return read_csv(is);
}

SweepResult diff_maps(const SweepResult& a, const SweepResult& b, const std::string& col_a, const std::string& col_b) {
  const int ia = a.column(col_a);
  const int ib = b.column(col_b);
  if (ia < 0) throw InputError("diff_maps: first input has no column '" + col_a + "'");
  if (ib < 0) throw InputError("diff_maps: second input has no column '" + col_b + "'");
  if (a.rows.size() != b.rows.size()) throw InputError("diff_maps: inputs have different row counts");

  std::vector<std::pair<int, int>> grid;
  for (int c = 0; c < static_cast<int>(a.columns.size()); ++c) {
    if (!is_grid_column(a.columns[c])) continue;
    const int other = b.column(a.columns[c]);
    if (other < 0) throw InputError("diff_maps: grid column '" + a.columns[c] + "' missing from second input");
    grid.emplace_back(c, other);
  }
  for (const auto& name : b.columns)
    if (is_grid_column(name) && a.column(name) < 0)
      throw InputError("diff_maps: grid column '" + name + "' missing from first input");

  SweepResult out = a;
  out.columns.push_back("absdiff_" + col_a + "_" + col_b);
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    for (const auto& [ca, cb] : grid)
      if (a.rows[r][ca] != b.rows[r][cb])
        throw InputError("diff_maps: grids differ at row " + std::to_string(r) + " column '" + a.columns[ca] + "'");
    out.rows[r].push_back(std::abs(a.rows[r][ia] - b.rows[r][ib]));
  }
  return out;
}

}  // namespace pseudospec
