#include "pseudospec/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace pseudospec {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17e", v);
  return buf;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

void write_matrix_market(std::ostream& os, const ComplexMatrix& m) {
  long nnz = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) nnz += m(i, j) != cplx{} ? 1 : 0;
  os << "%%MatrixMarket matrix coordinate complex general\n";
  os << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const cplx v = m(i, j);
      if (v == cplx{}) continue;
      os << i + 1 << ' ' << j + 1 << ' ' << format_double(v.real()) << ' ' << format_double(v.imag()) << '\n';
    }
}

void write_matrix_market(const std::string& path, const ComplexMatrix& m) {
  std::ofstream os(path);
  if (!os) throw InputError("cannot open " + path + " for writing");
  write_matrix_market(os, m);
}

ComplexMatrix read_matrix_market(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw InputError("MatrixMarket: empty input");
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket" || lower(object) != "matrix" || lower(format) != "coordinate")
    throw InputError("MatrixMarket: expected a coordinate matrix banner");
  field = lower(field);
  symmetry = lower(symmetry);
  if (field != "complex" && field != "real" && field != "integer")
    throw InputError("MatrixMarket: unsupported field '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "hermitian")
    throw InputError("MatrixMarket: unsupported symmetry '" + symmetry + "'");

  while (std::getline(is, line) && (line.empty() || line[0] == '%')) {
  }
  long rows = 0, cols = 0, nnz = 0;
  if (!(std::istringstream(line) >> rows >> cols >> nnz) || rows <= 0 || cols <= 0 || nnz < 0)
    throw InputError("MatrixMarket: malformed size line");

  ComplexMatrix m = ComplexMatrix::Zero(rows, cols);
  for (long k = 0; k < nnz; ++k) {
    if (!std::getline(is, line)) throw InputError("MatrixMarket: fewer entries than declared");
    std::istringstream entry(line);
    long i = 0, j = 0;
    double re = 0.0, im = 0.0;
    if (!(entry >> i >> j >> re) || (field == "complex" && !(entry >> im)))
      throw InputError("MatrixMarket: malformed entry on data line " + std::to_string(k + 1));
    if (i < 1 || i > rows || j < 1 || j > cols)
      throw InputError("MatrixMarket: index out of range on data line " + std::to_string(k + 1));
    const cplx v(re, im);
    m(i - 1, j - 1) = v;
    if (i != j && symmetry == "symmetric") m(j - 1, i - 1) = v;
    if (i != j && symmetry == "hermitian") m(j - 1, i - 1) = std::conj(v);
  }
  return m;
}

ComplexMatrix read_matrix_market(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open " + path);
  return read_matrix_market(is);
}

void write_sites_csv(std::ostream& os, const LatticeModel& model) {
  os << "index,x,y,sublattice,region\n";
  for (int k = 0; k < model.size(); ++k) {
    const LatticeSite& s = model.sites[k];
    os << k << ',' << format_double(s.x) << ',' << format_double(s.y) << ',' << s.sublattice << ','
       << region_name(s.region) << '\n';
  }
}

void export_model(const std::string& directory, const LatticeModel& model) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  const fs::path dir(directory);
  write_matrix_market((dir / "H.mtx").string(), model.h);
  write_matrix_market((dir / "X.mtx").string(), model.x);
  write_matrix_market((dir / "Y.mtx").string(), model.y);
  std::ofstream os(dir / "sites.csv");
  if (!os) throw InputError("cannot write sites.csv in " + directory);
  write_sites_csv(os, model);
}

}  // namespace pseudospec
