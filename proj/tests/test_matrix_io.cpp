#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pseudospec/matrix_io.hpp"
#include "pseudospec/models.hpp"
#include "support.hpp"

using namespace pseudospec;

namespace {

ComplexMatrix parse(const std::string& text) {
  std::istringstream is(text);
  return read_matrix_market(is);
}

}  // namespace

TEST_CASE("MatrixMarket round trip is exact") {
  support::Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix m = rng.matrix(rng.integer(1, 7));
    m(0, 0) = 0.0;
    std::stringstream ss;
    write_matrix_market(ss, m);
    const ComplexMatrix back = read_matrix_market(ss);
    CHECK(back.rows() == m.rows());
    CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("only nonzero entries are written") {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(2, 0) = cplx(1.0, -2.0);
  std::ostringstream os;
  write_matrix_market(os, m);
  CHECK(os.str() ==
        "%%MatrixMarket matrix coordinate complex general\n"
        "3 3 1\n"
        "3 1 1.00000000000000000e+00 -2.00000000000000000e+00\n");
}

TEST_CASE("real, integer, symmetric and hermitian inputs") {
  const ComplexMatrix real = parse("%%MatrixMarket matrix coordinate real general\n% comment\n2 2 2\n1 1 1.5\n2 1 -3\n");
  CHECK(real(0, 0) == cplx(1.5, 0.0));
  CHECK(real(1, 0) == cplx(-3.0, 0.0));
  CHECK(real(0, 1) == cplx(0.0, 0.0));

  const ComplexMatrix sym = parse("%%MatrixMarket matrix coordinate integer symmetric\n2 2 1\n2 1 4\n");
  CHECK(sym(0, 1) == cplx(4.0, 0.0));
  CHECK(sym(1, 0) == cplx(4.0, 0.0));

  const ComplexMatrix herm = parse("%%MatrixMarket matrix coordinate complex hermitian\n2 2 2\n1 1 1 0\n2 1 0 1\n");
  CHECK(herm(1, 0) == cplx(0.0, 1.0));
  CHECK(herm(0, 1) == cplx(0.0, -1.0));
}

TEST_CASE("malformed MatrixMarket input is rejected") {
  CHECK_THROWS_AS(parse(""), InputError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix array complex general\n2 2\n"), InputError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 1\n"), InputError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate complex skew-symmetric\n2 2 0\n"), InputError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate complex general\n2 2\n"), InputError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate complex general\n2 2 2\n1 1 1 0\n"), InputError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate complex general\n2 2 1\n3 1 1 0\n"), InputError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate complex general\n2 2 1\n1 1 1\n"), InputError);
  CHECK_THROWS_AS(read_matrix_market(std::string("/nonexistent/file.mtx")), InputError);
}

TEST_CASE("model export writes matrices and the site table") {
  const LatticeModel m = build_haldane_heterostructure(HaldaneParams{});
  const auto dir = std::filesystem::temp_directory_path() / "pseudospec_test_export";
  std::filesystem::remove_all(dir);
  export_model(dir.string(), m);
  CHECK((read_matrix_market((dir / "H.mtx").string()) - m.h).cwiseAbs().maxCoeff() == 0.0);
  CHECK((read_matrix_market((dir / "X.mtx").string()) - m.x).cwiseAbs().maxCoeff() == 0.0);
  CHECK((read_matrix_market((dir / "Y.mtx").string()) - m.y).cwiseAbs().maxCoeff() == 0.0);

  std::ifstream sites(dir / "sites.csv");
  std::string line;
  REQUIRE(std::getline(sites, line));
  CHECK(line == "index,x,y,sublattice,region");
  int rows = 0;
  int lossy = 0;
  while (std::getline(sites, line)) {
    ++rows;
    lossy += line.find(",lossy") != std::string::npos ? 1 : 0;
  }
  CHECK(rows == m.size());
  CHECK(lossy == 42);
  std::filesystem::remove_all(dir);
}
