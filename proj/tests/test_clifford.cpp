#include <doctest.h>

#include "pseudospec/clifford.hpp"

using namespace pseudospec;

TEST_CASE("build_rep satisfies every relation for d = 1..11") {
  for (int d = 1; d <= 11; ++d) {
    CAPTURE(d);
    const CliffordRep rep = build_rep(d);
    CHECK(rep.d == d);
    CHECK(static_cast<int>(rep.gammas.size()) == d);
    CHECK(rep.m == half_block_dimension(d));
    CHECK(rep.size() == 2 * rep.m);
    const auto violations = verify_rep(rep);
    for (const auto& v : violations) FAIL_CHECK(v.describe());
    CHECK(violations.empty());
  }
}

TEST_CASE("half-block dimension doubles every two generators") {
  CHECK(half_block_dimension(1) == 1);
  CHECK(half_block_dimension(2) == 1);
  CHECK(half_block_dimension(3) == 2);
  CHECK(half_block_dimension(4) == 2);
  CHECK(half_block_dimension(5) == 4);
  CHECK(half_block_dimension(11) == 32);
}

TEST_CASE("d = 1 and d = 2 use the Pauli matrices") {
  const CliffordRep one = build_rep(1);
  CHECK(one.gammas[0] == pauli::x());
  const CliffordRep two = build_rep(2);
  CHECK(two.gammas[0] == pauli::x());
  CHECK(two.gammas[1] == pauli::y());
  CHECK(two.diag_plus + two.diag_minus == pauli::z());
}

TEST_CASE("odd chains follow the gamma (x) sigma_x, I (x) sigma_y, I (x) sigma_z recursion") {
  const auto three = odd_chain(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == pauli::x());
  CHECK(three[1] == pauli::y());
  CHECK(three[2] == pauli::z());

  const auto five = odd_chain(5);
  REQUIRE(five.size() == 5);
  const GaussianMatrix id = pauli::identity();
  CHECK(five[0] == kron(pauli::x(), pauli::x()));
  CHECK(five[1] == kron(pauli::y(), pauli::x()));
  CHECK(five[2] == kron(pauli::z(), pauli::x()));
  CHECK(five[3] == kron(id, pauli::y()));
  CHECK(five[4] == kron(id, pauli::z()));

  // Pairwise anticommutation and involution for a longer chain.
  const auto nine = odd_chain(9);
  const GaussianMatrix ident = GaussianMatrix::identity(nine[0].size());
  for (std::size_t i = 0; i < nine.size(); ++i) {
    CHECK(nine[i] * nine[i] == ident);
    CHECK(nine[i].adjoint() == nine[i]);
    for (std::size_t k = i + 1; k < nine.size(); ++k) CHECK((nine[i] * nine[k] + nine[k] * nine[i]).is_zero());
  }
}

TEST_CASE("out-of-range requests are rejected") {
  CHECK_THROWS_AS(build_rep(0), InputError);
  CHECK_THROWS_AS(build_rep(12), InputError);
  CHECK_THROWS_AS(odd_chain(4), InputError);
  CHECK_THROWS_AS(odd_chain(1), InputError);
}

TEST_CASE("verify_rep reports broken relations") {
  CliffordRep rep = build_rep(3);
  rep.gammas[1] = rep.gammas[0];
  const auto violations = verify_rep(rep);
  REQUIRE_FALSE(violations.empty());
  bool found = false;
  for (const auto& v : violations) found = found || (v.relation == "anticommute" && v.i == 0 && v.k == 1);
  CHECK(found);

  CliffordRep scaled = build_rep(2);
  scaled.gammas[0] = scaled.gammas[0] + scaled.gammas[0];
  bool involution = false;
  for (const auto& v : verify_rep(scaled)) involution = involution || v.relation == "involution";
  CHECK(involution);
}
