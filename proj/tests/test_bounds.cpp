#include <doctest.h>

#include <cmath>

#include "pseudospec/bounds.hpp"
#include "pseudospec/gaps.hpp"
#include "pseudospec/models.hpp"
#include "pseudospec/quadratic.hpp"
#include "support.hpp"

using namespace pseudospec;

TEST_CASE("Hermitian data: linear and radial gaps coincide with zero right-hand side") {
  support::Rng rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const int d1 = rng.integer(1, 3);
    MatrixTuple t = rng.tuple(rng.integer(1, 5), d1, 0);
    t.nonherm.push_back(rng.hermitian(t.dim()));
    ProbeSite site = rng.site(d1, 0);
    site.nu.push_back(cplx(rng.normal(), 0.0));
    const BoundReport r = check_linear_vs_radial(t, site, build_rep(d1));
    CHECK(r.satisfied);
    CHECK(r.lhs <= 1e-10);
    CHECK(r.rhs <= 1e-10);
  }
}

TEST_CASE("commuting diagonal data: radial gap equals the quadratic gap") {
  support::Rng rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(1, 6);
    MatrixTuple t{{rng.real_diagonal(n), rng.real_diagonal(n)}, {ComplexMatrix::Zero(n, n)}};
    for (int i = 0; i < n; ++i) t.nonherm[0](i, i) = rng.complex_normal();
    const BoundReport r = check_radial_vs_quadratic(t, rng.site(2, 1), build_rep(2));
    CHECK(r.satisfied);
    CHECK(r.lhs <= 1e-12);
    CHECK(r.rhs <= 1e-7);
  }
}

TEST_CASE("two-level system at the exceptional point satisfies all three bounds") {
  const MatrixTuple t = build_tls({0.0, 2.0, 1.0});
  for (const auto& r : check_gap_bounds(t, ProbeSite{{0.0}, {cplx(0.0, 1.0)}}, build_rep(1))) {
    CAPTURE(r.name);
    CHECK(r.satisfied);
    CHECK(r.hypothesis_met);
  }
}

TEST_CASE("gap bounds hold on random instances") {
  support::Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const int d1 = rng.integer(1, 3);
    const MatrixTuple t = rng.tuple(rng.integer(1, 6), d1, 1);
    const ProbeSite site = rng.site(d1, 1);
    const auto reports = check_gap_bounds(t, site, build_rep(d1));
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
      CAPTURE(r.name);
      CHECK(r.satisfied);
      CHECK(r.slack == doctest::Approx(r.rhs - r.lhs));
    }
    CHECK(reports[2].rhs == doctest::Approx(reports[0].rhs + reports[1].rhs));
  }
}

TEST_CASE("single-check entry points agree with the combined call") {
  support::Rng rng(54);
  const MatrixTuple t = rng.tuple(3, 2, 1);
  const ProbeSite site = rng.site(2, 1);
  const CliffordRep rep = build_rep(2);
  const auto all = check_gap_bounds(t, site, rep);
  CHECK(check_linear_vs_radial(t, site, rep).rhs == all[0].rhs);
  CHECK(check_radial_vs_quadratic(t, site, rep).lhs == all[1].lhs);
  CHECK(check_linear_vs_quadratic(t, site, rep).name == "linear_quadratic");
}

TEST_CASE("make_report tolerance") {
  CHECK(make_report("x", 1.0 + 1e-10, 1.0, 1.0).satisfied);
  CHECK_FALSE(make_report("x", 1.0 + 1e-6, 1.0, 1.0).satisfied);
  CHECK(make_report("x", 1.0 + 1e-6, 1.0, 1e4).satisfied);
}

TEST_CASE("locality: zero perturbation gives K = 0 and a tight sandwich") {
  support::Rng rng(55);
  const MatrixTuple t{{rng.real_diagonal(4)}, {rng.matrix(4)}};
  const LocalityReport r = check_locality(t, rng.site(1, 1), {ComplexMatrix::Zero(4, 4)});
  CHECK(r.k_right == 0.0);
  CHECK(r.k_left == 0.0);
  CHECK(r.satisfied());
  CHECK(r.rq.lhs == doctest::Approx(r.rq.diagnostics.at("unperturbed")));
}

TEST_CASE("locality: perturbation on far sites of an eight-site chain") {
  // Positions 0.5, 1.5, ..., 7.5, probe at 0; the perturbation lives on the
  // outermost site where |Z| = 7.5.
  const int n = 8;
  ComplexMatrix x = ComplexMatrix::Zero(n, n);
  ComplexMatrix b = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    x(k, k) = k + 0.5;
    b(k, k) = cplx(0.3 * k, -0.1 * k);
  }
  const MatrixTuple t{{x}, {b}};
  const ProbeSite site{{0.0}, {cplx(0.1, 0.0)}};
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  c(n - 1, n - 1) = cplx(0.5, -0.5);
  const LocalityReport r = check_locality(t, site, {c});
  CHECK(r.k_right < 0.2);
  CHECK(r.k_left < 0.2);
  CHECK(r.z_condition == doctest::Approx(15.0));
  CHECK(r.rq.hypothesis_met);
  CHECK(r.satisfied());
  CHECK(r.rq.slack > 0.0);

  // The gaps, computed densely, stay inside the sandwich.
  MatrixTuple perturbed = t;
  perturbed.nonherm[0] += c;
  const CliffordRep rep = build_rep(1);
  const double q0 = quadratic_gaps(t, site).q;
  const double q1 = quadratic_gaps(perturbed, site).q;
  const double k = std::max(r.k_right, r.k_left);
  CHECK(q1 >= std::sqrt(1.0 - k) * q0 - 1e-12);
  CHECK(q1 <= std::sqrt(1.0 + k) * q0 + 1e-12);
  MESSAGE("radial " << clifford_radial_gap(t, site, rep) << " -> " << clifford_radial_gap(perturbed, site, rep)
                    << ", linear " << clifford_linear_gap(t, site, rep) << " -> "
                    << clifford_linear_gap(perturbed, site, rep));
}

TEST_CASE("locality: random diagonal instances") {
  support::Rng rng(56);
  int asserted = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.integer(1, 6);
    const int d1 = rng.integer(1, 3);
    MatrixTuple t;
    for (int i = 0; i < d1; ++i) t.herm.push_back(rng.real_diagonal(n));
    t.nonherm.push_back(rng.matrix(n));
    const LocalityReport r = check_locality(t, rng.site(d1, 1), {0.05 * rng.matrix(n)});
    CHECK(r.satisfied());
    asserted += r.q.hypothesis_met ? 1 : 0;
  }
  CHECK(asserted > 10);
}

TEST_CASE("locality: K scaling is logged") {
  support::Rng rng(57);
  const MatrixTuple t{{rng.real_diagonal(5)}, {rng.matrix(5)}};
  const ProbeSite site = rng.site(1, 1);
  const ComplexMatrix c = rng.matrix(5);
  for (double s : {1.0, 0.5, 0.25, 0.125}) {
    const LocalityReport r = check_locality(t, site, {s * c});
    MESSAGE("scale " << s << " K " << r.k_right);
  }
}

TEST_CASE("locality: hypothesis failures and precondition errors") {
  const MatrixTuple t{{ComplexMatrix(Eigen::Vector2cd(1.0, 2.0).asDiagonal())}, {ComplexMatrix::Identity(2, 2)}};
  const LocalityReport big = check_locality(t, ProbeSite{{0.0}, {0.0}}, {100.0 * ComplexMatrix::Ones(2, 2)});
  CHECK_FALSE(big.rq.hypothesis_met);
  CHECK(big.satisfied());

  CHECK_THROWS_AS(check_locality(t, ProbeSite{{1.0}, {0.0}}, {ComplexMatrix::Zero(2, 2)}), InputError);

  support::Rng rng(58);
  const MatrixTuple noncommuting = rng.tuple(3, 2, 1);
  CHECK_THROWS_AS(check_locality(noncommuting, rng.site(2, 1), {ComplexMatrix::Zero(3, 3)}), InputError);
  CHECK_THROWS_AS(check_locality(t, ProbeSite{{0.0}, {0.0}}, {}), InputError);
}
