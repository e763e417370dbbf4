#pragma once

// Machine-checkable verdicts for the inequalities relating the linear,
// radial and quadratic gaps, and for the locality sandwich of the
// quadratic gaps under a perturbation of the non-Hermitian part.

#include <map>
#include <string>
#include <vector>

#include "pseudospec/localizer.hpp"
#include "pseudospec/spectral_kernels.hpp"

namespace pseudospec {

/// satisfied <=> lhs <= rhs + 1e-9 * scale, slack = rhs - lhs.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = true;
  double slack = 0.0;
  double scale = 1.0;
  bool hypothesis_met = true;  // false: nothing asserted
  std::map<std::string, double> diagnostics;
};

constexpr double kBoundTolerance = 1e-9;

BoundReport make_report(std::string name, double lhs, double rhs, double scale);

/// Right-hand-side ingredients, all evaluated at one probe site.
struct BoundTerms {
  int dimension = 0;            // N = dim(L)
  double nonnormal_part = 0.0;  // ||(B - nu) - (B - nu)^dagger||
  double departure = 0.0;       // Schur departure of L
  double commutators = 0.0;     // sum_{i<k} ||[A_i, A_k]||
  double f_norm = 0.0;          // ||F||

  double linear_radial() const;     // sqrt(N) * nonnormal_part + departure
  double radial_quadratic() const;  // sqrt(commutators + f_norm)
  double linear_quadratic() const { return linear_radial() + radial_quadratic(); }
};

/// `departure` is the Schur departure of L when already known; pass a
/// negative value to have it computed.
BoundTerms bound_terms(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep, double departure = -1.0);

/// The three gap comparisons at one site. lhs uses gaps computed here.
BoundReport check_linear_vs_radial(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep);
BoundReport check_radial_vs_quadratic(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep);
BoundReport check_linear_vs_quadratic(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep);

/// All three reports sharing one localizer factorization.
std::vector<BoundReport> check_gap_bounds(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep);

struct LocalityReport {
  double k_right = 0.0;     // ||Z^-1 (sum (B-nu)^dagger C + C^dagger (B-nu) + C^dagger C) Z^-1||
  double k_left = 0.0;      // same with (B-nu) C^dagger + C (B-nu)^dagger + C C^dagger
  double z_condition = 0.0; // cond(Z), Z = (sum (A_i - l_i)^2)^(1/2)
  BoundReport rq;
  BoundReport lq;
  BoundReport q;
  bool satisfied() const { return rq.satisfied && lq.satisfied && q.satisfied; }
};

/// Compares the quadratic gaps of (A, B) and (A, B + C) at the same site.
/// Requires pairwise commuting A_i and an invertible sum of squares
/// sum (A_i - l_i)^2; throws InputError otherwise. Sandwiches are asserted
/// only when the relevant K is below 1.
LocalityReport check_locality(const MatrixTuple& t, const ProbeSite& site, const std::vector<ComplexMatrix>& c);

}  // namespace pseudospec
