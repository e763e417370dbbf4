#pragma once

// Physical systems as matrix tuples: a non-Hermitian two-level system and a
// honeycomb (Haldane) heterostructure flake with three concentric regions.

#include <string>
#include <vector>

#include "pseudospec/localizer.hpp"

namespace pseudospec {

struct TwoLevelParams {
  double delta_e = 0.0;
  double delta_gamma = 2.0;
  double c = 1.0;
};

/// X = diag(-1, 1), H = [[delta_e + i delta_gamma, c], [c, 0]].
MatrixTuple build_tls(const TwoLevelParams& p);

/// Couplings c at which H is defective, {+delta_gamma/2, -delta_gamma/2}
/// (a single value when they coincide). Only delta_e = 0 is supported.
std::vector<double> exceptional_point_locus(const TwoLevelParams& p);

struct RegionParams {
  double mass = 0.0;  // M
  double loss = 0.0;  // mu
  double t = 1.0;     // nearest-neighbour hopping
  double t_c = 0.0;   // next-nearest-neighbour hopping
  double phi = 0.0;   // next-nearest-neighbour phase
};

enum class Region { topological, trivial, lossy };

const char* region_name(Region r);

struct HaldaneParams {
  RegionParams topological{0.0, 0.0, 1.0, 0.5, 1.5707963267948966};
  RegionParams trivial{0.8660254037844386, 0.0, 1.0, 0.0, 0.0};
  RegionParams lossy{0.8660254037844386, 0.2, 1.0, 0.0, 0.0};
  // Region boundaries in the hexagonal norm around the central plaquette,
  // measured in units of the A-A spacing.
  double r_topo = 1.5;
  double r_trivial = 2.25;
  double r_lossy = 3.0;
  double kappa = 0.5;

  void validate() const;
};

struct LatticeSite {
  double x = 0.0;
  double y = 0.0;
  char sublattice = 'A';
  Region region = Region::topological;
};

struct LatticeModel {
  std::vector<LatticeSite> sites;
  ComplexMatrix x;  // diagonal
  ComplexMatrix y;  // diagonal
  ComplexMatrix h;

  int size() const { return static_cast<int>(sites.size()); }
};

/// Distance used for the flake shape and region boundaries:
/// max |p . u| over the unit vectors at 0, 60 and 120 degrees.
double hexagonal_norm(double x, double y);

/// Honeycomb flake centred on a plaquette, unit A-A spacing. Onsite M - i mu
/// on A and -(M + i mu) on B, Hermitian hopping -t between nearest neighbours
/// and -t_c e^{+-i phi} between next-nearest neighbours (+ for
/// counterclockwise circulation). Bonds joining two regions use the mean of
/// the two regional amplitudes.
LatticeModel build_haldane_heterostructure(const HaldaneParams& p);

/// (kappa X, kappa Y; H).
MatrixTuple scaled_tuple(const LatticeModel& model, double kappa);

/// Multiplies every Hermitian (position) matrix by kappa.
MatrixTuple scale_positions(const MatrixTuple& t, double kappa);

}  // namespace pseudospec
