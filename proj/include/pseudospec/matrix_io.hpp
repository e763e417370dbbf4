#pragma once

// Plain-text interchange: complex MatrixMarket coordinate files and the
// lattice site table.

#include <iosfwd>
#include <string>

#include "pseudospec/models.hpp"

namespace pseudospec {

/// "%%MatrixMarket matrix coordinate complex general", 1-based indices,
/// nonzero entries only, column-major order.
void write_matrix_market(std::ostream& os, const ComplexMatrix& m);
void write_matrix_market(const std::string& path, const ComplexMatrix& m);

/// Reads coordinate files with field complex, real or integer and symmetry
/// general, symmetric or hermitian. Throws InputError on malformed input.
ComplexMatrix read_matrix_market(std::istream& is);
ComplexMatrix read_matrix_market(const std::string& path);

/// index,x,y,sublattice,region
void write_sites_csv(std::ostream& os, const LatticeModel& model);

/// Writes H.mtx, X.mtx, Y.mtx and sites.csv into `directory` (created if needed).
void export_model(const std::string& directory, const LatticeModel& model);

}  // namespace pseudospec
