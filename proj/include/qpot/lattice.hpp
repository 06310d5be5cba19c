#pragma once

#include <vector>

#include "qpot/intmatrix.hpp"

namespace qpot {

// U * M * V = D with D diagonal, d_i | d_{i+1}, d_i >= 0, U and V unimodular.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntVec invariant_factors() const;
  int rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Row-style Hermite normal form H = U * M: staircase shape, positive pivots,
// entries above each pivot reduced into [0, pivot). Zero rows trail.
struct HermiteForm {
  IntMatrix U;
  IntMatrix H;
  std::vector<int> pivot_cols;  // one per nonzero row
};

HermiteForm hermite_normal_form(const IntMatrix& m);

// Basis of the integer kernel {k : M k = 0}, saturated, HNF-canonical.
std::vector<IntVec> kernel_basis(const IntMatrix& m);

// Splitting of Z^m into a saturated kernel lattice and a complement mapping
// isomorphically onto Z^s, s = m - rank(kernel).
struct AdaptedBasis {
  std::vector<IntVec> kernel_basis;  // rank r, as supplied
  IntMatrix complement_projection;   // s x m, kills the kernel, onto Z^s
  IntMatrix change_of_basis;         // m x m, det ±1; rows = kernel then complement
};

// Throws NotSaturated (with the torsion diagonal) if the kernel lattice is
// not primitive; throws Error("InvalidKernel") on dependent input vectors.
AdaptedBasis adapted_basis(const std::vector<IntVec>& kernel, int m);

// Lattice helpers; lattices are given by generating rows.
std::vector<IntVec> lattice_canonical_basis(const std::vector<IntVec>& gens, int m);
bool lattice_equal(const std::vector<IntVec>& a, const std::vector<IntVec>& b, int m);
std::vector<IntVec> lattice_saturation(const std::vector<IntVec>& gens, int m);
std::vector<IntVec> lattice_intersection(const std::vector<IntVec>& a,
                                         const std::vector<IntVec>& b, int m);
bool lattice_is_saturated(const std::vector<IntVec>& gens, int m);

}  // namespace qpot
