#pragma once

// Diagonal (Smith-style) reduction of integer relation lattices, used to put
// finite abelian groups Z^k / L into the cyclic-factor form Z/s_1 + ... + Z/s_r.

#include <cstdint>
#include <vector>

namespace taf {

using IntVec = std::vector<int64_t>;

/// Result of reducing Z^k / L.
///
/// With y = x * V for the unimodular column transform V, the lattice L becomes
/// the diagonal lattice (s_0 Z, ..., s_{k-1} Z). Coordinates with s = 1 are
/// dropped; `moduli` lists the surviving s values and `coords[j]` is the column
/// of V producing the j-th surviving coordinate. `basis[j]` is the matching
/// row of V^{-1}: an old-coordinate vector whose class generates the j-th
/// cyclic factor.
struct CyclicDecomposition {
  std::vector<int64_t> moduli;
  std::vector<IntVec> coords;
  std::vector<IntVec> basis;

  /// Residues of an old-coordinate vector in the new cyclic coordinates.
  IntVec project(const IntVec& x) const;
};

/// Diagonalizes the row lattice spanned by `relations` inside Z^rank.
///
/// Pivots are chosen by smallest magnitude so that, when the relations are
/// already aligned with the standard basis, no column operations are applied
/// and the surviving basis vectors stay standard. Throws InputError when the
/// lattice has rank below `rank` (infinite quotient).
CyclicDecomposition decompose_quotient(size_t rank, const std::vector<IntVec>& relations);

/// Row-style Hermite normal form of a rank-2 lattice in Z^2: returns (a, b, c)
/// with the lattice spanned by (a, 0) and (b, c), a >= 1, c >= 1, 0 <= b < a.
/// Throws InputError when the vectors do not span a full-rank lattice.
struct Hnf2 {
  int64_t a, b, c;
};
Hnf2 hnf2(const std::vector<IntVec>& vectors);

}  // namespace taf
