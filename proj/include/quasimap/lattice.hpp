#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "quasimap/rational.hpp"

namespace qm {

using IntMat = std::vector<std::vector<mpz_class>>;  // row-major

// Row-style Hermite normal form of the lattice generated by the rows of a.
// Returns a basis (one row per lattice dimension); fewer rows than columns
// means the row span is not full rank.
IntMat hnf_row_basis(IntMat a);

// Inverse of a square rational matrix; throws on singular input.
std::vector<RatVec> rational_inverse(std::vector<RatVec> a);

std::vector<RatVec> rational_mat_mul(const std::vector<RatVec>& a,
                                     const std::vector<RatVec>& b);

// Enumerates the dual lattice  { v : <row, v> in Z  for every generator row }
// intersected with the closed rational box [lo_i, hi_i]^m. The generator rows
// must span Q^m, otherwise the set is not discrete and UnboundedBoxError is
// thrown. Calls yield(v) for each point in lexicographic order.
void enumerate_dual_lattice_in_box(
    const std::vector<std::vector<long long>>& generators,
    const std::vector<std::pair<Rational, Rational>>& box,
    const std::function<void(const RatVec&)>& yield);

}  // namespace qm
