#ifndef TRIBONE_HNF_HPP
#define TRIBONE_HNF_HPP

#include <map>
#include <vector>

#include "tribone/polynomial.hpp"

namespace tribone {

/* Sparse integer column: row index -> nonzero coefficient. */
using SparseColumn = std::map<int, Integer>;

struct LatticeDecision {
  bool solvable = false;
  std::size_t pivots = 0;
};

/* Decide whether target lies in the lattice spanned by the columns — i.e.
 * whether A x = b has an integer solution — by sparse Hermite-style column
 * echelon with exact arithmetic.  Unimodular column operations preserve the
 * lattice; afterwards each pivot row forces its coefficient by exact
 * division, and solvability means the fully reduced target is zero. */
LatticeDecision lattice_contains(std::vector<SparseColumn> columns, SparseColumn target);

}  // namespace tribone

#endif
