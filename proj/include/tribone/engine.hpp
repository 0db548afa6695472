#ifndef TRIBONE_ENGINE_HPP
#define TRIBONE_ENGINE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "tribone/groebner.hpp"
#include "tribone/hexlattice.hpp"
#include "tribone/invariants.hpp"

namespace tribone {

/* Outcome of a tileability decision.  The remainder is the normal form of the
 * region polynomial against the cached basis, so tileable <=> remainder = 0;
 * closed_form_check records agreement with the residue formula (mod 9 for the
 * plain question, mod 27 for the symmetric one). */
struct Verdict {
  unsigned n = 0;
  bool symmetric = false;
  bool tileable = false;
  Polynomial remainder = Polynomial(xy_vars());
  bool closed_form_check = false;
};

struct Tiling {
  unsigned region_n = 0;
  bool symmetric = false;
  std::vector<Placement> placements;
};

struct OracleReport {
  unsigned n = 0;
  bool symmetric = false;
  unsigned window_margin = 0;
  bool solvable = false;
};

/* Cached strong bases (computed once, immutable afterwards). */
const GroebnerBasis& chart_tribone_basis();      // <1+x+x^2, 1+y+y^2, 1+xy+(xy)^2>, deglex
const GroebnerBasis& invariant_tribone_basis();  // six tribone orbit sums + t-relation, lex

/* The eleven-element strong basis of the invariant tribone ideal in the form
 * it is usually quoted; generates the same ideal as invariant_tribone_basis().
 */
const std::vector<Polynomial>& printed_invariant_basis();

/* Signed tileability of the triangle of side N by the three tribone
 * orientations, via membership of the chart polynomial in the tribone ideal.
 * True exactly for N = 0, 8 (mod 9). */
Verdict signed_tileable(unsigned n);

/* Z3-symmetric signed tileability, via membership of the region invariant
 * P + dQ in the contracted ideal.  True exactly for N = 0, 26 (mod 27).
 * Throws FixedCellError for N = 1 (mod 3). */
Verdict symmetric_signed_tileable(unsigned n);

/* An explicit signed tiling assembled from the membership cofactors; throws
 * when the triangle is not tileable.  The result passes verify_tiling. */
Tiling extract_certificate(unsigned n);

/* An explicit Z3-symmetric signed tiling: each sector is a rhombus paved by
 * straight tribone rows plus a corner triangle tiled by cofactors, and the
 * sector placements are emitted together with both rotations.  Requires
 * N = 0 or 26 (mod 27). */
Tiling extract_symmetric_certificate(unsigned n);

/* Exact cover check: weighted placements sum to 1 on every cell of the
 * region and to 0 on every other cell of the plane. */
bool covers_exactly(const std::vector<Cell>& region, const std::vector<Placement>& placements);

/* Full tiling acceptance: exact cover of region_T(n), and when `symmetric`
 * is requested, invariance of the weighted placement multiset under the
 * 120-degree rotation.  n = 0 means the empty region. */
bool verify_tiling(unsigned n, const Tiling& tiling, bool symmetric);

/* Independent integer-linear-algebra oracle: enumerate every tribone
 * placement supported inside the triangle window dilated by `window_margin`,
 * and decide whether the region indicator lies in the integer column span
 * (sparse Hermite-style elimination).  The symmetric flavor restricts the
 * columns to full rotation orbits of placements.  Throws when the system
 * would exceed `column_cap` columns, and FixedCellError for the symmetric
 * question with N = 1 (mod 3). */
OracleReport oracle_signed(unsigned n, unsigned window_margin, std::size_t column_cap = 50000);
OracleReport oracle_symmetric(unsigned n, unsigned window_margin, std::size_t column_cap = 50000);

/* JSON serialization.
 * Tiling:  {"n":…, "symmetric":…, "placements":[{"type":"X","center":[p,q,s],"weight":w}, …]}
 * Verdict: {"n":…, "symmetric":…, "tileable":…, "remainder":"<polynomial>", "closed_form_check":…}
 * Oracle:  {"n":…, "symmetric":…, "window_margin":…, "solvable":…} */
std::string tiling_to_json(const Tiling& tiling);
Tiling tiling_from_json(const std::string& text);
std::string verdict_to_json(const Verdict& verdict);
std::string oracle_to_json(const OracleReport& report);

}  // namespace tribone

#endif
